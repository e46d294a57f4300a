#pragma once

#include <random>
#include <string>
#include <vector>

#include "ldgm/gf2/dense_matrix.hpp"
#include "ldgm/gf2/qc_matrix.hpp"

namespace testing {

using ldgm::gf2::BitVector;
using ldgm::gf2::DenseMatrix;
using ldgm::gf2::QcMatrix;

inline BitVector random_vector(std::size_t n, std::mt19937_64& rng, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v.set(i, bit(rng));
    }
    return v;
}

inline DenseMatrix random_dense(std::size_t rows, std::size_t cols, std::mt19937_64& rng, double density = 0.5) {
    DenseMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        m.set_row(r, random_vector(cols, rng, density));
    }
    return m;
}

inline QcMatrix random_qc(std::size_t br, std::size_t bc, std::size_t p, std::mt19937_64& rng,
                          double density = 0.5) {
    QcMatrix m(br, bc, p);
    for (std::size_t i = 0; i < br; ++i) {
        for (std::size_t j = 0; j < bc; ++j) {
            m.set_block(i, j, ldgm::gf2::Circulant(random_vector(p, rng, density)));
        }
    }
    return m;
}

// Bit-by-bit products with no packing, used as oracles.
inline BitVector naive_multiply(const DenseMatrix& m, const BitVector& v) {
    BitVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        bool acc = false;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            acc ^= m.test(r, c) && v.test(c);
        }
        out.set(r, acc);
    }
    return out;
}

inline DenseMatrix naive_product(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            bool acc = false;
            for (std::size_t l = 0; l < a.cols(); ++l) {
                acc ^= a.test(i, l) && b.test(l, j);
            }
            out.set(i, j, acc);
        }
    }
    return out;
}

inline std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

}  // namespace testing
