#include "ldgm/errors.hpp"
#include "ldgm/gf2/kernels.hpp"
#include "ldgm/gf2/polynomial.hpp"
#include "qc_pivot.hpp"

#include <algorithm>

namespace ldgm::gf2::kernels::serial {

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("multiply: inner dimensions differ");
    }
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto out = c.row_words(i);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.test(i, j)) {
                continue;
            }
            auto src = b.row_words(j);
            for (std::size_t w = 0; w < out.size(); ++w) {
                out[w] ^= src[w];
            }
        }
    }
    return c;
}

Elimination reduce(DenseMatrix& m, std::size_t pivot_cols) {
    Elimination result;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && !m.test(pivot, col)) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        m.swap_rows(pivot, row);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != row && m.test(i, col)) {
                m.add_row(i, row);
                ++result.row_additions;
            }
        }
        result.pivot_columns.push_back(col);
        ++row;
    }
    result.rank = row;
    return result;
}

QcMatrix qc_multiply(const QcMatrix& a, const QcMatrix& b) {
    if (a.block_cols() != b.block_rows() || a.block_size() != b.block_size()) {
        throw DimensionError("qc multiply: block grids do not conform");
    }
    const std::size_t p = a.block_size();
    QcMatrix c(a.block_rows(), b.block_cols(), p);
    for (std::size_t i = 0; i < a.block_rows(); ++i) {
        for (std::size_t j = 0; j < b.block_cols(); ++j) {
            for (std::size_t l = 0; l < a.block_cols(); ++l) {
                poly::mulmod_xor(a.block(i, l), b.block(l, j), c.block(i, j), p);
            }
        }
    }
    return c;
}

std::optional<QcMatrix> qc_invert(const QcMatrix& a) {
    if (a.block_rows() != a.block_cols()) {
        throw DimensionError("qc invert: matrix is not square");
    }
    const std::size_t n = a.block_rows();
    const std::size_t p = a.block_size();
    const std::size_t wpb = a.words_per_block();
    QcMatrix aug = hconcat(a, QcMatrix::identity(n, p));
    std::vector<std::uint64_t> tmp(wpb);

    for (std::size_t c = 0; c < n; ++c) {
        const auto inv = detail::select_pivot(aug, c);
        if (!inv) {
            return std::nullopt;
        }
        for (std::size_t j = c; j < 2 * n; ++j) {
            std::fill(tmp.begin(), tmp.end(), 0);
            poly::mulmod_xor(*inv, aug.block(c, j), tmp, p);
            std::copy(tmp.begin(), tmp.end(), aug.block(c, j).begin());
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug.block_is_zero(i, c)) {
                continue;
            }
            std::vector<std::uint64_t> factor(aug.block(i, c).begin(), aug.block(i, c).end());
            for (std::size_t j = c; j < 2 * n; ++j) {
                poly::mulmod_xor(factor, aug.block(c, j), aug.block(i, j), p);
            }
        }
    }
    return aug.block_column_range(n, n);
}

}  // namespace ldgm::gf2::kernels::serial
