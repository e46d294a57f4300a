#include "ldgm/gf2/qc_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ldgm/errors.hpp"
#include "ldgm/gf2/kernels.hpp"
#include "ldgm/gf2/polynomial.hpp"

namespace ldgm::gf2 {

namespace {

// Splits a vector into block-sized word groups.
std::vector<std::uint64_t> split_blocks(const BitVector& v, std::size_t blocks, std::size_t p, std::size_t wpb) {
    std::vector<std::uint64_t> out(blocks * wpb, 0);
    for (std::size_t b = 0; b < blocks; ++b) {
        const BitVector part = v.slice(b * p, p);
        std::copy(part.words().begin(), part.words().end(), out.begin() + static_cast<std::ptrdiff_t>(b * wpb));
    }
    return out;
}

BitVector join_blocks(const std::vector<std::uint64_t>& words, std::size_t blocks, std::size_t p, std::size_t wpb) {
    BitVector out(blocks * p);
    for (std::size_t b = 0; b < blocks; ++b) {
        out.assign(b * p, BitVector::from_words(p, std::span(words).subspan(b * wpb, wpb)));
    }
    return out;
}

}  // namespace

QcMatrix::QcMatrix(std::size_t block_rows, std::size_t block_cols, std::size_t p)
    : block_rows_(block_rows), block_cols_(block_cols), p_(p), wpb_(words_for(p)) {
    if (p == 0) {
        throw DimensionError("circulant block size must be positive");
    }
    data_.assign(block_rows_ * block_cols_ * wpb_, 0);
}

QcMatrix QcMatrix::identity(std::size_t blocks, std::size_t p) {
    QcMatrix m(blocks, blocks, p);
    for (std::size_t i = 0; i < blocks; ++i) {
        m.block(i, i)[0] = 1;
    }
    return m;
}

Circulant QcMatrix::circulant(std::size_t i, std::size_t j) const {
    return Circulant(BitVector::from_words(p_, block(i, j)));
}

void QcMatrix::set_block(std::size_t i, std::size_t j, const Circulant& c) {
    if (c.size() != p_) {
        throw DimensionError("set_block: block size mismatch");
    }
    std::copy(c.first_row().words().begin(), c.first_row().words().end(), block(i, j).begin());
}

bool QcMatrix::block_is_zero(std::size_t i, std::size_t j) const noexcept { return poly::is_zero(block(i, j)); }

bool QcMatrix::test(std::size_t r, std::size_t c) const noexcept {
    const std::size_t offset = ((c % p_) + p_ - (r % p_)) % p_;
    return (block(r / p_, c / p_)[offset / kWordBits] >> (offset % kWordBits)) & 1U;
}

BitVector QcMatrix::row(std::size_t r) const {
    std::vector<std::uint64_t> acc(block_cols_ * wpb_, 0);
    const std::size_t bi = r / p_;
    for (std::size_t j = 0; j < block_cols_; ++j) {
        poly::rotate_xor(block(bi, j), std::span(acc).subspan(j * wpb_, wpb_), p_, r % p_);
    }
    return join_blocks(acc, block_cols_, p_, wpb_);
}

std::size_t QcMatrix::weight() const noexcept {
    std::size_t w = 0;
    for (auto word : data_) {
        w += static_cast<std::size_t>(std::popcount(word));
    }
    return w * p_;
}

DenseMatrix QcMatrix::expand() const {
    DenseMatrix m(rows(), cols());
    for (std::size_t i = 0; i < block_rows_; ++i) {
        for (std::size_t j = 0; j < block_cols_; ++j) {
            const auto first = BitVector::from_words(p_, block(i, j)).support();
            for (auto t : first) {
                for (std::size_t ro = 0; ro < p_; ++ro) {
                    m.set(i * p_ + ro, j * p_ + (t + ro) % p_);
                }
            }
        }
    }
    return m;
}

std::optional<QcMatrix> QcMatrix::compress(const DenseMatrix& m, std::size_t p) {
    if (p == 0 || m.rows() % p != 0 || m.cols() % p != 0) {
        return std::nullopt;
    }
    QcMatrix out(m.rows() / p, m.cols() / p, p);
    for (std::size_t i = 0; i < out.block_rows_; ++i) {
        for (std::size_t j = 0; j < out.block_cols_; ++j) {
            auto blk = out.block(i, j);
            for (std::size_t t = 0; t < p; ++t) {
                if (m.test(i * p, j * p + t)) {
                    blk[t / kWordBits] |= std::uint64_t{1} << (t % kWordBits);
                }
            }
            for (std::size_t ro = 1; ro < p; ++ro) {
                for (std::size_t co = 0; co < p; ++co) {
                    const std::size_t t = (co + p - ro) % p;
                    const bool expected = (blk[t / kWordBits] >> (t % kWordBits)) & 1U;
                    if (m.test(i * p + ro, j * p + co) != expected) {
                        return std::nullopt;
                    }
                }
            }
        }
    }
    return out;
}

DenseMatrix QcMatrix::evaluate_at_one() const {
    DenseMatrix m(block_rows_, block_cols_);
    for (std::size_t i = 0; i < block_rows_; ++i) {
        for (std::size_t j = 0; j < block_cols_; ++j) {
            std::size_t w = 0;
            for (auto word : block(i, j)) {
                w += static_cast<std::size_t>(std::popcount(word));
            }
            m.set(i, j, w % 2 == 1);
        }
    }
    return m;
}

QcMatrix QcMatrix::transpose() const {
    QcMatrix t(block_cols_, block_rows_, p_);
    for (std::size_t i = 0; i < block_rows_; ++i) {
        for (std::size_t j = 0; j < block_cols_; ++j) {
            if (!block_is_zero(i, j)) {
                poly::reverse(block(i, j), t.block(j, i), p_);
            }
        }
    }
    return t;
}

std::optional<QcMatrix> QcMatrix::inverse() const {
    if (block_rows_ != block_cols_) {
        throw DimensionError("inverse: matrix is not square");
    }
    // x -> 1 is a ring homomorphism onto GF(2); a singular image proves singularity
    // before any block elimination.
    if (gf2::rank(evaluate_at_one()) < block_rows_) {
        return std::nullopt;
    }
    if (auto inv = kernels::parallel::qc_invert(*this)) {
        return inv;
    }
    if (rows() > kDenseInverseLimit) {
        return std::nullopt;
    }
    auto dense = gf2::inverse(expand());
    if (!dense) {
        return std::nullopt;
    }
    auto packed = compress(*dense, p_);
    if (!packed) {
        throw std::logic_error("inverse of a quasi-cyclic matrix lost its circulant structure");
    }
    return packed;
}

QcMatrix QcMatrix::block_column_range(std::size_t first, std::size_t count) const {
    if (first + count > block_cols_) {
        throw DimensionError("block_column_range out of range");
    }
    QcMatrix out(block_rows_, count, p_);
    for (std::size_t i = 0; i < block_rows_; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            std::copy(block(i, first + j).begin(), block(i, first + j).end(), out.block(i, j).begin());
        }
    }
    return out;
}

BitVector QcMatrix::multiply(const BitVector& v) const {
    if (v.size() != cols()) {
        throw DimensionError("qc matrix-vector: length mismatch");
    }
    std::vector<std::uint64_t> acc(block_rows_ * wpb_, 0);
    std::vector<std::uint64_t> rev(wpb_);
    const std::size_t weight = v.weight();
    if (prefer_sparse(weight, v.size())) {
        // Column t of block C is x^(t mod p) * C^T.
        for (auto t : v.support()) {
            const std::size_t bj = t / p_;
            for (std::size_t i = 0; i < block_rows_; ++i) {
                if (block_is_zero(i, bj)) {
                    continue;
                }
                poly::reverse(block(i, bj), rev, p_);
                poly::rotate_xor(rev, std::span(acc).subspan(i * wpb_, wpb_), p_, t % p_);
            }
        }
    } else {
        const auto parts = split_blocks(v, block_cols_, p_, wpb_);
        for (std::size_t i = 0; i < block_rows_; ++i) {
            for (std::size_t j = 0; j < block_cols_; ++j) {
                if (block_is_zero(i, j)) {
                    continue;
                }
                poly::reverse(block(i, j), rev, p_);
                poly::mulmod_xor(rev, std::span(parts).subspan(j * wpb_, wpb_), std::span(acc).subspan(i * wpb_, wpb_),
                                 p_);
            }
        }
    }
    return join_blocks(acc, block_rows_, p_, wpb_);
}

BitVector QcMatrix::left_multiply(const BitVector& v) const {
    if (v.size() != rows()) {
        throw DimensionError("qc vector-matrix: length mismatch");
    }
    std::vector<std::uint64_t> acc(block_cols_ * wpb_, 0);
    if (prefer_sparse(v.weight(), v.size())) {
        for (auto t : v.support()) {
            const std::size_t bi = t / p_;
            for (std::size_t j = 0; j < block_cols_; ++j) {
                if (!block_is_zero(bi, j)) {
                    poly::rotate_xor(block(bi, j), std::span(acc).subspan(j * wpb_, wpb_), p_, t % p_);
                }
            }
        }
    } else {
        const auto parts = split_blocks(v, block_rows_, p_, wpb_);
        for (std::size_t i = 0; i < block_rows_; ++i) {
            const auto vi = std::span(parts).subspan(i * wpb_, wpb_);
            if (poly::is_zero(vi)) {
                continue;
            }
            for (std::size_t j = 0; j < block_cols_; ++j) {
                if (!block_is_zero(i, j)) {
                    poly::mulmod_xor(vi, block(i, j), std::span(acc).subspan(j * wpb_, wpb_), p_);
                }
            }
        }
    }
    return join_blocks(acc, block_cols_, p_, wpb_);
}

QcMatrix& QcMatrix::operator+=(const QcMatrix& other) {
    if (other.block_rows_ != block_rows_ || other.block_cols_ != block_cols_ || other.p_ != p_) {
        throw DimensionError("qc sum: shapes differ");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] ^= other.data_[i];
    }
    return *this;
}

QcMatrix hconcat(const QcMatrix& a, const QcMatrix& b) {
    if (a.block_rows() != b.block_rows() || a.block_size() != b.block_size()) {
        throw DimensionError("qc hconcat: block rows or block size differ");
    }
    QcMatrix out(a.block_rows(), a.block_cols() + b.block_cols(), a.block_size());
    for (std::size_t i = 0; i < a.block_rows(); ++i) {
        for (std::size_t j = 0; j < a.block_cols(); ++j) {
            std::copy(a.block(i, j).begin(), a.block(i, j).end(), out.block(i, j).begin());
        }
        for (std::size_t j = 0; j < b.block_cols(); ++j) {
            std::copy(b.block(i, j).begin(), b.block(i, j).end(), out.block(i, a.block_cols() + j).begin());
        }
    }
    return out;
}

QcMatrix multiply(const QcMatrix& a, const QcMatrix& b) { return kernels::parallel::qc_multiply(a, b); }

}  // namespace ldgm::gf2
