#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ldgm/gf2/bitvector.hpp"
#include "ldgm/gf2/circulant.hpp"
#include "ldgm/gf2/dense_matrix.hpp"

namespace ldgm::gf2 {

inline constexpr std::size_t kDenseInverseLimit = 4096;

/// Grid of p x p circulant blocks, stored as first rows (words_for(p) words per block,
/// row-major over the grid). With p = 1 this degenerates to an ordinary binary matrix.
class QcMatrix {
public:
    QcMatrix() = default;
    QcMatrix(std::size_t block_rows, std::size_t block_cols, std::size_t p);

    static QcMatrix identity(std::size_t blocks, std::size_t p);

    std::size_t block_rows() const noexcept { return block_rows_; }
    std::size_t block_cols() const noexcept { return block_cols_; }
    std::size_t block_size() const noexcept { return p_; }
    std::size_t words_per_block() const noexcept { return wpb_; }
    std::size_t rows() const noexcept { return block_rows_ * p_; }
    std::size_t cols() const noexcept { return block_cols_ * p_; }
    /// Number of bits needed to describe the matrix: one first row per block.
    std::size_t storage_bits() const noexcept { return block_rows_ * block_cols_ * p_; }

    std::span<const std::uint64_t> block(std::size_t i, std::size_t j) const noexcept {
        return {data_.data() + (i * block_cols_ + j) * wpb_, wpb_};
    }
    std::span<std::uint64_t> block(std::size_t i, std::size_t j) noexcept {
        return {data_.data() + (i * block_cols_ + j) * wpb_, wpb_};
    }
    Circulant circulant(std::size_t i, std::size_t j) const;
    void set_block(std::size_t i, std::size_t j, const Circulant& c);
    bool block_is_zero(std::size_t i, std::size_t j) const noexcept;

    bool test(std::size_t r, std::size_t c) const noexcept;

    BitVector row(std::size_t r) const;
    std::size_t weight() const noexcept;

    DenseMatrix expand() const;
    /// Re-packs a dense matrix whose p x p blocks are all circulant; nullopt otherwise.
    static std::optional<QcMatrix> compress(const DenseMatrix& m, std::size_t p);

    /// Block grid with each circulant replaced by the parity of its first row.
    DenseMatrix evaluate_at_one() const;

    QcMatrix transpose() const;
    /// A singular image at x = 1 is reported at once. Otherwise ring Gauss-Jordan over the
    /// blocks; if that finds no invertible pivot, matrices up to kDenseInverseLimit rows are
    /// settled by dense elimination and larger ones are reported singular (wrong only with
    /// negligible probability, see the kernels).
    std::optional<QcMatrix> inverse() const;

    /// Block columns [first, first + count).
    QcMatrix block_column_range(std::size_t first, std::size_t count) const;

    /// A * v for a column vector v.
    BitVector multiply(const BitVector& v) const;
    /// v * A for a row vector v; sparse v is handled as a sum of rows.
    BitVector left_multiply(const BitVector& v) const;

    QcMatrix& operator+=(const QcMatrix& other);
    friend QcMatrix operator+(QcMatrix a, const QcMatrix& b) { return a += b; }
    friend bool operator==(const QcMatrix&, const QcMatrix&) = default;

private:
    std::size_t block_rows_ = 0;
    std::size_t block_cols_ = 0;
    std::size_t p_ = 1;
    std::size_t wpb_ = 1;
    std::vector<std::uint64_t> data_;
};

/// [a | b] along block columns.
QcMatrix hconcat(const QcMatrix& a, const QcMatrix& b);

/// Block product over the circulant ring; throws DimensionError on mismatched grids or p.
QcMatrix multiply(const QcMatrix& a, const QcMatrix& b);

}  // namespace ldgm::gf2
