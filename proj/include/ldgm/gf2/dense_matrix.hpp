#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ldgm/gf2/bitvector.hpp"

namespace ldgm::gf2 {

/// Row-major binary matrix; each row is padded to a whole number of 64-bit words.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix from_rows(std::span<const BitVector> rows);
    static DenseMatrix from_strings(std::initializer_list<std::string_view> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return wpr_; }

    bool test(std::size_t r, std::size_t c) const noexcept {
        return (data_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value = true) noexcept {
        const std::uint64_t bit = std::uint64_t{1} << (c % kWordBits);
        auto& word = data_[r * wpr_ + c / kWordBits];
        word = value ? (word | bit) : (word & ~bit);
    }
    void flip(std::size_t r, std::size_t c) noexcept { data_[r * wpr_ + c / kWordBits] ^= std::uint64_t{1} << (c % kWordBits); }

    std::span<const std::uint64_t> row_words(std::size_t r) const noexcept { return {data_.data() + r * wpr_, wpr_}; }
    std::span<std::uint64_t> row_words(std::size_t r) noexcept { return {data_.data() + r * wpr_, wpr_}; }

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    BitVector column(std::size_t c) const;

    /// row[dst] ^= row[src]
    void add_row(std::size_t dst, std::size_t src) noexcept;
    void swap_rows(std::size_t a, std::size_t b) noexcept;

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;

    DenseMatrix transpose() const;
    /// Columns listed in `cols`, in that order.
    DenseMatrix select_columns(std::span<const std::uint32_t> cols) const;
    DenseMatrix column_range(std::size_t first, std::size_t count) const;

    /// A * v for a column vector v.
    BitVector multiply(const BitVector& v) const;
    /// v * A for a row vector v.
    BitVector left_multiply(const BitVector& v) const;

    DenseMatrix& operator+=(const DenseMatrix& other);
    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Horizontal concatenation [a | b].
DenseMatrix hconcat(const DenseMatrix& a, const DenseMatrix& b);

/// Matrix product over GF(2); throws DimensionError when inner dimensions differ.
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);

std::size_t rank(DenseMatrix a);

/// Gauss-Jordan inverse; nullopt when `a` is singular. Throws DimensionError when not square.
std::optional<DenseMatrix> inverse(const DenseMatrix& a);

/// Some x with a * x = b, or nullopt if b is outside the column space.
std::optional<BitVector> solve(const DenseMatrix& a, const BitVector& b);

/// Rows form a basis of { x : h * x = 0 }.
DenseMatrix kernel_basis(const DenseMatrix& h);

}  // namespace ldgm::gf2
