#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "ldgm/gf2/bitvector.hpp"
#include "ldgm/gf2/dense_matrix.hpp"

namespace ldgm::gf2 {

/// p x p circulant matrix held by its first row. Row i is the first row cyclically
/// shifted right by i, so the block behaves like the polynomial sum_j row[j] x^j
/// modulo x^p - 1.
class Circulant {
public:
    Circulant() = default;
    explicit Circulant(std::size_t p) : first_row_(p) {}
    explicit Circulant(BitVector first_row) : first_row_(std::move(first_row)) {}

    static Circulant identity(std::size_t p) { return monomial(p, 0); }
    static Circulant monomial(std::size_t p, std::size_t exponent);
    static Circulant from_string(std::string_view first_row) { return Circulant(BitVector::from_string(first_row)); }

    std::size_t size() const noexcept { return first_row_.size(); }
    const BitVector& first_row() const noexcept { return first_row_; }

    bool test(std::size_t r, std::size_t c) const noexcept {
        const std::size_t p = size();
        return first_row_.test((c + p - r) % p);
    }
    std::size_t row_weight() const noexcept { return first_row_.weight(); }
    bool is_zero() const noexcept { return first_row_.is_zero(); }

    BitVector row(std::size_t r) const;
    BitVector column(std::size_t c) const;

    Circulant transpose() const;
    std::optional<Circulant> inverse() const;
    DenseMatrix expand() const;

    Circulant& operator+=(const Circulant& other);
    friend Circulant operator+(Circulant a, const Circulant& b) { return a += b; }
    friend Circulant operator*(const Circulant& a, const Circulant& b);
    friend bool operator==(const Circulant&, const Circulant&) = default;

private:
    BitVector first_row_;
};

}  // namespace ldgm::gf2
