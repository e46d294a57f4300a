#pragma once

// Arithmetic in GF(2)[x] / (x^p - 1) on packed coefficient words (bit j = coefficient of x^j).
// All spans hold words_for(p) words; outputs are accumulated with XOR unless noted.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ldgm::gf2::poly {

/// Carry-less 64x64 -> 128 bit product.
void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) noexcept;

/// out ^= x^shift * a  (cyclic rotation by `shift` positions)
void rotate_xor(std::span<const std::uint64_t> a, std::span<std::uint64_t> out, std::size_t p, std::size_t shift);

/// out ^= a * b
void mulmod_xor(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b, std::span<std::uint64_t> out,
                std::size_t p);

/// out = a(x^-1); corresponds to transposing the circulant.
void reverse(std::span<const std::uint64_t> a, std::span<std::uint64_t> out, std::size_t p);

bool is_zero(std::span<const std::uint64_t> a) noexcept;

/// Multiplicative inverse in the ring, or nullopt if a shares a factor with x^p - 1.
std::optional<std::vector<std::uint64_t>> unit_inverse(std::span<const std::uint64_t> a, std::size_t p);

}  // namespace ldgm::gf2::poly
