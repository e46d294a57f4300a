#pragma once

// Message -> weight-w syndrome map: hash, append a y-bit counter, unrank the integer
// [h | l] into a weight-w vector of length r, and step the counter until the result is
// orthogonal to b.

#include <cstdint>
#include <span>

#include "ldgm/gf2/bitvector.hpp"
#include "ldgm/gf2/dense_matrix.hpp"
#include "ldgm/params.hpp"

namespace ldgm::digest {

using params::BigInt;

/// index-th weight-w subset of {0..r-1} in colexicographic order. Throws
/// std::out_of_range unless 0 <= index < C(r, w).
gf2::BitVector unrank(const BigInt& index, std::size_t r, std::size_t w);
/// Inverse of unrank.
BigInt rank(const gf2::BitVector& v);

/// The x most significant bits of SHA-256(message), or of SHA-512 when x > 256.
BigInt digest_integer(std::span<const std::uint8_t> message, const params::ParameterSet& ps);

/// Odd multiplier for spread(): floor(2^bits (sqrt 5 - 1) / 2), forced odd.
BigInt spread_multiplier(std::size_t bits);
/// i -> i * spread_multiplier(bits) mod 2^bits, a bijection on [0, 2^bits). A counter step
/// then moves the whole index instead of only its lowest combinadic digit.
BigInt spread(const BigInt& index, std::size_t bits);

/// unrank(spread(h * 2^y + l, x + y), r, w).
gf2::BitVector map_to_syndrome(const BigInt& h, std::uint32_t l, const params::ParameterSet& ps);

/// Parity of each length-p block of s (s.size() / p bits).
gf2::BitVector fold_blocks(const gf2::BitVector& s, std::size_t p);

/// (b (x) 1_{1 x p}) * s == 0. b has s.size() / p columns; p = 1 is the plain product.
bool is_orthogonal(const gf2::DenseMatrix& b, std::size_t p, const gf2::BitVector& s);

struct PublicSyndrome {
    gf2::BitVector s;
    std::uint32_t counter = 0;
    /// Counter values examined, counter + 1.
    std::uint32_t tries = 0;
};

/// Smallest counter whose syndrome passes is_orthogonal. Throws SigningError once
/// all 2^y counters are used up.
PublicSyndrome find_orthogonal(const BigInt& h, const gf2::DenseMatrix& b, std::size_t p,
                               const params::ParameterSet& ps);

}  // namespace ldgm::digest
