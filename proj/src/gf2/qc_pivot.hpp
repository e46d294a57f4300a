#pragma once

// Pivot selection shared by the serial and parallel block Gauss-Jordan kernels.

#include <cstdint>
#include <optional>
#include <vector>

#include "ldgm/gf2/polynomial.hpp"
#include "ldgm/gf2/qc_matrix.hpp"

namespace ldgm::gf2::kernels::detail {

inline constexpr int kPivotRepairTries = 48;

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline void swap_block_rows(QcMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t j = 0; j < m.block_cols(); ++j) {
        std::swap_ranges(m.block(a, j).begin(), m.block(a, j).end(), m.block(b, j).begin());
    }
}

/// Brings a row whose entry in block column c is a unit into block row c and returns the
/// inverse of that entry. Rows above c are zero left of c.
///
/// When x^p - 1 has several distinct factors, an invertible matrix can have a column
/// without any unit entry (each entry is a unit modulo some factors only). Adding
/// pseudo-random multiples of the rows below c to row c then produces a unit with
/// probability at least prod(1 - 2^-deg f) per round. nullopt after kPivotRepairTries
/// rounds; the matrix is then singular except with negligible probability.
inline std::optional<std::vector<std::uint64_t>> select_pivot(QcMatrix& aug, std::size_t c) {
    const std::size_t n = aug.block_rows();
    const std::size_t p = aug.block_size();
    for (std::size_t i = c; i < n; ++i) {
        if (aug.block_is_zero(i, c)) {
            continue;
        }
        if (auto inv = poly::unit_inverse(aug.block(i, c), p)) {
            swap_block_rows(aug, i, c);
            return inv;
        }
    }
    std::uint64_t state = 0x5ca1ab1e00000000ULL ^ c;
    std::vector<std::uint64_t> f(aug.words_per_block());
    const std::uint64_t tail = tail_mask(p);
    for (int round = 0; round < kPivotRepairTries; ++round) {
        for (std::size_t j = c + 1; j < n; ++j) {
            if (aug.block_is_zero(j, c)) {
                continue;
            }
            for (auto& word : f) {
                word = splitmix64(state);
            }
            f.back() &= tail;
            for (std::size_t col = c; col < aug.block_cols(); ++col) {
                if (!aug.block_is_zero(j, col)) {
                    poly::mulmod_xor(f, aug.block(j, col), aug.block(c, col), p);
                }
            }
        }
        if (!aug.block_is_zero(c, c)) {
            if (auto inv = poly::unit_inverse(aug.block(c, c), p)) {
                return inv;
            }
        }
    }
    return std::nullopt;
}

}  // namespace ldgm::gf2::kernels::detail
