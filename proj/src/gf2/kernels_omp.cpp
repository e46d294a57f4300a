#include <omp.h>

#include <algorithm>
#include <cstdint>

#include "ldgm/errors.hpp"
#include "ldgm/gf2/kernels.hpp"
#include "ldgm/gf2/polynomial.hpp"
#include "qc_pivot.hpp"

namespace ldgm::gf2::kernels::parallel {

namespace {

// Below this many words of work per step the thread fork costs more than it saves.
constexpr std::size_t kParallelWords = 1U << 14;

}  // namespace

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("multiply: inner dimensions differ");
    }
    DenseMatrix c(a.rows(), b.cols());
    const auto rows = static_cast<std::ptrdiff_t>(a.rows());
    const std::size_t wb = b.words_per_row();
#pragma omp parallel for schedule(static) if (a.rows() * a.cols() / 64 * wb > kParallelWords)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        auto out = c.row_words(static_cast<std::size_t>(i));
        auto in = a.row_words(static_cast<std::size_t>(i));
        for (std::size_t wi = 0; wi < in.size(); ++wi) {
            std::uint64_t word = in[wi];
            while (word != 0) {
                const std::size_t j = wi * kWordBits + static_cast<std::size_t>(__builtin_ctzll(word));
                word &= word - 1;
                const std::uint64_t* src = b.row_words(j).data();
                for (std::size_t w = 0; w < wb; ++w) {
                    out[w] ^= src[w];
                }
            }
        }
    }
    return c;
}

Elimination reduce(DenseMatrix& m, std::size_t pivot_cols) {
    Elimination result;
    std::size_t row = 0;
    const std::size_t wpr = m.words_per_row();
    const bool threaded = m.rows() * wpr > kParallelWords;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        const std::size_t word = col / kWordBits;
        const std::uint64_t bit = std::uint64_t{1} << (col % kWordBits);
        std::size_t pivot = row;
        while (pivot < m.rows() && (m.row_words(pivot)[word] & bit) == 0) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        m.swap_rows(pivot, row);
        // Rows at or below `row` are zero left of `col`, so the pivot row is too.
        const std::uint64_t* src = m.row_words(row).data();
        const auto rows = static_cast<std::ptrdiff_t>(m.rows());
        std::uint64_t adds = 0;
#pragma omp parallel for schedule(static) reduction(+ : adds) if (threaded)
        for (std::ptrdiff_t i = 0; i < rows; ++i) {
            auto dst = m.row_words(static_cast<std::size_t>(i));
            if (static_cast<std::size_t>(i) == row || (dst[word] & bit) == 0) {
                continue;
            }
            for (std::size_t w = word; w < wpr; ++w) {
                dst[w] ^= src[w];
            }
            ++adds;
        }
        result.row_additions += adds;
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
    const auto block_rows = static_cast<std::ptrdiff_t>(a.block_rows());
#pragma omp parallel for schedule(dynamic) if (a.block_rows() > 1)
    for (std::ptrdiff_t si = 0; si < block_rows; ++si) {
        const auto i = static_cast<std::size_t>(si);
        for (std::size_t l = 0; l < a.block_cols(); ++l) {
            if (a.block_is_zero(i, l)) {
                continue;
            }
            const auto lhs = a.block(i, l);
            for (std::size_t j = 0; j < b.block_cols(); ++j) {
                if (!b.block_is_zero(l, j)) {
                    poly::mulmod_xor(lhs, b.block(l, j), c.block(i, j), p);
                }
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
            if (aug.block_is_zero(c, j)) {
                continue;
            }
            std::fill(tmp.begin(), tmp.end(), 0);
            poly::mulmod_xor(*inv, aug.block(c, j), tmp, p);
            std::copy(tmp.begin(), tmp.end(), aug.block(c, j).begin());
        }
        const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) if (n > 8)
        for (std::ptrdiff_t si = 0; si < rows; ++si) {
            const auto i = static_cast<std::size_t>(si);
            if (i == c || aug.block_is_zero(i, c)) {
                continue;
            }
            std::vector<std::uint64_t> factor(aug.block(i, c).begin(), aug.block(i, c).end());
            for (std::size_t j = c; j < 2 * n; ++j) {
                if (!aug.block_is_zero(c, j)) {
                    poly::mulmod_xor(factor, aug.block(c, j), aug.block(i, j), p);
                }
            }
        }
    }
    return aug.block_column_range(n, n);
}

}  // namespace ldgm::gf2::kernels::parallel
