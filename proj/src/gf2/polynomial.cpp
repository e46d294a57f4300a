#include "ldgm/gf2/polynomial.hpp"

#include <algorithm>
#include <bit>

#include "ldgm/gf2/bitvector.hpp"

namespace ldgm::gf2::poly {

namespace {

__extension__ using u128 = unsigned __int128;

// Folds a product of degree < 2p - 1 (held in `prod`) into out, modulo x^p - 1.
void fold_xor(std::span<const std::uint64_t> prod, std::span<std::uint64_t> out, std::size_t p) {
    const std::size_t w = out.size();
    const std::uint64_t mask = tail_mask(p);
    for (std::size_t t = 0; t < w; ++t) {
        out[t] ^= (t + 1 == w) ? (prod[t] & mask) : prod[t];
    }
    const std::size_t q = p / kWordBits;
    const std::size_t s = p % kWordBits;
    for (std::size_t t = 0; t < w; ++t) {
        const std::size_t idx = t + q;
        std::uint64_t v = idx < prod.size() ? prod[idx] >> s : 0;
        if (s != 0 && idx + 1 < prod.size()) {
            v |= prod[idx + 1] << (kWordBits - s);
        }
        if (t + 1 == w) {
            v &= mask;
        }
        out[t] ^= v;
    }
}

std::vector<std::uint64_t>& scratch(std::size_t words) {
    thread_local std::vector<std::uint64_t> buf;
    buf.assign(words, 0);
    return buf;
}

int degree(const std::vector<std::uint64_t>& v) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] != 0) {
            return static_cast<int>(i * kWordBits) + 63 - std::countl_zero(v[i]);
        }
    }
    return -1;
}

// dst ^= src << s
void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src, std::size_t s) {
    const std::size_t q = s / kWordBits;
    const std::size_t b = s % kWordBits;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] == 0) {
            continue;
        }
        if (i + q < dst.size()) {
            dst[i + q] ^= src[i] << b;
        }
        if (b != 0 && i + q + 1 < dst.size()) {
            dst[i + q + 1] ^= src[i] >> (kWordBits - b);
        }
    }
}

}  // namespace

void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) noexcept {
    u128 table[16];
    table[0] = 0;
    table[1] = b;
    for (unsigned t = 2; t < 16; ++t) {
        table[t] = (t & 1U) ? (table[t - 1] ^ b) : (table[t / 2] << 1);
    }
    u128 acc = 0;
    for (int shift = 60; shift >= 0; shift -= 4) {
        acc = (acc << 4) ^ table[(a >> shift) & 15U];
    }
    lo = static_cast<std::uint64_t>(acc);
    hi = static_cast<std::uint64_t>(acc >> 64);
}

void rotate_xor(std::span<const std::uint64_t> a, std::span<std::uint64_t> out, std::size_t p, std::size_t shift) {
    shift %= p;
    if (a.size() == 1) {
        const std::uint64_t v = a[0];
        std::uint64_t r = v << shift;
        if (shift != 0) {
            r |= v >> (p - shift);
        }
        out[0] ^= r & tail_mask(p);
        return;
    }
    const std::size_t w = a.size();
    auto& tmp = scratch(2 * w + 1);
    const std::size_t q = shift / kWordBits;
    const std::size_t b = shift % kWordBits;
    for (std::size_t i = 0; i < w; ++i) {
        tmp[i + q] ^= a[i] << b;
        if (b != 0) {
            tmp[i + q + 1] ^= a[i] >> (kWordBits - b);
        }
    }
    fold_xor(tmp, out, p);
}

void mulmod_xor(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b, std::span<std::uint64_t> out,
                std::size_t p) {
    const std::size_t w = a.size();
    if (w == 1) {
        std::uint64_t lo = 0;
        std::uint64_t hi = 0;
        clmul64(a[0], b[0], lo, hi);
        const std::uint64_t prod[2] = {lo, hi};
        fold_xor(prod, out, p);
        return;
    }
    auto& prod = scratch(2 * w);
    for (std::size_t j = 0; j < w; ++j) {
        if (b[j] == 0) {
            continue;
        }
        for (std::size_t i = 0; i < w; ++i) {
            if (a[i] == 0) {
                continue;
            }
            std::uint64_t lo = 0;
            std::uint64_t hi = 0;
            clmul64(a[i], b[j], lo, hi);
            prod[i + j] ^= lo;
            prod[i + j + 1] ^= hi;
        }
    }
    fold_xor(prod, out, p);
}

void reverse(std::span<const std::uint64_t> a, std::span<std::uint64_t> out, std::size_t p) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t wi = 0; wi < a.size(); ++wi) {
        std::uint64_t word = a[wi];
        while (word != 0) {
            const std::size_t j = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
            const std::size_t k = (p - j) % p;
            out[k / kWordBits] |= std::uint64_t{1} << (k % kWordBits);
            word &= word - 1;
        }
    }
}

bool is_zero(std::span<const std::uint64_t> a) noexcept {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::vector<std::uint64_t>> unit_inverse(std::span<const std::uint64_t> a, std::size_t p) {
    const std::size_t cap = words_for(2 * p + 2);
    std::vector<std::uint64_t> r0(cap, 0);
    std::vector<std::uint64_t> r1(cap, 0);
    std::vector<std::uint64_t> t0(cap, 0);
    std::vector<std::uint64_t> t1(cap, 0);
    r0[0] = 1;
    r0[p / kWordBits] |= std::uint64_t{1} << (p % kWordBits);
    std::copy(a.begin(), a.end(), r1.begin());
    t1[0] = 1;

    while (degree(r1) >= 0) {
        const int d1 = degree(r1);
        for (int d0 = degree(r0); d0 >= d1; d0 = degree(r0)) {
            const auto s = static_cast<std::size_t>(d0 - d1);
            xor_shifted(r0, r1, s);
            xor_shifted(t0, t1, s);
        }
        std::swap(r0, r1);
        std::swap(t0, t1);
    }
    if (degree(r0) != 0) {
        return std::nullopt;
    }
    std::vector<std::uint64_t> inv(words_for(p), 0);
    for (int d = degree(t0); d >= 0; --d) {
        const auto j = static_cast<std::size_t>(d);
        if ((t0[j / kWordBits] >> (j % kWordBits)) & 1U) {
            const std::size_t k = j % p;
            inv[k / kWordBits] ^= std::uint64_t{1} << (k % kWordBits);
        }
    }
    return inv;
}

}  // namespace ldgm::gf2::poly
