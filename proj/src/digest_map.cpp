#include "ldgm/digest_map.hpp"

#include <stdexcept>

#include "ldgm/crypto.hpp"
#include "ldgm/errors.hpp"

namespace ldgm::digest {

gf2::BitVector unrank(const BigInt& index, std::size_t r, std::size_t w) {
    if (index < 0 || index >= params::binomial(r, w)) {
        throw std::out_of_range("unrank: index outside [0, C(r, w))");
    }
    gf2::BitVector v(r);
    BigInt rest = index;
    std::size_t hi = r;  // exclusive upper bound on the next element
    for (std::size_t i = w; i >= 1; --i) {
        // Largest c < hi with C(c, i) <= rest. C(c, i) is nondecreasing in c.
        std::size_t lo = i - 1;
        std::size_t top = hi - 1;
        while (lo < top) {
            const std::size_t mid = lo + (top - lo + 1) / 2;
            if (params::binomial(mid, i) <= rest) {
                lo = mid;
            } else {
                top = mid - 1;
            }
        }
        v.set(lo);
        rest -= params::binomial(lo, i);
        hi = lo;
    }
    return v;
}

BigInt rank(const gf2::BitVector& v) {
    BigInt idx = 0;
    std::size_t i = 1;
    for (auto c : v.support()) {
        idx += params::binomial(c, i++);
    }
    return idx;
}

BigInt digest_integer(std::span<const std::uint8_t> message, const params::ParameterSet& ps) {
    const auto h = ps.x > 256 ? crypto::sha512(message) : crypto::sha256(message);
    const std::size_t nbytes = (ps.x + 7) / 8;
    BigInt v = 0;
    for (std::size_t i = 0; i < nbytes; ++i) {
        v = (v << 8) | h[i];
    }
    return v >> (8 * nbytes - ps.x);
}

BigInt spread_multiplier(std::size_t bits) {
    const BigInt one = BigInt(1) << bits;
    BigInt k = (boost::multiprecision::sqrt(BigInt(5) * one * one) - one) / 2;
    return k | 1;
}

BigInt spread(const BigInt& index, std::size_t bits) {
    static thread_local std::size_t cached_bits = 0;
    static thread_local BigInt cached;
    if (cached_bits != bits) {
        cached = spread_multiplier(bits);
        cached_bits = bits;
    }
    const BigInt mask = (BigInt(1) << bits) - 1;
    return (index * cached) & mask;
}

gf2::BitVector map_to_syndrome(const BigInt& h, std::uint32_t l, const params::ParameterSet& ps) {
    return unrank(spread((h << ps.y) | BigInt(l), ps.x + ps.y), ps.r(), ps.w);
}

gf2::BitVector fold_blocks(const gf2::BitVector& s, std::size_t p) {
    gf2::BitVector out(s.size() / p);
    for (auto t : s.support()) {
        out.flip(t / p);
    }
    return out;
}

bool is_orthogonal(const gf2::DenseMatrix& b, std::size_t p, const gf2::BitVector& s) {
    return b.multiply(fold_blocks(s, p)).is_zero();
}

PublicSyndrome find_orthogonal(const BigInt& h, const gf2::DenseMatrix& b, std::size_t p,
                               const params::ParameterSet& ps) {
    const std::uint64_t limit = std::uint64_t{1} << ps.y;
    for (std::uint64_t l = 0; l < limit; ++l) {
        auto s = map_to_syndrome(h, static_cast<std::uint32_t>(l), ps);
        if (is_orthogonal(b, p, s)) {
            return {std::move(s), static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(l + 1)};
        }
    }
    throw SigningError("counter space exhausted: no syndrome orthogonal to b");
}

}  // namespace ldgm::digest
