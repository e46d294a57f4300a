#include "ldgm/gf2/circulant.hpp"

#include "ldgm/errors.hpp"
#include "ldgm/gf2/polynomial.hpp"

namespace ldgm::gf2 {

Circulant Circulant::monomial(std::size_t p, std::size_t exponent) {
    Circulant c(p);
    c.first_row_.set(exponent % p);
    return c;
}

BitVector Circulant::row(std::size_t r) const {
    BitVector out(size());
    poly::rotate_xor(first_row_.words(), out.words(), size(), r);
    return out;
}

BitVector Circulant::column(std::size_t c) const {
    // Column c of C is row c of C^T.
    return transpose().row(c);
}

Circulant Circulant::transpose() const {
    Circulant t(size());
    poly::reverse(first_row_.words(), t.first_row_.words(), size());
    return t;
}

std::optional<Circulant> Circulant::inverse() const {
    auto inv = poly::unit_inverse(first_row_.words(), size());
    if (!inv) {
        return std::nullopt;
    }
    return Circulant(BitVector::from_words(size(), *inv));
}

DenseMatrix Circulant::expand() const {
    DenseMatrix m(size(), size());
    for (std::size_t r = 0; r < size(); ++r) {
        m.set_row(r, row(r));
    }
    return m;
}

Circulant& Circulant::operator+=(const Circulant& other) {
    if (other.size() != size()) {
        throw DimensionError("circulant sum: block sizes differ");
    }
    first_row_ ^= other.first_row_;
    return *this;
}

Circulant operator*(const Circulant& a, const Circulant& b) {
    if (a.size() != b.size()) {
        throw DimensionError("circulant product: block sizes differ");
    }
    Circulant out(a.size());
    poly::mulmod_xor(a.first_row_.words(), b.first_row_.words(), out.first_row_.words(), a.size());
    return out;
}

}  // namespace ldgm::gf2
