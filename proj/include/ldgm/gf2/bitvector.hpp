#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ldgm::gf2 {

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept { return (bits + kWordBits - 1) / kWordBits; }

/// Mask selecting the valid bits of the last word of a `bits`-long packed sequence.
constexpr std::uint64_t tail_mask(std::size_t bits) noexcept {
    const std::size_t rem = bits % kWordBits;
    return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

/// Vectors with weight * 64 < length are handled through their support list.
constexpr bool prefer_sparse(std::size_t weight, std::size_t length) noexcept { return weight * 64 < length; }

/// Fixed-length binary vector, packed little-endian into 64-bit words.
/// Bits past size() are always zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

    /// '0'/'1' characters, index 0 first.
    static BitVector from_string(std::string_view bits);
    static BitVector from_support(std::size_t length, std::span<const std::uint32_t> support);
    static BitVector from_words(std::size_t length, std::span<const std::uint64_t> words);

    std::size_t size() const noexcept { return length_; }

    bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true) noexcept {
        const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= bit;
        } else {
            words_[i / kWordBits] &= ~bit;
        }
    }
    void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }
    void clear() noexcept;

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;
    std::vector<std::uint32_t> support() const;

    /// Parity of the bitwise AND (inner product over GF(2)).
    bool dot(const BitVector& other) const;

    BitVector slice(std::size_t offset, std::size_t length) const;
    /// Overwrite bits [offset, offset + v.size()) with v.
    void assign(std::size_t offset, const BitVector& v);

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    /// Raw word access; callers must keep the bits past size() clear.
    std::span<std::uint64_t> words() noexcept { return words_; }

    std::string to_string() const;

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Sorted, duplicate-free support of a binary vector of known length.
class SparseIndexSet {
public:
    SparseIndexSet() = default;
    SparseIndexSet(std::size_t length, std::vector<std::uint32_t> indices);
    explicit SparseIndexSet(const BitVector& v) : length_(v.size()), indices_(v.support()) {}

    std::size_t size() const noexcept { return length_; }
    std::size_t weight() const noexcept { return indices_.size(); }
    const std::vector<std::uint32_t>& indices() const noexcept { return indices_; }
    bool contains(std::uint32_t i) const;

    BitVector to_dense() const { return BitVector::from_support(length_, indices_); }

    /// Sum over GF(2): symmetric difference of supports.
    SparseIndexSet& operator^=(const SparseIndexSet& other);
    friend SparseIndexSet operator^(SparseIndexSet a, const SparseIndexSet& b) { return a ^= b; }
    friend bool operator==(const SparseIndexSet&, const SparseIndexSet&) = default;

private:
    std::size_t length_ = 0;
    std::vector<std::uint32_t> indices_;
};

}  // namespace ldgm::gf2
