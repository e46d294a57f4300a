#include "ldgm/gf2/bitvector.hpp"

#include <algorithm>
#include <bit>

#include "ldgm/errors.hpp"

namespace ldgm::gf2 {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

BitVector BitVector::from_support(std::size_t length, std::span<const std::uint32_t> support) {
    BitVector v(length);
    for (auto i : support) {
        if (i >= length) {
            throw DimensionError("support index out of range");
        }
        v.set(i);
    }
    return v;
}

BitVector BitVector::from_words(std::size_t length, std::span<const std::uint64_t> words) {
    BitVector v(length);
    const std::size_t n = std::min(words.size(), v.words_.size());
    std::copy_n(words.begin(), n, v.words_.begin());
    if (!v.words_.empty()) {
        v.words_.back() &= tail_mask(length);
    }
    return v;
}

void BitVector::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

std::size_t BitVector::weight() const noexcept {
    std::size_t w = 0;
    for (auto word : words_) {
        w += static_cast<std::size_t>(std::popcount(word));
    }
    return w;
}

bool BitVector::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::uint32_t> BitVector::support() const {
    std::vector<std::uint32_t> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t word = words_[wi];
        while (word != 0) {
            const int b = std::countr_zero(word);
            out.push_back(static_cast<std::uint32_t>(wi * kWordBits + static_cast<std::size_t>(b)));
            word &= word - 1;
        }
    }
    return out;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.length_ != length_) {
        throw DimensionError("dot: length mismatch");
    }
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        acc ^= words_[i] & other.words_[i];
    }
    return (std::popcount(acc) & 1) != 0;
}

BitVector BitVector::slice(std::size_t offset, std::size_t length) const {
    if (offset + length > length_) {
        throw DimensionError("slice out of range");
    }
    BitVector out(length);
    const std::size_t shift = offset % kWordBits;
    const std::size_t base = offset / kWordBits;
    for (std::size_t i = 0; i < out.words_.size(); ++i) {
        std::uint64_t lo = base + i < words_.size() ? words_[base + i] : 0;
        std::uint64_t hi = base + i + 1 < words_.size() ? words_[base + i + 1] : 0;
        out.words_[i] = shift == 0 ? lo : (lo >> shift) | (hi << (kWordBits - shift));
    }
    if (!out.words_.empty()) {
        out.words_.back() &= tail_mask(length);
    }
    return out;
}

void BitVector::assign(std::size_t offset, const BitVector& v) {
    if (offset + v.size() > length_) {
        throw DimensionError("assign out of range");
    }
    // Word-aligned fast path covers every caller that concatenates blocks of 64k bits.
    if (offset % kWordBits == 0) {
        const std::size_t base = offset / kWordBits;
        const std::size_t full = v.size() / kWordBits;
        std::copy_n(v.words_.begin(), full, words_.begin() + static_cast<std::ptrdiff_t>(base));
        for (std::size_t i = full * kWordBits; i < v.size(); ++i) {
            set(offset + i, v.test(i));
        }
        return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        set(offset + i, v.test(i));
    }
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.length_ != length_) {
        throw DimensionError("xor: length mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    if (other.length_ != length_) {
        throw DimensionError("and: length mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (test(i)) {
            s[i] = '1';
        }
    }
    return s;
}

SparseIndexSet::SparseIndexSet(std::size_t length, std::vector<std::uint32_t> indices)
    : length_(length), indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw std::invalid_argument("SparseIndexSet: duplicate index");
    }
    if (!indices_.empty() && indices_.back() >= length_) {
        throw DimensionError("SparseIndexSet: index out of range");
    }
}

bool SparseIndexSet::contains(std::uint32_t i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

SparseIndexSet& SparseIndexSet::operator^=(const SparseIndexSet& other) {
    if (other.length_ != length_) {
        throw DimensionError("sparse xor: length mismatch");
    }
    std::vector<std::uint32_t> merged;
    merged.reserve(indices_.size() + other.indices_.size());
    std::set_symmetric_difference(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                                  std::back_inserter(merged));
    indices_ = std::move(merged);
    return *this;
}

}  // namespace ldgm::gf2
