#include "ldgm/util/bytes.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include "ldgm/errors.hpp"

namespace ldgm::util {

void ByteReader::require(std::size_t n) const {
    if (remaining() < n) {
        throw FormatError("truncated input: need " + std::to_string(n) + " bytes, have " +
                          std::to_string(remaining()));
    }
}

std::uint8_t ByteReader::u8() {
    require(1);
    return data_[pos_++];
}

std::uint32_t ByteReader::u32() {
    require(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
        v |= static_cast<std::uint32_t>(data_[pos_++]) << (8 * i);
    }
    return v;
}

std::span<const std::uint8_t> ByteReader::bytes(std::size_t n) {
    require(n);
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
}

void ByteReader::expect(std::string_view magic) {
    auto got = bytes(magic.size());
    if (!std::equal(got.begin(), got.end(), magic.begin(), magic.end(),
                    [](std::uint8_t a, char b) { return a == static_cast<std::uint8_t>(b); })) {
        throw FormatError("bad magic, expected " + std::string(magic));
    }
}

std::string ByteReader::str(std::size_t max_len) {
    const std::uint32_t n = u32();
    if (n > max_len) {
        throw FormatError("string field too long");
    }
    auto b = bytes(n);
    return {b.begin(), b.end()};
}

void ByteReader::finish() const {
    if (remaining() != 0) {
        throw FormatError("trailing bytes after object");
    }
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s += kDigits[b >> 4];
        s += kDigits[b & 15];
    }
    return s;
}

namespace {

int nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("not a hex digit");
}

}  // namespace

std::vector<std::uint8_t> from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        throw std::invalid_argument("hex string has odd length");
    }
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
    }
    return out;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out) {
        throw std::runtime_error("write failed for " + path);
    }
}

}  // namespace ldgm::util
