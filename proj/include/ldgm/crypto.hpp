#pragma once

// Hashing and the deterministic keystream behind every random choice in keygen and
// signing. Both come from OpenSSL's libcrypto.

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ldgm::crypto {

std::vector<std::uint8_t> sha256(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> sha512(std::span<const std::uint8_t> data);

/// 32-byte master seed.
struct Seed {
    std::array<std::uint8_t, 32> bytes{};

    /// Exactly 64 hex characters; throws std::invalid_argument otherwise.
    static Seed from_hex(std::string_view hex);
    /// Big-endian in the last eight bytes, so from_u64(1) prints as 00...01.
    static Seed from_u64(std::uint64_t v);
    /// Drawn from the operating system entropy source.
    static Seed random();

    std::string hex() const;
    friend bool operator==(const Seed&, const Seed&) = default;
};

/// ChaCha20 keystream (zero nonce) read as little-endian 32-bit words.
class KeyStream {
public:
    explicit KeyStream(std::span<const std::uint8_t, 32> key);
    KeyStream(KeyStream&&) noexcept;
    KeyStream& operator=(KeyStream&&) noexcept;
    ~KeyStream();

    std::uint32_t next_u32();
    /// Uniform in [0, bound) by rejection; bound must be in [1, 2^32].
    std::uint32_t uniform(std::uint64_t bound);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Stream keyed by SHA-256(seed || label || 0x00 || attempt as u32 LE).
KeyStream derive_stream(const Seed& seed, std::string_view label, std::uint32_t attempt);

}  // namespace ldgm::crypto
