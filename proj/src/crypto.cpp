#include "ldgm/crypto.hpp"

#include <openssl/evp.h>
#include <openssl/rand.h>
#include <openssl/sha.h>

#include <stdexcept>

#include "ldgm/util/bytes.hpp"

namespace ldgm::crypto {

std::vector<std::uint8_t> sha256(std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> out(SHA256_DIGEST_LENGTH);
    SHA256(data.data(), data.size(), out.data());
    return out;
}

std::vector<std::uint8_t> sha512(std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> out(SHA512_DIGEST_LENGTH);
    SHA512(data.data(), data.size(), out.data());
    return out;
}

Seed Seed::from_hex(std::string_view hex) {
    if (hex.size() != 64) {
        throw std::invalid_argument("seed must be 64 hex characters");
    }
    const auto raw = util::from_hex(hex);
    Seed s;
    std::copy(raw.begin(), raw.end(), s.bytes.begin());
    return s;
}

Seed Seed::from_u64(std::uint64_t v) {
    Seed s;
    for (int i = 0; i < 8; ++i) {
        s.bytes[31 - i] = static_cast<std::uint8_t>(v >> (8 * i));
    }
    return s;
}

Seed Seed::random() {
    Seed s;
    if (RAND_bytes(s.bytes.data(), static_cast<int>(s.bytes.size())) != 1) {
        throw std::runtime_error("system entropy source failed");
    }
    return s;
}

std::string Seed::hex() const { return util::to_hex(bytes); }

struct KeyStream::Impl {
    EVP_CIPHER_CTX* ctx = nullptr;
    std::array<std::uint8_t, 64> block{};
    std::size_t pos = 64;

    ~Impl() { EVP_CIPHER_CTX_free(ctx); }

    void refill() {
        static const std::array<std::uint8_t, 64> zeros{};
        int len = 0;
        if (EVP_EncryptUpdate(ctx, block.data(), &len, zeros.data(), static_cast<int>(zeros.size())) != 1 ||
            len != 64) {
            throw std::runtime_error("ChaCha20 keystream failure");
        }
        pos = 0;
    }
};

KeyStream::KeyStream(std::span<const std::uint8_t, 32> key) : impl_(std::make_unique<Impl>()) {
    impl_->ctx = EVP_CIPHER_CTX_new();
    const std::array<std::uint8_t, 16> iv{};
    if (impl_->ctx == nullptr ||
        EVP_EncryptInit_ex(impl_->ctx, EVP_chacha20(), nullptr, key.data(), iv.data()) != 1) {
        throw std::runtime_error("cannot initialise ChaCha20");
    }
}

KeyStream::KeyStream(KeyStream&&) noexcept = default;
KeyStream& KeyStream::operator=(KeyStream&&) noexcept = default;
KeyStream::~KeyStream() = default;

std::uint32_t KeyStream::next_u32() {
    if (impl_->pos + 4 > impl_->block.size()) {
        impl_->refill();
    }
    const std::uint8_t* b = impl_->block.data() + impl_->pos;
    impl_->pos += 4;
    return static_cast<std::uint32_t>(b[0]) | static_cast<std::uint32_t>(b[1]) << 8 |
           static_cast<std::uint32_t>(b[2]) << 16 | static_cast<std::uint32_t>(b[3]) << 24;
}

std::uint32_t KeyStream::uniform(std::uint64_t bound) {
    if (bound == 0 || bound > (std::uint64_t{1} << 32)) {
        throw std::invalid_argument("uniform: bound out of range");
    }
    const std::uint64_t span = std::uint64_t{1} << 32;
    const std::uint64_t limit = span - span % bound;
    for (;;) {
        const std::uint64_t v = next_u32();
        if (v < limit) {
            return static_cast<std::uint32_t>(v % bound);
        }
    }
}

KeyStream derive_stream(const Seed& seed, std::string_view label, std::uint32_t attempt) {
    util::ByteWriter w;
    w.bytes(seed.bytes);
    w.raw(label);
    w.u8(0);
    w.u32(attempt);
    const auto key = sha256(w.data());
    return KeyStream(std::span<const std::uint8_t, 32>(key.data(), 32));
}

}  // namespace ldgm::crypto
