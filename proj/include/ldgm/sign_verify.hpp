#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ldgm/digest_map.hpp"
#include "ldgm/gf2/bitvector.hpp"
#include "ldgm/keygen.hpp"

namespace ldgm::sign {

inline constexpr std::uint8_t kSignatureFormatVersion = 1;
inline constexpr std::uint32_t kRedrawCap = 64;

struct Signature {
    std::string set_id;
    std::uint32_t counter = 0;
    gf2::SparseIndexSet e_prime;
};

std::vector<std::uint8_t> serialize(const Signature& sig);
/// Throws FormatError. Indices must be strictly increasing and below n.
Signature parse_signature(std::span<const std::uint8_t> data);

struct SignOptions {
    /// false drops the codeword mask (c = 0); only for the linearity experiments.
    bool mask_codeword = true;
};

/// Everything the signer computed on the way to e'.
struct SignTrace {
    digest::PublicSyndrome syndrome;
    gf2::BitVector s_prime;
    gf2::BitVector e;
    gf2::BitVector c;
    std::vector<std::uint32_t> codeword_rows;
    std::uint32_t redraws = 0;
    gf2::BitVector e_prime;
};

/// e = [0_k | s'].
gf2::BitVector private_decode(const gf2::BitVector& s_prime, std::size_t k);

/// Sum of w_c / w_g distinct rows of G picked by a stream keyed from (s, counter, redraw).
/// Redraws while weight(c) <= w_c - 2 w_g; throws SigningError after kRedrawCap draws.
gf2::BitVector select_codeword(const gf2::QcMatrix& G, const gf2::BitVector& s, std::uint32_t counter,
                               const params::ParameterSet& ps, std::vector<std::uint32_t>* rows = nullptr,
                               std::uint32_t* redraws = nullptr);

/// Signature for an already computed public syndrome (the attack oracles sign syndromes
/// directly).
SignTrace sign_syndrome(const digest::PublicSyndrome& syndrome, const keygen::PrivateKey& sk,
                        const SignOptions& opts = {});

SignTrace sign_trace(std::span<const std::uint8_t> message, const keygen::PrivateKey& sk,
                     const SignOptions& opts = {});
Signature sign(std::span<const std::uint8_t> message, const keygen::PrivateKey& sk, const SignOptions& opts = {});

enum class RejectReason { none, format, weight, digest_weight, syndrome };

const char* to_string(RejectReason r);

struct Verdict {
    bool accepted = false;
    RejectReason reason = RejectReason::none;
    explicit operator bool() const noexcept { return accepted; }
};

/// Holds the public key with H'^T cached so that H' e'^T is a sparse row gather.
class Verifier {
public:
    explicit Verifier(keygen::PublicKey pk);

    const keygen::PublicKey& public_key() const noexcept { return pk_; }
    const params::ParameterSet& params() const noexcept { return ps_; }

    /// H' e'^T.
    gf2::BitVector syndrome_of(const gf2::BitVector& e_prime) const;

    Verdict verify(std::span<const std::uint8_t> message, const Signature& sig) const;
    /// Parses first; a parse failure is reject(format).
    Verdict verify_bytes(std::span<const std::uint8_t> message, std::span<const std::uint8_t> sig) const;
    /// Checks a raw vector against a known syndrome: weight bound, weight of s, then H' f^T = s.
    Verdict check(const gf2::BitVector& f, const gf2::BitVector& s) const;

private:
    keygen::PublicKey pk_;
    params::ParameterSet ps_;
    gf2::QcMatrix h_t_;
};

}  // namespace ldgm::sign
