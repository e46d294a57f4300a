#pragma once

// Attack demonstrations against the signature scheme and its weakened variants. Every
// forged vector is classified by the real verifier.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ldgm/crypto.hpp"
#include "ldgm/gf2/dense_matrix.hpp"
#include "ldgm/keygen.hpp"
#include "ldgm/sign_verify.hpp"

namespace ldgm::attack {

struct TranscriptEntry {
    std::vector<std::uint8_t> message;
    gf2::BitVector s;
    std::uint32_t counter = 0;
    gf2::BitVector e_prime;
};

using Transcript = std::vector<TranscriptEntry>;

/// Signs messages "<label>-0", "<label>-1", ... with the given key and options.
Transcript collect_transcript(const keygen::PrivateKey& sk, std::size_t count, const sign::SignOptions& opts,
                              const std::string& label = "msg");

std::vector<std::uint8_t> message_bytes(const std::string& text);

struct AttackOutcome {
    bool success = false;
    /// 64-bit word operations spent in GF(2) eliminations and products.
    std::uint64_t work = 0;
    std::uint64_t iterations = 0;
    std::string note;
    /// Forged signature vector and its verdict, when the attack produces one.
    std::optional<gf2::BitVector> forgery;
    sign::Verdict verdict;
    /// Attack-specific output: recovered codewords, decomposed supports, stripped error.
    std::vector<gf2::BitVector> artifacts;
};

/// Some x with a * x = b by Gauss-Jordan, adding the word operations to `work`.
std::optional<gf2::BitVector> solve_counted(const gf2::DenseMatrix& a, const gf2::BitVector& b, std::uint64_t& work);

/// Writes the target syndrome as a sum of transcript syndromes and adds up the matching
/// signatures. Succeeds iff the verifier accepts the sum.
AttackOutcome linearity_forge(const Transcript& transcript, const sign::Verifier& verifier,
                              std::span<const std::uint8_t> target);

/// Coefficients lambda with sum lambda_i s_i = target, or nullopt.
std::optional<gf2::BitVector> syndrome_combination(const Transcript& transcript, const gf2::BitVector& target,
                                                   std::uint64_t& work);

/// f = H'^T (H' H'^T)^-1 s for the counter-0 syndrome of `message`. Fails with a note
/// when H' H'^T is singular.
class RightInverse {
public:
    explicit RightInverse(const keygen::PublicKey& pk);
    bool available() const noexcept { return gram_inv_.has_value(); }
    /// H'^T (H' H'^T)^-1 s.
    gf2::BitVector apply(const gf2::BitVector& s) const;
    std::uint64_t setup_work() const noexcept { return setup_work_; }

private:
    gf2::QcMatrix h_t_;
    std::optional<gf2::QcMatrix> gram_inv_;
    std::uint64_t setup_work_ = 0;
};

AttackOutcome right_inverse_forge(const RightInverse& ri, const sign::Verifier& verifier,
                                  std::span<const std::uint8_t> message);
AttackOutcome right_inverse_forge(const keygen::PublicKey& pk, std::span<const std::uint8_t> message);

struct DecompositionResult {
    /// For each syndrome position j: the e' positions it was mapped to (empty if unmapped).
    std::vector<std::vector<std::uint32_t>> mapping;
    std::size_t mapped_positions = 0;
    double validation_hit_rate = 0;
};

/// Support decomposition. The first three quarters of the transcript are analysed: for
/// each syndrome position j the entries with s_j = 1 are intersected, and if only j
/// survives the intersection of their syndromes, the e' positions whose frequency exceeds
/// the mean by 3 standard deviations (at most m of them) become the image of j. The last
/// quarter checks the mapping; success iff at least 90% of those signatures contain the
/// predicted support.
/// Parameters as seen through a masking ablation: permutation and identity masks have
/// m_T = m_S = 1, which is the m the decomposition should look for.
params::ParameterSet masked_view(const params::ParameterSet& ps, keygen::Masking masking);

AttackOutcome support_decompose(const Transcript& transcript, const params::ParameterSet& ps,
                                DecompositionResult* result = nullptr);

/// Information-set strip of the codeword mask from one signature: each iteration picks a
/// random k-subset J of coordinates for which H' restricted to the other r columns is
/// invertible, and solves for the e'' supported off J with H' e''^T = s. Success iff
/// weight(e'') <= m_T m_S w.
AttackOutcome isd_codeword_strip(const TranscriptEntry& entry, const keygen::PublicKey& pk,
                                 std::uint64_t budget, crypto::KeyStream& rng);

inline constexpr std::size_t kLowWeightSearchMaxN = 4096;

/// Lee-Brickell search (two-row combinations of a random systematic generator) for
/// codewords of weight <= target in the code with parity check h. Success iff the
/// collected codewords reach rank k. Refuses codes longer than kLowWeightSearchMaxN.
AttackOutcome low_weight_row_recovery(const gf2::DenseMatrix& h, std::size_t target_weight, std::uint64_t budget,
                                      crypto::KeyStream& rng);

/// Uniformly random full-rank r x n parity-check matrix, the baseline for the search above.
gf2::DenseMatrix random_parity_check(std::size_t r, std::size_t n, crypto::KeyStream& rng);

}  // namespace ldgm::attack
