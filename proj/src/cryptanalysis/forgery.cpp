#include "ldgm/cryptanalysis.hpp"

#include "ldgm/errors.hpp"

namespace ldgm::attack {

std::optional<gf2::BitVector> syndrome_combination(const Transcript& transcript, const gf2::BitVector& target,
                                                   std::uint64_t& work) {
    if (transcript.empty()) {
        return std::nullopt;
    }
    std::vector<gf2::BitVector> rows;
    rows.reserve(transcript.size());
    for (const auto& e : transcript) {
        rows.push_back(e.s);
    }
    // Columns of the system are the transcript syndromes.
    const auto a = gf2::DenseMatrix::from_rows(rows).transpose();
    return solve_counted(a, target, work);
}

AttackOutcome linearity_forge(const Transcript& transcript, const sign::Verifier& verifier,
                              std::span<const std::uint8_t> target) {
    AttackOutcome out;
    const auto& ps = verifier.params();
    const auto& pk = verifier.public_key();
    digest::PublicSyndrome syn;
    try {
        syn = digest::find_orthogonal(digest::digest_integer(target, ps), pk.b, pk.block_size(), ps);
    } catch (const SigningError&) {
        out.note = "no b-orthogonal syndrome for the target message";
        return out;
    }
    out.iterations = 1;
    const auto lambda = syndrome_combination(transcript, syn.s, out.work);
    if (!lambda) {
        out.note = "target syndrome is outside the span of the transcript";
        return out;
    }
    gf2::BitVector f(ps.n);
    for (auto i : lambda->support()) {
        f ^= transcript[i].e_prime;
    }
    out.work += lambda->weight() * gf2::words_for(ps.n);
    out.verdict = verifier.verify(target, sign::Signature{ps.id, syn.counter, gf2::SparseIndexSet(f)});
    out.success = out.verdict.accepted;
    out.note = "combined " + std::to_string(lambda->weight()) + " signatures, forged weight " +
               std::to_string(f.weight()) + ", verdict " + sign::to_string(out.verdict.reason);
    out.forgery = std::move(f);
    return out;
}

RightInverse::RightInverse(const keygen::PublicKey& pk) : h_t_(pk.H_pub.transpose()) {
    const auto gram = gf2::multiply(pk.H_pub, h_t_);
    gram_inv_ = gram.inverse();
    // Block products and one block inversion, counted as clmul word pairs.
    const std::uint64_t r0 = pk.H_pub.block_rows();
    const std::uint64_t n0 = pk.H_pub.block_cols();
    const std::uint64_t wpb = pk.H_pub.words_per_block();
    setup_work_ = (r0 * n0 * r0 + 2 * r0 * r0 * r0) * wpb * wpb;
}

gf2::BitVector RightInverse::apply(const gf2::BitVector& s) const {
    if (!gram_inv_) {
        throw std::logic_error("right inverse unavailable: H' H'^T is singular");
    }
    return h_t_.multiply(gram_inv_->multiply(s));
}

AttackOutcome right_inverse_forge(const RightInverse& ri, const sign::Verifier& verifier,
                                  std::span<const std::uint8_t> message) {
    AttackOutcome out;
    out.work = ri.setup_work();
    if (!ri.available()) {
        out.note = "H' H'^T is singular; no right inverse of this form";
        return out;
    }
    const auto& ps = verifier.params();
    const auto s = digest::map_to_syndrome(digest::digest_integer(message, ps), 0, ps);
    auto f = ri.apply(s);
    out.iterations = 1;
    out.verdict = verifier.check(f, s);
    out.success = out.verdict.accepted;
    const bool solves = verifier.syndrome_of(f) == s;
    out.note = std::string("forged weight ") + std::to_string(f.weight()) + " (bound " +
               std::to_string(ps.signature_weight_bound()) + "), syndrome " + (solves ? "matches" : "MISMATCH") +
               ", verdict " + sign::to_string(out.verdict.reason);
    out.forgery = std::move(f);
    return out;
}

AttackOutcome right_inverse_forge(const keygen::PublicKey& pk, std::span<const std::uint8_t> message) {
    return right_inverse_forge(RightInverse(pk), sign::Verifier(pk), message);
}

}  // namespace ldgm::attack
