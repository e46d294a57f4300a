#include "ldgm/sign_verify.hpp"

#include <algorithm>

#include "ldgm/crypto.hpp"
#include "ldgm/errors.hpp"
#include "ldgm/util/bytes.hpp"

namespace ldgm::sign {

namespace {

params::ParameterSet lookup(const std::string& id) {
    auto ps = params::find(id);
    if (!ps) {
        throw FormatError("unknown parameter set '" + id + "'");
    }
    return *ps;
}

// Bits of v packed LSB-first, ceil(len/8) bytes.
void pack_bits(util::ByteWriter& w, const gf2::BitVector& v) {
    for (std::size_t byte = 0; byte < (v.size() + 7) / 8; ++byte) {
        w.u8(static_cast<std::uint8_t>(v.words()[byte / 8] >> (8 * (byte % 8))));
    }
}

}  // namespace

std::vector<std::uint8_t> serialize(const Signature& sig) {
    util::ByteWriter w;
    w.raw("LDGMSG");
    w.u8(kSignatureFormatVersion);
    w.str(sig.set_id);
    w.u32(sig.counter);
    w.u32(static_cast<std::uint32_t>(sig.e_prime.weight()));
    for (auto i : sig.e_prime.indices()) {
        w.u32(i);
    }
    return w.take();
}

Signature parse_signature(std::span<const std::uint8_t> data) {
    util::ByteReader in(data);
    in.expect("LDGMSG");
    if (in.u8() != kSignatureFormatVersion) {
        throw FormatError("unsupported signature version");
    }
    Signature sig;
    sig.set_id = in.str();
    const auto ps = lookup(sig.set_id);
    sig.counter = in.u32();
    if (ps.y < 32 && (sig.counter >> ps.y) != 0) {
        throw FormatError("counter wider than y bits");
    }
    const std::uint32_t count = in.u32();
    if (count > ps.n) {
        throw FormatError("support larger than n");
    }
    in.require(std::size_t{count} * 4);
    std::vector<std::uint32_t> idx(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        idx[i] = in.u32();
        if (idx[i] >= ps.n || (i > 0 && idx[i] <= idx[i - 1])) {
            throw FormatError("support indices must be strictly increasing and below n");
        }
    }
    in.finish();
    sig.e_prime = gf2::SparseIndexSet(ps.n, std::move(idx));
    return sig;
}

gf2::BitVector private_decode(const gf2::BitVector& s_prime, std::size_t k) {
    gf2::BitVector e(k + s_prime.size());
    e.assign(k, s_prime);
    return e;
}

gf2::BitVector select_codeword(const gf2::QcMatrix& G, const gf2::BitVector& s, std::uint32_t counter,
                               const params::ParameterSet& ps, std::vector<std::uint32_t>* rows,
                               std::uint32_t* redraws) {
    const std::size_t count = ps.mask_rows();
    const std::size_t floor = ps.w_c > 2 * ps.w_g ? ps.w_c - 2 * ps.w_g : 0;
    std::vector<std::uint32_t> picked;
    for (std::uint32_t redraw = 0; redraw < kRedrawCap; ++redraw) {
        util::ByteWriter w;
        pack_bits(w, s);
        w.u32(counter);
        w.u32(redraw);
        const auto key = crypto::sha256(w.data());
        crypto::KeyStream rng(std::span<const std::uint8_t, 32>(key.data(), 32));

        picked.clear();
        gf2::BitVector c(G.cols());
        while (picked.size() < count) {
            const auto row = rng.uniform(G.rows());
            if (std::find(picked.begin(), picked.end(), row) == picked.end()) {
                picked.push_back(row);
                c ^= G.row(row);
            }
        }
        if (c.weight() > floor) {
            if (rows != nullptr) {
                *rows = picked;
            }
            if (redraws != nullptr) {
                *redraws = redraw;
            }
            return c;
        }
    }
    throw SigningError("codeword redraw cap reached");
}

SignTrace sign_syndrome(const digest::PublicSyndrome& syndrome, const keygen::PrivateKey& sk,
                        const SignOptions& opts) {
    const auto& ps = sk.ps;
    SignTrace t;
    t.syndrome = syndrome;
    t.s_prime = sk.apply_Q(syndrome.s);
    t.e = private_decode(t.s_prime, ps.k);
    if (opts.mask_codeword) {
        t.c = select_codeword(sk.G, syndrome.s, syndrome.counter, ps, &t.codeword_rows, &t.redraws);
    } else {
        t.c = gf2::BitVector(ps.n);
    }
    // (e + c) S^T, gathered from the rows of S^T on the support of e + c.
    t.e_prime = sk.S_t.left_multiply(t.e ^ t.c);
    return t;
}

SignTrace sign_trace(std::span<const std::uint8_t> message, const keygen::PrivateKey& sk, const SignOptions& opts) {
    const auto h = digest::digest_integer(message, sk.ps);
    return sign_syndrome(digest::find_orthogonal(h, sk.b, sk.block_size(), sk.ps), sk, opts);
}

Signature sign(std::span<const std::uint8_t> message, const keygen::PrivateKey& sk, const SignOptions& opts) {
    const auto t = sign_trace(message, sk, opts);
    return {sk.ps.id, t.syndrome.counter, gf2::SparseIndexSet(t.e_prime)};
}

const char* to_string(RejectReason r) {
    switch (r) {
        case RejectReason::none:
            return "none";
        case RejectReason::format:
            return "format";
        case RejectReason::weight:
            return "weight";
        case RejectReason::digest_weight:
            return "digest-weight";
        case RejectReason::syndrome:
            return "syndrome";
    }
    return "unknown";
}

Verifier::Verifier(keygen::PublicKey pk) : pk_(std::move(pk)), ps_(lookup(pk_.set_id)), h_t_(pk_.H_pub.transpose()) {}

gf2::BitVector Verifier::syndrome_of(const gf2::BitVector& e_prime) const { return h_t_.left_multiply(e_prime); }

Verdict Verifier::check(const gf2::BitVector& f, const gf2::BitVector& s) const {
    if (f.size() != ps_.n || s.size() != ps_.r()) {
        return {false, RejectReason::format};
    }
    if (f.weight() > ps_.signature_weight_bound()) {
        return {false, RejectReason::weight};
    }
    if (s.weight() != ps_.w) {
        return {false, RejectReason::digest_weight};
    }
    if (syndrome_of(f) != s) {
        return {false, RejectReason::syndrome};
    }
    return {true, RejectReason::none};
}

Verdict Verifier::verify(std::span<const std::uint8_t> message, const Signature& sig) const {
    if (sig.set_id != ps_.id || sig.e_prime.size() != ps_.n || (ps_.y < 32 && (sig.counter >> ps_.y) != 0)) {
        return {false, RejectReason::format};
    }
    if (sig.e_prime.weight() > ps_.signature_weight_bound()) {
        return {false, RejectReason::weight};
    }
    const auto s_hat = digest::map_to_syndrome(digest::digest_integer(message, ps_), sig.counter, ps_);
    return check(sig.e_prime.to_dense(), s_hat);
}

Verdict Verifier::verify_bytes(std::span<const std::uint8_t> message, std::span<const std::uint8_t> sig) const {
    Signature parsed;
    try {
        parsed = parse_signature(sig);
    } catch (const FormatError&) {
        return {false, RejectReason::format};
    }
    return verify(message, parsed);
}

}  // namespace ldgm::sign
