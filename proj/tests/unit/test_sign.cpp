#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "ldgm/errors.hpp"
#include "ldgm/sign_verify.hpp"

using namespace ldgm;
using namespace ldgm::sign;
using testing::bytes_of;

namespace {

params::ParameterSet toy() { return *params::find("toy-1"); }

const keygen::KeyPair& toy_key() {
    static const keygen::KeyPair kp = keygen::generate(toy(), crypto::Seed::from_u64(1));
    return kp;
}

}  // namespace

TEST_SUITE("sign") {

TEST_CASE("private decode pads with zeros") {
    CHECK(private_decode(gf2::BitVector(12), 12).is_zero());
    const auto e = private_decode(gf2::BitVector::from_support(12, std::vector<std::uint32_t>{2}), 12);
    CHECK(e.support() == std::vector<std::uint32_t>{14});

    const auto& sk = toy_key().sk;
    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
        const auto s = testing::random_vector(12, rng);
        CHECK(testing::naive_multiply(sk.H.expand(), private_decode(s, 12)) == s);
    }
}

TEST_CASE("codeword mask") {
    const auto& sk = toy_key().sk;
    const auto H = sk.H.expand();
    for (std::uint32_t i = 0; i < 30; ++i) {
        const auto s = digest::unrank(i, 12, 2);
        std::vector<std::uint32_t> rows;
        const auto c = select_codeword(sk.G, s, 0, toy(), &rows);
        CHECK(testing::naive_multiply(H, c).is_zero());
        CHECK(rows.size() == 2);
        CHECK(c.weight() > 0);
        CHECK(select_codeword(sk.G, s, 0, toy()) == c);
    }
    SUBCASE("one row") {
        auto ps = toy();
        ps.w_c = ps.w_g;
        const auto c = select_codeword(sk.G, digest::unrank(3, 12, 2), 0, ps);
        CHECK(c.weight() == ps.w_g);
        bool is_row = false;
        for (std::size_t r = 0; r < sk.G.rows(); ++r) {
            is_row |= sk.G.row(r) == c;
        }
        CHECK(is_row);
    }
    SUBCASE("disjoint rows add up to w_c") {
        auto ps = toy();
        ps.k = 4;
        gf2::QcMatrix G(4, 24, 1);
        for (std::uint32_t r = 0; r < 4; ++r) {
            for (std::uint32_t j = 0; j < 3; ++j) {
                G.block(r, 3 * r + j)[0] = 1;
            }
        }
        for (std::uint32_t i = 0; i < 10; ++i) {
            CHECK(select_codeword(G, digest::unrank(i, 12, 2), i, ps).weight() == ps.w_c);
        }
    }
}

TEST_CASE("signing is deterministic and bounded") {
    const auto& sk = toy_key().sk;
    const auto m = bytes_of("hello");
    CHECK(serialize(sign::sign(m, sk)) == serialize(sign::sign(m, sk)));
    for (int i = 0; i < 200; ++i) {
        const auto sig = sign::sign(bytes_of("m" + std::to_string(i)), sk);
        CHECK(sig.e_prime.weight() <= 16);
    }
}

TEST_CASE("identity pipeline returns the padded syndrome") {
    keygen::KeygenOptions opts;
    opts.masking = keygen::Masking::identity;
    const auto kp = keygen::generate(toy(), crypto::Seed::from_u64(1), opts);
    SignOptions plain;
    plain.mask_codeword = false;
    const auto t = sign_trace(bytes_of("x"), kp.sk, plain);
    CHECK(t.e_prime == private_decode(t.syndrome.s, 12));
}

TEST_CASE("round trips") {
    for (auto form : {keygen::Form::qc, keygen::Form::generic}) {
        keygen::KeygenOptions opts;
        opts.form = form;
        // Seed 1 finds an invertible leftmost block within the retry cap in both forms.
        const auto kp = keygen::generate(toy(), crypto::Seed::from_u64(1), opts);
        const Verifier v(kp.pk);
        for (int i = 0; i < 100; ++i) {
            const auto m = bytes_of("round-" + std::to_string(i));
            const auto sig = sign::sign(m, kp.sk);
            CHECK(v.verify(m, sig).accepted);
            CHECK(v.verify_bytes(m, serialize(sig)).accepted);
            // Four digest bits: other messages share the digest one time in sixteen.
            const auto other = bytes_of("other-" + std::to_string(i));
            if (digest::digest_integer(other, toy()) != digest::digest_integer(m, toy())) {
                CHECK_FALSE(v.verify(other, sig).accepted);
            }
        }
    }
}

TEST_CASE("flipping any signature position is rejected") {
    const auto& kp = toy_key();
    const Verifier v(kp.pk);
    for (int i = 0; i < 20; ++i) {
        const auto m = bytes_of("flip-" + std::to_string(i));
        const auto sig = sign::sign(m, kp.sk);
        for (std::uint32_t pos = 0; pos < 24; ++pos) {
            auto forged = sig;
            forged.e_prime ^= gf2::SparseIndexSet(24, {pos});
            const auto verdict = v.verify(m, forged);
            CHECK_FALSE(verdict.accepted);
        }
    }
}

TEST_CASE("signature files") {
    const auto& kp = toy_key();
    const Verifier v(kp.pk);
    const auto m = bytes_of("file");
    const auto bytes = serialize(sign::sign(m, kp.sk));
    CHECK(parse_signature(bytes).e_prime == sign::sign(m, kp.sk).e_prime);
    for (std::size_t cut = 0; cut < bytes.size(); ++cut) {
        const auto verdict = v.verify_bytes(m, std::span(bytes).first(cut));
        CHECK_FALSE(verdict.accepted);
        CHECK(verdict.reason == RejectReason::format);
    }
    for (std::size_t bit = 0; bit < bytes.size() * 8; ++bit) {
        auto bad = bytes;
        bad[bit / 8] ^= static_cast<std::uint8_t>(1U << (bit % 8));
        CHECK_FALSE(v.verify_bytes(m, bad).accepted);
    }
    auto trailing = bytes;
    trailing.push_back(0);
    CHECK(v.verify_bytes(m, trailing).reason == RejectReason::format);
}

TEST_CASE("reject reasons") {
    const auto& kp = toy_key();
    const Verifier v(kp.pk);
    const auto m = bytes_of("why");
    auto sig = sign::sign(m, kp.sk);

    auto wrong_set = sig;
    wrong_set.set_id = "ldgm-80";
    CHECK(v.verify(m, wrong_set).reason == RejectReason::format);

    auto big_counter = sig;
    big_counter.counter = 1U << 2;
    CHECK(v.verify(m, big_counter).reason == RejectReason::format);

    std::vector<std::uint32_t> all(17);
    std::iota(all.begin(), all.end(), 0U);
    auto heavy = sig;
    heavy.e_prime = gf2::SparseIndexSet(24, all);
    CHECK(v.verify(m, heavy).reason == RejectReason::weight);

    const auto f = sig.e_prime.to_dense();
    CHECK(v.check(f, gf2::BitVector::from_string("111000000000")).reason == RejectReason::digest_weight);
    CHECK(v.check(f, v.syndrome_of(f)).accepted == (v.syndrome_of(f).weight() == 2));
}

TEST_CASE("ldgm-80 round trip") {
    const auto ps = *params::find("ldgm-80");
    const auto kp = keygen::generate(ps, crypto::Seed::from_u64(1));
    const Verifier v(kp.pk);
    for (int i = 0; i < 5; ++i) {
        const auto m = bytes_of("big-" + std::to_string(i));
        const auto sig = sign::sign(m, kp.sk);
        CHECK(sig.e_prime.weight() <= 1602);
        CHECK(v.verify(m, sig).accepted);
        auto forged = sig;
        forged.e_prime ^= gf2::SparseIndexSet(ps.n, {7});
        CHECK(v.verify(m, forged).reason == RejectReason::syndrome);
    }
}

}
