#include <doctest.h>

#include "helpers.hpp"
#include "ldgm/cryptanalysis.hpp"
#include "ldgm/errors.hpp"

using namespace ldgm;
using namespace ldgm::attack;
using testing::bytes_of;

namespace {

params::ParameterSet toy() { return *params::find("toy-1"); }

const keygen::KeyPair& toy_key() {
    static const keygen::KeyPair kp = keygen::generate(toy(), crypto::Seed::from_u64(1));
    return kp;
}

sign::SignOptions unmasked() {
    sign::SignOptions o;
    o.mask_codeword = false;
    return o;
}

crypto::KeyStream stream(std::uint64_t n) { return crypto::derive_stream(crypto::Seed::from_u64(n), "test", 0); }

}  // namespace

TEST_SUITE("attack") {

TEST_CASE("transcripts hold valid pairs") {
    const auto& kp = toy_key();
    const sign::Verifier v(kp.pk);
    for (const auto& e : collect_transcript(kp.sk, 20, {})) {
        CHECK(v.syndrome_of(e.e_prime) == e.s);
    }
}

TEST_CASE("solve_counted counts work") {
    std::uint64_t work = 0;
    const auto a = gf2::DenseMatrix::identity(3);
    const auto x = solve_counted(a, gf2::BitVector::from_string("101"), work);
    REQUIRE(x.has_value());
    CHECK(x->to_string() == "101");
    const auto b = gf2::DenseMatrix::from_strings({"11", "11"});
    CHECK(solve_counted(b, gf2::BitVector::from_string("11"), work).has_value());
    CHECK(work > 0);
    CHECK_FALSE(solve_counted(b, gf2::BitVector::from_string("10"), work).has_value());
}

TEST_CASE("linearity forgery against the unmasked signer") {
    const auto& kp = toy_key();
    const sign::Verifier v(kp.pk);
    const auto transcript = collect_transcript(kp.sk, 64, unmasked());
    std::vector<gf2::BitVector> rows;
    for (const auto& e : transcript) {
        rows.push_back(e.s);
    }
    // b-orthogonal vectors form a subspace of dimension r - rank(b (x) 1).
    const auto span = gf2::rank(gf2::DenseMatrix::from_rows(rows));
    REQUIRE(span == toy().r() - 1);
    for (int i = 0; i < 100; ++i) {
        const auto out = linearity_forge(transcript, v, bytes_of("target-" + std::to_string(i)));
        CHECK(out.success);
        CHECK(out.success == out.verdict.accepted);
    }
    const auto empty = linearity_forge({}, v, bytes_of("target"));
    CHECK_FALSE(empty.success);
    CHECK_FALSE(empty.forgery.has_value());
    CHECK(empty.note.find("span") != std::string::npos);
}

TEST_CASE("linearity outcomes are labelled by the verifier") {
    const auto& kp = toy_key();
    const sign::Verifier v(kp.pk);
    const auto transcript = collect_transcript(kp.sk, 64, {});
    for (int i = 0; i < 50; ++i) {
        const auto m = bytes_of("target-" + std::to_string(i));
        const auto out = linearity_forge(transcript, v, m);
        REQUIRE(out.forgery.has_value());
        const auto s = digest::find_orthogonal(digest::digest_integer(m, toy()), kp.pk.b, 4, toy());
        CHECK(v.syndrome_of(*out.forgery) == s.s);
        CHECK(out.success == v.check(*out.forgery, s.s).accepted);
    }
}

TEST_CASE("right inverse forgery") {
    const auto& kp = toy_key();
    const RightInverse ri(kp.pk);
    REQUIRE(ri.available());
    const sign::Verifier v(kp.pk);
    for (int i = 0; i < 50; ++i) {
        const auto m = bytes_of("ri-" + std::to_string(i));
        const auto out = right_inverse_forge(ri, v, m);
        REQUIRE(out.forgery.has_value());
        const auto s = digest::map_to_syndrome(digest::digest_integer(m, toy()), 0, toy());
        CHECK(testing::naive_multiply(kp.pk.H_pub.expand(), *out.forgery) == s);
        CHECK(out.success == out.verdict.accepted);
    }
}

TEST_CASE("right inverse of a trivially invertible block") {
    keygen::PublicKey pk;
    pk.set_id = "toy-1";
    pk.H_pub = gf2::hconcat(gf2::QcMatrix::identity(3, 4), gf2::QcMatrix(3, 3, 4));
    pk.b = gf2::DenseMatrix::from_strings({"111"});
    const RightInverse ri(pk);
    REQUIRE(ri.available());
    const auto s = digest::unrank(17, 12, 2);
    const auto f = ri.apply(s);
    gf2::BitVector expect(24);
    expect.assign(0, s);
    CHECK(f == expect);
    CHECK(f.weight() == 2);
}

TEST_CASE("right inverse at ldgm-80 is rejected on weight") {
    const auto ps = *params::find("ldgm-80");
    // Keys whose H' H'^T is singular admit no right inverse of this form; take the first that does.
    std::optional<keygen::KeyPair> kp;
    for (std::uint64_t seed = 1; seed <= 16 && !kp; ++seed) {
        auto cand = keygen::generate(ps, crypto::Seed::from_u64(seed));
        if (RightInverse(cand.pk).available()) {
            kp = std::move(cand);
        }
    }
    REQUIRE(kp.has_value());
    const RightInverse ri(kp->pk);
    const sign::Verifier v(kp->pk);
    for (int i = 0; i < 3; ++i) {
        const auto out = right_inverse_forge(ri, v, bytes_of("ri-" + std::to_string(i)));
        REQUIRE(out.forgery.has_value());
        CHECK(out.forgery->weight() > ps.r() / 3);
        CHECK(out.verdict.reason == sign::RejectReason::weight);
        CHECK(out.note.find("syndrome matches") != std::string::npos);
    }
}

TEST_CASE("singular gram matrix is reported") {
    const auto ps = *params::find("toy-1");
    std::optional<keygen::KeyPair> kp;
    for (std::uint64_t seed = 1; seed <= 32 && !kp; ++seed) {
        auto cand = keygen::generate(ps, crypto::Seed::from_u64(seed));
        if (!RightInverse(cand.pk).available()) {
            kp = std::move(cand);
        }
    }
    REQUIRE(kp.has_value());
    const auto out = right_inverse_forge(kp->pk, bytes_of("x"));
    CHECK_FALSE(out.success);
    CHECK_FALSE(out.forgery.has_value());
    CHECK(out.note.find("singular") != std::string::npos);
}

TEST_CASE("support decomposition against permutation masking") {
    keygen::KeygenOptions opts;
    opts.masking = keygen::Masking::permutation;
    const auto kp = keygen::generate(toy(), crypto::Seed::from_u64(1), opts);
    const auto view = masked_view(toy(), opts.masking);
    // Image of syndrome position j under the private pipeline.
    auto image = [&](std::size_t j) {
        gf2::BitVector unit(12);
        unit.set(j);
        return kp.sk.S_t.left_multiply(sign::private_decode(kp.sk.apply_Q(unit), 12)).support();
    };

    const auto transcript = collect_transcript(kp.sk, 32, unmasked());
    DecompositionResult res;
    const auto out = support_decompose(transcript, view, &res);
    CHECK(res.mapped_positions > 0);
    for (std::size_t j = 0; j < 12; ++j) {
        if (!res.mapping[j].empty()) {
            CHECK(res.mapping[j] == image(j));
        }
    }
    CHECK(out.success == (res.validation_hit_rate >= 0.9));

    const auto longer = support_decompose(collect_transcript(kp.sk, 256, unmasked()), view, &res);
    CHECK(longer.success);
    CHECK(res.mapped_positions == 12);

    const auto single = support_decompose(collect_transcript(kp.sk, 1, unmasked()), view);
    CHECK_FALSE(single.success);
}

TEST_CASE("support decomposition fails against the full scheme at ldgm-80") {
    const auto ps = *params::find("ldgm-80");
    const auto kp = keygen::generate(ps, crypto::Seed::from_u64(1));
    DecompositionResult res;
    const auto out = support_decompose(collect_transcript(kp.sk, 1000, {}), ps, &res);
    CHECK_FALSE(out.success);
    CHECK(res.validation_hit_rate < 0.9);
}

TEST_CASE("isd strip") {
    const auto& kp = toy_key();
    auto rng = stream(1);
    SUBCASE("unmasked signature is already stripped") {
        const auto entry = collect_transcript(kp.sk, 1, unmasked()).front();
        const auto out = isd_codeword_strip(entry, kp.pk, 1, rng);
        CHECK(out.success);
        CHECK(out.iterations == 1);
        CHECK(out.artifacts.front() == entry.e_prime);
    }
    SUBCASE("toy with a generous budget") {
        const sign::Verifier v(kp.pk);
        for (const auto& entry : collect_transcript(kp.sk, 10, {})) {
            const auto out = isd_codeword_strip(entry, kp.pk, 1000, rng);
            REQUIRE(out.success);
            CHECK(out.artifacts.front().weight() <= 4);
            CHECK(v.syndrome_of(out.artifacts.front()) == entry.s);
        }
    }
    SUBCASE("zero budget") {
        const auto entry = collect_transcript(kp.sk, 1, {}).front();
        if (entry.e_prime.weight() > 4) {
            CHECK_FALSE(isd_codeword_strip(entry, kp.pk, 0, rng).success);
        }
    }
}

TEST_CASE("isd strip fails at ldgm-80") {
    const auto ps = *params::find("ldgm-80");
    const auto kp = keygen::generate(ps, crypto::Seed::from_u64(1));
    auto rng = stream(2);
    const auto entry = collect_transcript(kp.sk, 1, {}).front();
    const auto out = isd_codeword_strip(entry, kp.pk, 2, rng);
    CHECK_FALSE(out.success);
    CHECK(out.iterations == 2);
    CHECK(out.work > 0);
}

TEST_CASE("low-weight row recovery") {
    const auto& kp = toy_key();
    const auto h = kp.pk.H_pub.expand();
    auto rng = stream(3);
    const auto out = low_weight_row_recovery(h, 6, 1000, rng);
    REQUIRE(out.success);
    std::vector<gf2::BitVector> words;
    for (const auto& v : out.artifacts) {
        CHECK(v.weight() <= 6);
        CHECK(testing::naive_multiply(h, v).is_zero());
        words.push_back(v);
    }
    CHECK(gf2::rank(gf2::DenseMatrix::from_rows(words)) == 12);

    CHECK_FALSE(low_weight_row_recovery(h, 6, 0, rng).success);
    CHECK_THROWS_AS(low_weight_row_recovery(gf2::DenseMatrix(2, 5000), 6, 1, rng), ParameterError);

    const auto random = random_parity_check(12, 24, rng);
    CHECK(gf2::rank(random) == 12);
}

}
