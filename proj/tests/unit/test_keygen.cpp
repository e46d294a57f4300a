#include <doctest.h>

#include "helpers.hpp"
#include "ldgm/digest_map.hpp"
#include "ldgm/errors.hpp"
#include "ldgm/gf2/matrix_io.hpp"
#include "ldgm/keygen.hpp"

using namespace ldgm;
using namespace ldgm::keygen;

namespace {

params::ParameterSet toy() { return *params::find("toy-1"); }

const KeyPair& toy_key() {
    static const KeyPair kp = generate(toy(), crypto::Seed::from_u64(1));
    return kp;
}

std::vector<std::size_t> row_weights(const gf2::DenseMatrix& m) {
    std::vector<std::size_t> w;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        w.push_back(m.row(r).weight());
    }
    return w;
}

}  // namespace

TEST_SUITE("keygen") {

TEST_CASE("toy generator shape") {
    const auto& G = toy_key().sk.G;
    CHECK(G.block_rows() == 3);
    CHECK(G.block_cols() == 6);
    CHECK(G.block_size() == 4);
    const auto dense = G.expand();
    for (auto w : row_weights(dense)) {
        CHECK(w == 3);
    }
    CHECK(gf2::rank(dense) == 12);
}

TEST_CASE("degenerate row weight is rejected") {
    auto ps = toy();
    ps.w_g = ps.n;
    auto rng = crypto::derive_stream(crypto::Seed::from_u64(1), "t", 0);
    CHECK_THROWS_AS(generate_ldgm(ps, ps.p, rng), ParameterError);
}

TEST_CASE("same seed, same key") {
    const auto again = generate(toy(), crypto::Seed::from_u64(1));
    CHECK(again.sk.G == toy_key().sk.G);
    CHECK(again.sk.S == toy_key().sk.S);
    CHECK(serialize(again.sk) == serialize(toy_key().sk));
    CHECK(serialize(again.pk) == serialize(toy_key().pk));
    const auto other = generate(toy(), crypto::Seed::from_u64(2));
    CHECK(serialize(other.pk) != serialize(toy_key().pk));
}

TEST_CASE("systematic parity") {
    std::mt19937_64 rng(1);
    const auto D = testing::random_qc(2, 3, 5, rng);
    const auto G = gf2::hconcat(gf2::QcMatrix::identity(2, 5), D);
    const auto X = derive_systematic_parity(G);
    REQUIRE(X.has_value());
    CHECK(*X == D.transpose());
    CHECK(parity_matrix(*X).expand() == gf2::hconcat(D.expand().transpose(), gf2::DenseMatrix::identity(15)));

    auto singular = G;
    singular.set_block(0, 0, gf2::Circulant(gf2::BitVector(5)));
    singular.set_block(1, 0, gf2::Circulant(gf2::BitVector(5)));
    CHECK_FALSE(derive_systematic_parity(singular).has_value());
}

TEST_CASE("toy key invariants") {
    const auto& sk = toy_key().sk;
    const auto ps = toy();
    const auto H = sk.H.expand();
    CHECK(testing::naive_product(sk.G.expand(), H.transpose()).is_zero());
    CHECK(H.column_range(ps.k, ps.r()) == gf2::DenseMatrix::identity(ps.r()));

    // R = (a^T b) (x) J_p, built entry by entry.
    gf2::DenseMatrix R(ps.r(), ps.r());
    for (std::size_t i = 0; i < ps.r(); ++i) {
        for (std::size_t j = 0; j < ps.r(); ++j) {
            bool v = false;
            for (std::size_t l = 0; l < ps.z; ++l) {
                v ^= sk.a.test(l, i / ps.p) && sk.b.test(l, j / ps.p);
            }
            R.set(i, j, v);
        }
    }
    CHECK(weight_control_rank_part(sk.a, sk.b, ps.p).expand() == R);
    CHECK(gf2::rank(R) <= ps.z);
    const auto Q = sk.Q();
    CHECK(Q.expand() == R + sk.T.expand());
    CHECK(gf2::multiply(Q, sk.Q_inv) == gf2::QcMatrix::identity(ps.r0(), ps.p));
    CHECK(gf2::multiply(sk.S, sk.S_inv) == gf2::QcMatrix::identity(ps.n0(), ps.p));

    for (auto w : row_weights(sk.T.expand())) {
        CHECK(w == ps.m_T);
    }
    for (auto w : row_weights(sk.T.expand().transpose())) {
        CHECK(w == ps.m_T);
    }
    const auto sw = row_weights(sk.S.expand());
    double mean = 0;
    for (auto w : sw) {
        CHECK(w >= ps.m_S - 1);
        CHECK(w <= ps.m_S);
        mean += static_cast<double>(w);
    }
    mean /= static_cast<double>(sw.size());
    CHECK(mean > ps.m_S - 1);

    for (std::size_t c = 0; c < sk.b.cols(); ++c) {
        CHECK_FALSE(sk.b.column(c).is_zero());
    }
}

TEST_CASE("Q acts as T on b-orthogonal syndromes") {
    const auto& sk = toy_key().sk;
    const auto ps = toy();
    const auto Q = sk.Q();
    std::size_t orthogonal = 0;
    for (unsigned i = 0; i < 66; ++i) {
        const auto s = digest::unrank(i, ps.r(), ps.w);
        CHECK(sk.apply_Q(s) == Q.multiply(s));
        if (!digest::is_orthogonal(sk.b, ps.p, s)) {
            continue;
        }
        ++orthogonal;
        CHECK(Q.multiply(s) == sk.T.multiply(s));
        CHECK(Q.multiply(s).weight() <= ps.m_T * ps.w);
        CHECK(Q.multiply(s) == testing::naive_multiply(sk.T.expand(), s));
    }
    CHECK(orthogonal > 0);
}

TEST_CASE("constraint matrix never has a zero column") {
    for (std::uint32_t a = 0; a < 40; ++a) {
        auto rng = crypto::derive_stream(crypto::Seed::from_u64(7), "b", a);
        const auto b = random_constraint_matrix(2, 30, rng, true);
        CHECK(gf2::rank(b) == 2);
        for (std::size_t c = 0; c < b.cols(); ++c) {
            CHECK_FALSE(b.column(c).is_zero());
        }
    }
}

TEST_CASE("masking variants") {
    SUBCASE("identity masking publishes H") {
        KeygenOptions opts;
        opts.masking = Masking::identity;
        const auto kp = generate(toy(), crypto::Seed::from_u64(1), opts);
        CHECK(kp.pk.H_pub == kp.sk.H);
        CHECK_FALSE(kp.warnings.empty());
    }
    SUBCASE("permutation masking has unit weights") {
        KeygenOptions opts;
        opts.masking = Masking::permutation;
        const auto kp = generate(toy(), crypto::Seed::from_u64(1), opts);
        CHECK(kp.sk.a.is_zero());
        for (auto w : row_weights(kp.sk.S.expand())) {
            CHECK(w == 1);
        }
        for (auto w : row_weights(kp.sk.T.expand())) {
            CHECK(w == 1);
        }
    }
    SUBCASE("m_S = 1 warns") {
        auto ps = toy();
        ps.m_S = 1;
        const auto kp = generate(ps, crypto::Seed::from_u64(1));
        REQUIRE(kp.warnings.size() == 1);
        CHECK(kp.warnings.front().find("m_S = 1") != std::string::npos);
    }
    SUBCASE("generic form") {
        KeygenOptions opts;
        opts.form = Form::generic;
        const auto kp = generate(toy(), crypto::Seed::from_u64(1), opts);
        CHECK(kp.pk.H_pub.block_size() == 1);
        CHECK(kp.pk.H_pub.rows() == 12);
        CHECK(testing::naive_product(kp.sk.G.expand(), kp.sk.H.expand().transpose()).is_zero());
        const auto parsed = parse_private(serialize(kp.sk));
        CHECK(parsed.G == kp.sk.G);
    }
}

TEST_CASE("key files") {
    const auto& kp = toy_key();
    const auto sk_bytes = serialize(kp.sk);
    const auto pk_bytes = serialize(kp.pk);
    const auto sk = parse_private(sk_bytes);
    CHECK(serialize(sk) == sk_bytes);
    CHECK(sk.H == kp.sk.H);
    CHECK(sk.S_t == kp.sk.S_t);
    const auto pk = parse_public(pk_bytes);
    CHECK(pk.H_pub == kp.pk.H_pub);
    CHECK(pk.b == kp.pk.b);

    for (std::size_t cut : {std::size_t{0}, std::size_t{5}, pk_bytes.size() / 2, pk_bytes.size() - 1}) {
        CHECK_THROWS_AS(parse_public(std::span(pk_bytes).first(cut)), FormatError);
    }
    auto trailing = pk_bytes;
    trailing.push_back(0);
    CHECK_THROWS_AS(parse_public(trailing), FormatError);
    CHECK_THROWS_AS(parse_private(pk_bytes), FormatError);
    auto version = pk_bytes;
    version[6] = 9;
    CHECK_THROWS_AS(parse_public(version), FormatError);
}

TEST_CASE("ldgm-80 public key payload") {
    const auto ps = *params::find("ldgm-80");
    const auto kp = generate(ps, crypto::Seed::from_u64(1));
    const auto& H = kp.pk.H_pub;
    CHECK(H.block_rows() * H.block_cols() * H.block_size() == 960400);
    CHECK(H.block_rows() * H.block_cols() * H.block_size() == params::key_size_bits(ps));
    util::ByteWriter alone;
    gf2::write_matrix(alone, H);
    // Matrix header is 21 bytes; each 50-bit first row takes 7 bytes.
    CHECK(alone.data().size() == 21 + 98 * 196 * 7);
}

}
