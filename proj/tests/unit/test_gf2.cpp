#include <doctest.h>

#include "helpers.hpp"
#include "ldgm/errors.hpp"
#include "ldgm/gf2/circulant.hpp"
#include "ldgm/gf2/kernels.hpp"
#include "ldgm/gf2/matrix_io.hpp"
#include "ldgm/gf2/polynomial.hpp"

using namespace ldgm::gf2;
using namespace testing;

TEST_SUITE("gf2") {

TEST_CASE("bit vector basics") {
    const auto v = BitVector::from_string("000101");
    CHECK(v.weight() == 2);
    CHECK(v.support() == std::vector<std::uint32_t>{3, 5});
    CHECK(v.to_string() == "000101");
    CHECK((v ^ v).is_zero());
    CHECK(BitVector::from_support(6, v.support()) == v);
    CHECK(v.slice(3, 3).to_string() == "101");
    CHECK_THROWS_AS(BitVector::from_string("01x"), std::invalid_argument);
}

TEST_CASE("sparse index set sum is symmetric difference") {
    SparseIndexSet a(10, {1, 4, 7});
    SparseIndexSet b(10, {4, 9});
    CHECK((a ^ b).indices() == std::vector<std::uint32_t>{1, 7, 9});
    CHECK((a ^ b).to_dense() == (a.to_dense() ^ b.to_dense()));
}

TEST_CASE("circulant shift composition") {
    const auto x3 = Circulant::from_string("0001");
    CHECK((x3 * x3).first_row().to_string() == "0010");
}

TEST_CASE("identity times D") {
    std::mt19937_64 rng(1);
    const auto d = random_dense(7, 11, rng);
    CHECK(multiply(DenseMatrix::identity(7), d) == d);
}

TEST_CASE("qc multiply matches naive dense multiply") {
    std::mt19937_64 rng(2);
    const auto m = random_qc(3, 3, 4, rng);
    for (int t = 0; t < 20; ++t) {
        const auto v = random_vector(12, rng, t % 2 ? 0.1 : 0.5);
        CHECK(m.multiply(v) == naive_multiply(m.expand(), v));
        CHECK(m.left_multiply(v) == naive_multiply(m.expand().transpose(), v));
    }
}

TEST_CASE("inverse basics") {
    CHECK(*inverse(DenseMatrix::identity(8)) == DenseMatrix::identity(8));
    CHECK_FALSE(inverse(DenseMatrix(4, 4)).has_value());
    CHECK_FALSE(QcMatrix(2, 2, 3).inverse().has_value());
}

TEST_CASE("circulant inverse agrees with exhaustive search") {
    std::vector<std::string> rows;
    for (unsigned bits = 0; bits < 8; ++bits) {
        std::string row;
        for (int i = 0; i < 3; ++i) {
            row += ((bits >> i) & 1U) ? '1' : '0';
        }
        rows.push_back(row);
    }
    for (const auto& candidate : rows) {
        CAPTURE(candidate);
        const auto c = Circulant::from_string(candidate);
        std::vector<std::string> found;
        for (const auto& other : rows) {
            if (c * Circulant::from_string(other) == Circulant::identity(3)) {
                found.push_back(other);
            }
        }
        REQUIRE(found.size() <= 1);
        const auto inv = c.inverse();
        CHECK(inv.has_value() == !found.empty());
        if (inv) {
            CHECK(inv->first_row().to_string() == found.front());
            CHECK(multiply(c.expand(), inv->expand()) == DenseMatrix::identity(3));
        }
    }
    // 1 + x vanishes at x = 1, so 110 has no inverse; only the monomials are units for p = 3.
    CHECK_FALSE(Circulant::from_string("110").inverse().has_value());
    CHECK_FALSE(Circulant::from_string("111").inverse().has_value());
    CHECK(Circulant::from_string("010").inverse()->first_row().to_string() == "001");
    // For p = 5, x^5 - 1 = (x + 1)(x^4 + x^3 + x^2 + x + 1) and 1 + x + x^2 is a unit.
    const auto five = Circulant::from_string("11100");
    const auto five_inv = five.inverse();
    REQUIRE(five_inv.has_value());
    CHECK(five * *five_inv == Circulant::identity(5));
}

TEST_CASE("rank") {
    CHECK(rank(DenseMatrix::identity(5)) == 5);
    CHECK(rank(DenseMatrix(3, 9)) == 0);

    std::mt19937_64 rng(3);
    DenseMatrix a, b;
    do {
        a = random_dense(2, 12, rng);
        b = random_dense(2, 12, rng);
    } while (rank(a) < 2 || rank(b) < 2);
    // R[i][j] = sum_l a[l][i] b[l][j], built entry by entry.
    DenseMatrix r(12, 12);
    for (std::size_t i = 0; i < 12; ++i) {
        for (std::size_t j = 0; j < 12; ++j) {
            r.set(i, j, (a.test(0, i) && b.test(0, j)) != (a.test(1, i) && b.test(1, j)));
        }
    }
    CHECK(r == multiply(a.transpose(), b));
    auto copy = r;
    CHECK(kernels::serial::reduce(copy, 12).rank == 2);
    CHECK(rank(r) == 2);
}

TEST_CASE("transpose and addition identities") {
    std::mt19937_64 rng(4);
    const auto a = random_dense(9, 70, rng);
    CHECK(transpose(transpose(a)) == a);
    CHECK(add(a, a).is_zero());
    const auto q = random_qc(2, 3, 5, rng);
    CHECK(q.transpose().transpose() == q);
    CHECK(q.transpose().expand() == q.expand().transpose());
}

TEST_CASE("solve and kernel basis") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        const auto h = random_dense(8, 20, rng);
        const auto x = random_vector(20, rng);
        const auto b = h.multiply(x);
        const auto sol = solve(h, b);
        REQUIRE(sol.has_value());
        CHECK(h.multiply(*sol) == b);
        const auto basis = kernel_basis(h);
        CHECK(basis.rows() == 20 - rank(h));
        CHECK(rank(basis) == basis.rows());
        CHECK(multiply(h, basis.transpose()).is_zero());
    }
    // Inconsistent system.
    const auto z = DenseMatrix::from_strings({"10", "10"});
    CHECK_FALSE(solve(z, BitVector::from_string("10")).has_value());
}

TEST_CASE("qc and dense agree for small grids") {
    std::mt19937_64 rng(6);
    for (std::size_t p : {3, 4, 5}) {
        for (std::size_t n0 = 1; n0 <= 6; ++n0) {
            CAPTURE(p);
            CAPTURE(n0);
            const auto a = random_qc(n0, n0, p, rng);
            const auto b = random_qc(n0, 2, p, rng);
            CHECK(multiply(a, b).expand() == naive_product(a.expand(), b.expand()));
            CHECK(a.transpose().expand() == a.expand().transpose());
            const auto v = random_vector(n0 * p, rng);
            CHECK(a.multiply(v) == naive_multiply(a.expand(), v));

            const auto dense_inv = inverse(a.expand());
            const auto qc_inv = a.inverse();
            CHECK(dense_inv.has_value() == qc_inv.has_value());
            if (qc_inv) {
                CHECK(qc_inv->expand() == *dense_inv);
                CHECK(multiply(a, *qc_inv) == QcMatrix::identity(n0, p));
            }
            const auto back = QcMatrix::compress(a.expand(), p);
            REQUIRE(back.has_value());
            CHECK(*back == a);
        }
    }
}

TEST_CASE("evaluation at one is a ring homomorphism") {
    std::mt19937_64 rng(7);
    const auto a = random_qc(3, 4, 6, rng);
    const auto b = random_qc(4, 2, 6, rng);
    CHECK(multiply(a, b).evaluate_at_one() == multiply(a.evaluate_at_one(), b.evaluate_at_one()));
}

TEST_CASE("compress rejects non-circulant blocks") {
    auto m = DenseMatrix::identity(8);
    m.flip(0, 1);
    CHECK_FALSE(QcMatrix::compress(m, 4).has_value());
    CHECK_FALSE(QcMatrix::compress(DenseMatrix(6, 6), 4).has_value());
}

TEST_CASE("polynomial unit inverse") {
    std::mt19937_64 rng(8);
    for (std::size_t p : {1, 7, 50, 64, 65, 130}) {
        const std::size_t wpb = words_for(p);
        for (int t = 0; t < 10; ++t) {
            const auto a = random_vector(p, rng);
            const auto inv = poly::unit_inverse(a.words(), p);
            // Units of GF(2)[x]/(x^p - 1) have odd weight (x = 1 is a root otherwise).
            if (a.weight() % 2 == 0) {
                CHECK_FALSE(inv.has_value());
            }
            if (inv) {
                std::vector<std::uint64_t> prod(wpb, 0);
                poly::mulmod_xor(a.words(), *inv, prod, p);
                CHECK(BitVector::from_words(p, prod) == BitVector::from_support(p, std::vector<std::uint32_t>{0}));
            }
        }
    }
}

TEST_CASE("serial and parallel kernels agree") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 5; ++t) {
        const auto a = random_dense(90, 150, rng);
        const auto b = random_dense(150, 70, rng);
        CHECK(kernels::serial::multiply(a, b) == kernels::parallel::multiply(a, b));
        auto s = a;
        auto p = a;
        const auto es = kernels::serial::reduce(s, 150);
        const auto ep = kernels::parallel::reduce(p, 150);
        CHECK(s == p);
        CHECK(es.rank == ep.rank);
        CHECK(es.pivot_columns == ep.pivot_columns);
        CHECK(es.row_additions == ep.row_additions);

        const auto qa = random_qc(5, 5, 37, rng);
        const auto qb = random_qc(5, 3, 37, rng);
        CHECK(kernels::serial::qc_multiply(qa, qb) == kernels::parallel::qc_multiply(qa, qb));
        const auto is = kernels::serial::qc_invert(qa);
        const auto ip = kernels::parallel::qc_invert(qa);
        CHECK(is.has_value() == ip.has_value());
        if (is && ip) {
            CHECK(*is == *ip);
        }
    }
}

TEST_CASE("matrix file round trip") {
    std::mt19937_64 rng(10);
    const auto d = random_dense(5, 13, rng);
    const auto q = random_qc(2, 4, 50, rng);
    ldgm::util::ByteWriter w;
    write_matrix(w, d);
    write_matrix(w, q);
    const auto bytes = w.take();
    ldgm::util::ByteReader r(bytes);
    CHECK(read_dense(r) == d);
    CHECK(read_qc(r) == q);
    r.finish();

    SUBCASE("p = 50 rows use seven bytes") {
        ldgm::util::ByteWriter one;
        write_matrix(one, q);
        CHECK(one.data().size() == 4 + 1 + 16 + 2 * 4 * 7);
    }
    SUBCASE("truncated payload") {
        ldgm::util::ByteWriter one;
        write_matrix(one, q);
        auto cut = one.take();
        cut.pop_back();
        ldgm::util::ByteReader rr(cut);
        CHECK_THROWS_AS(read_qc(rr), ldgm::FormatError);
    }
    SUBCASE("nonzero padding bit") {
        ldgm::util::ByteWriter one;
        write_matrix(one, q);
        auto bad = one.take();
        bad[4 + 1 + 16 + 6] |= 0x80;  // bit 55 of the first 50-bit row
        ldgm::util::ByteReader rr(bad);
        CHECK_THROWS_AS(read_qc(rr), ldgm::FormatError);
    }
    SUBCASE("wrong magic") {
        auto bad = bytes;
        bad[0] = 'X';
        ldgm::util::ByteReader rr(bad);
        CHECK_THROWS_AS(read_dense(rr), ldgm::FormatError);
    }
    SUBCASE("qc kind is not dense") {
        ldgm::util::ByteWriter one;
        write_matrix(one, q);
        const auto b = one.take();
        ldgm::util::ByteReader rr(b);
        CHECK_THROWS_AS(read_dense(rr), ldgm::FormatError);
    }
}

}
