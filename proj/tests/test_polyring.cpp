#include "hopfring/polyring.hpp"

#include <doctest.h>

#include <random>
#include <thread>

using namespace hopfring;

namespace {

GradedRing conic_ring() {
    return GradedRing(3, {parse_poly("x0*x2-x1^2", 3)});
}

GradedRing twisted_cubic_ring() {
    return GradedRing(4, {parse_poly("x0*x2-x1^2", 4), parse_poly("x1*x3-x2^2", 4),
                          parse_poly("x0*x3-x1*x2", 4)});
}

}  // namespace

TEST_CASE("monomial enumeration") {
    auto m = sym_monomials(2, 2);
    REQUIRE(m.size() == 3);
    CHECK(m[0] == ExponentVector{2, 0});
    CHECK(m[1] == ExponentVector{1, 1});
    CHECK(m[2] == ExponentVector{0, 2});

    CHECK(sym_monomials(3, 0) == std::vector<ExponentVector>{{0, 0, 0}});
    CHECK(sym_dim(3, 2) == 6);
    CHECK(sym_monomials(3, 2).size() == 6);
    CHECK(sym_dim(1, 9) == 1);

    // descending lex throughout
    auto big = sym_monomials(3, 4);
    for (size_t i = 0; i + 1 < big.size(); ++i) CHECK(big[i] > big[i + 1]);
}

TEST_CASE("polynomial parsing") {
    Polynomial p = parse_poly("x0*x2-x1^2", 3);
    REQUIRE(p.terms.size() == 2);
    CHECK(p.terms.at({1, 0, 1}) == Rational(1));
    CHECK(p.terms.at({0, 2, 0}) == Rational(-1));
    CHECK(to_string(p) == "x0*x2-x1^2");

    Polynomial q = parse_poly("2*x0^2 + 3*x1*x1 - x0*x1", 2);
    CHECK(q.terms.at({2, 0}) == Rational(2));
    CHECK(q.terms.at({0, 2}) == Rational(3));
    CHECK(q.terms.at({1, 1}) == Rational(-1));
    CHECK(to_string(q) == "2*x0^2-x0*x1+3*x1^2");

    CHECK(parse_poly("-x0+x0", 1).is_zero());
    CHECK(to_string(parse_poly("-2*x1^3", 2)) == "-2*x1^3");
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_poly("", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x0++x1", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("y0", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("5", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x0^0", 2), ParseError);

    try {
        parse_poly("x3", 3);
        FAIL("expected out-of-range variable to throw");
    } catch (const ParseError& e) {
        CHECK(e.pos == 1);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
    try {
        parse_poly("3/2*x0", 2);
        FAIL("expected non-integer coefficient to throw");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("non-integer") != std::string::npos);
    }
}

TEST_CASE("free ring dimensions and products") {
    GradedRing ring = GradedRing::free_ring(2);
    CHECK(ring.dim(0) == 1);
    CHECK(ring.dim(3) == 4);
    CHECK(ring.dim(7) == 8);
    CHECK(ring.basis(3).size() == 4);

    GradedRing line = GradedRing::free_ring(1);
    for (int d = 0; d <= 8; ++d) CHECK(line.dim(d) == 1);

    // x^2 * xy = x^3 y: basis(2) = [x^2, xy, y^2], basis(3) = [x^3, x^2y, xy^2, y^3]
    SparseVec prod = ring.multiply(2, {{0, Rational(1)}}, 1, {{1, Rational(1)}});
    CHECK(prod == SparseVec{{1, Rational(1)}});
}

TEST_CASE("quadric cone quotient") {
    GradedRing ring = conic_ring();
    CHECK(ring.dim(0) == 1);
    CHECK(ring.dim(1) == 3);
    CHECK(ring.dim(2) == 5);
    CHECK(ring.dim(3) == 7);

    // 6 - 1 at d=2, 10 - 3 at d=3
    CHECK(ring.ideal_piece(2).rows == 1);
    CHECK(ring.ideal_piece(3).rows == 3);

    // the basis drops the pivot monomial x0*x2
    auto b2 = ring.basis(2);
    REQUIRE(b2.size() == 5);
    CHECK(b2[0] == ExponentVector{2, 0, 0});
    CHECK(b2[1] == ExponentVector{1, 1, 0});
    CHECK(b2[2] == ExponentVector{0, 2, 0});
    CHECK(b2[3] == ExponentVector{0, 1, 1});
    CHECK(b2[4] == ExponentVector{0, 0, 2});

    // x * z reduces to y^2
    SparseVec xz = ring.multiply(1, {{0, Rational(1)}}, 1, {{2, Rational(1)}});
    CHECK(xz == SparseVec{{2, Rational(1)}});

    // Hilbert function of the cone over a plane conic: 2d+1, checked two ways
    for (int d = 1; d <= 6; ++d) {
        CHECK(ring.dim(d) == 2 * d + 1);
        CHECK(static_cast<long long>(ring.dim(d)) == sym_dim(3, d) - ring.ideal_piece(d).rows);
    }
}

TEST_CASE("twisted cubic cone quotient") {
    GradedRing ring = twisted_cubic_ring();
    // classical Hilbert function of the degree-3 rational normal cone
    for (int d = 1; d <= 6; ++d) CHECK(ring.dim(d) == 3 * d + 1);

    // x1*x3 = x2^2 and x0*x3 = x1*x2 hold in the quotient
    SparseVec a = ring.multiply(1, {{1, Rational(1)}}, 1, {{3, Rational(1)}});
    SparseVec b = ring.multiply(1, {{2, Rational(1)}}, 1, {{2, Rational(1)}});
    CHECK(a == b);
}

TEST_CASE("ring validation") {
    CHECK_THROWS_AS(GradedRing(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(GradedRing(2, {parse_poly("x0+x1^2", 2)}), std::invalid_argument);

    // zero relations are dropped
    GradedRing ring(2, {parse_poly("x0-x0", 2)});
    CHECK(ring.relations().empty());
    CHECK(ring.is_free());

    GradedRing conic = conic_ring();
    CHECK_THROWS_AS(conic.reduce(2, Polynomial::monomial({1, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(conic.reduce(1, Polynomial::monomial({1, 1})), std::invalid_argument);
}

TEST_CASE("reduce and lift round trip") {
    GradedRing ring = conic_ring();
    std::mt19937_64 rng(7u);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 1 + static_cast<int>(rng() % 4);
        SparseVec v;
        for (int i = 0; i < ring.dim(d); ++i) {
            long c = static_cast<long>(rng() % 5) - 2;
            if (c != 0) v.emplace_back(i, Rational(c));
        }
        CHECK(ring.reduce(d, ring.lift(d, v)) == v);
    }
}

TEST_CASE("products commute and associate in the quotient") {
    GradedRing ring = conic_ring();
    std::mt19937_64 rng(11u);
    auto random_elt = [&](int d) {
        SparseVec v;
        for (int i = 0; i < ring.dim(d); ++i) {
            long c = static_cast<long>(rng() % 5) - 2;
            if (c != 0) v.emplace_back(i, Rational(c));
        }
        return v;
    };
    for (int trial = 0; trial < 15; ++trial) {
        SparseVec a = random_elt(1), b = random_elt(1), c = random_elt(2);
        CHECK(ring.multiply(1, a, 1, b) == ring.multiply(1, b, 1, a));
        SparseVec ab_c = ring.multiply(2, ring.multiply(1, a, 1, b), 2, c);
        SparseVec a_bc = ring.multiply(1, a, 3, ring.multiply(1, b, 2, c));
        CHECK(ab_c == a_bc);
    }
}

TEST_CASE("degree cache is safe under concurrent access") {
    GradedRing ring = conic_ring();
    std::vector<std::thread> threads;
    std::vector<int> sums(4, 0);
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&ring, &sums, t] {
            int s = 0;
            for (int d = 0; d <= 8; ++d) s += ring.dim(d);
            sums[t] = s;
        });
    for (auto& th : threads) th.join();
    for (int t = 1; t < 4; ++t) CHECK(sums[t] == sums[0]);
    CHECK(sums[0] == 1 + 3 + 5 + 7 + 9 + 11 + 13 + 15 + 17);
}
