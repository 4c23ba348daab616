#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nct/linalg.hpp"
#include "oracles.hpp"

using namespace nct;

TEST_CASE("inverse: frozen cases") {
    CHECK(invert(RatMatrix::identity(3)) == RatMatrix::identity(3));

    RatMatrix m{{Rational(0), Rational(1, 2)}, {Rational(-1, 2), Rational(0)}};
    RatMatrix expected{{Rational(0), Rational(-2)}, {Rational(2), Rational(0)}};
    CHECK(invert(m) == expected);
    CHECK(invert(m) * m == RatMatrix::identity(2));

    RatMatrix rank1{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
    CHECK_THROWS_AS(invert(rank1), SingularMatrix);
}

TEST_CASE("inverse: random property") {
    Prng rng(2);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng.below(5);
        RatMatrix m = oracle::random_matrix(n, n, rng);
        Rational d = det(m);
        CHECK(d == oracle::det_laplace(m));
        if (d.is_zero()) {
            CHECK_THROWS_AS(invert(m), SingularMatrix);
            continue;
        }
        RatMatrix inv = invert(m);
        CHECK(inv * m == RatMatrix::identity(n));
        CHECK(m * inv == RatMatrix::identity(n));
    }
}

TEST_CASE("pfaffian: frozen cases") {
    SkewMatrix s2 = SkewMatrix::zero(2);
    s2.set(0, 1, Rational(5, 3));
    CHECK(pfaffian(s2) == Rational(5, 3));

    SkewMatrix s4 = SkewMatrix::zero(4);
    s4.set(0, 1, Rational(2));
    s4.set(2, 3, Rational(3));
    CHECK(pfaffian(s4) == Rational(6));
    CHECK(det(s4.inner()) == Rational(36));

    CHECK(pfaffian(SkewMatrix::zero(0)) == Rational(1));

    SkewMatrix s3 = SkewMatrix::zero(3);
    CHECK_THROWS_AS(pfaffian(s3), OddDimension);
}

TEST_CASE("pfaffian: squares to det, matches matching oracle, congruence") {
    Prng rng(3);
    for (std::size_t n : {0u, 2u, 4u, 6u}) {
        for (int t = 0; t < 12; ++t) {
            SkewMatrix s = oracle::random_skew(n, rng);
            Rational pf = pfaffian(s);
            CHECK(pf * pf == det(s.inner()));
            CHECK(pf == oracle::pfaffian_matchings(s));

            // Pf(R^t s R) = det(R) Pf(s)
            RatMatrix r = oracle::random_matrix(n, n, rng, 3);
            SkewMatrix congr(r.transpose() * s.inner() * r);
            CHECK(pfaffian(congr) == det(r) * pf);
        }
    }
}

TEST_CASE("nullspace") {
    CHECK(nullspace(RatMatrix::identity(4)).empty());

    RatMatrix row{{Rational(1), Rational(1)}};
    auto basis = nullspace(row);
    REQUIRE(basis.size() == 1);
    CHECK((row * basis[0]).is_zero());
    CHECK(basis[0](0, 0) * basis[0](1, 0) != Rational(0)); // (1,-1) up to scale
    CHECK(basis[0](0, 0) == -basis[0](1, 0));

    // known-rank product: 5x3 times 3x5 has nullity 2
    Prng rng(5);
    for (int t = 0; t < 20; ++t) {
        RatMatrix a = oracle::random_matrix(5, 3, rng);
        RatMatrix b = oracle::random_matrix(3, 5, rng);
        RatMatrix m = a * b;
        if (rank(m) != 3) continue; // degenerate draw
        auto ns = nullspace(m);
        REQUIRE(ns.size() == 2);
        for (const auto& v : ns) CHECK((m * v).is_zero());
        // independence: stack and check rank 2
        RatMatrix stacked(5, 2);
        stacked.set_block(0, 0, ns[0]);
        stacked.set_block(0, 1, ns[1]);
        CHECK(rank(stacked) == 2);
    }
}

TEST_CASE("skew congruence factor: frozen cases") {
    SkewMatrix j_like = SkewMatrix::zero(2);
    j_like.set(0, 1, Rational(-1));
    CHECK(skew_congruence_factor(j_like) == RatMatrix::identity(2));

    SkewMatrix half = SkewMatrix::zero(2);
    half.set(0, 1, Rational(1, 2));
    RatMatrix expected{{Rational(1), Rational(0)}, {Rational(0), Rational(-1, 2)}};
    CHECK(skew_congruence_factor(half) == expected);

    CHECK_THROWS_AS(skew_congruence_factor(SkewMatrix::zero(2)), SingularInput);
    SkewMatrix odd = SkewMatrix::zero(3);
    CHECK_THROWS_AS(skew_congruence_factor(odd), SingularInput);
}

TEST_CASE("skew congruence factor: random property") {
    Prng rng(8);
    for (std::size_t p : {1u, 2u, 3u}) {
        for (int t = 0; t < 15; ++t) {
            SkewMatrix s = oracle::random_skew(2 * p, rng);
            if (det(s.inner()).is_zero()) {
                CHECK_THROWS_AS(skew_congruence_factor(s), SingularInput);
                continue;
            }
            RatMatrix f = skew_congruence_factor(s);
            CHECK(f.transpose() * symplectic_form(p) * f == -s.inner());
            CHECK(!det(f).is_zero());
        }
    }
}
