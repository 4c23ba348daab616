#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nct/group.hpp"
#include "oracles.hpp"

using namespace nct;

namespace {

bool block_equations_hold(const GroupElement& g) {
    RatMatrix q(2 * g.n(), 2 * g.n());
    q.set_block(0, g.n(), RatMatrix::identity(g.n()));
    q.set_block(g.n(), 0, RatMatrix::identity(g.n()));
    RatMatrix m = g.matrix();
    return m.transpose() * q * m == q;
}

} // namespace

TEST_CASE("rho") {
    CHECK(rho(RatMatrix::identity(3)) == GroupElement::identity(3));

    RatMatrix r{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
    GroupElement g = rho(r);
    CHECK(g.A() == r);
    RatMatrix d_expected{{Rational(1), Rational(0)}, {Rational(-1), Rational(1)}};
    CHECK(g.D() == d_expected);
    CHECK(block_equations_hold(g));
    CHECK(g.is_special());

    RatMatrix bad{{Rational(2), Rational(0)}, {Rational(0), Rational(1)}};
    CHECK_THROWS_AS(rho(bad), NotUnimodular);
}

TEST_CASE("nu and mu") {
    CHECK(nu(RatMatrix(2, 2)) == GroupElement::identity(2));
    CHECK(mu(RatMatrix(2, 2)) == GroupElement::identity(2));

    RatMatrix n{{Rational(0), Rational(3)}, {Rational(-3), Rational(0)}};
    GroupElement gn = nu(n);
    CHECK(gn.B() == n);
    CHECK(gn.A().is_identity());
    CHECK(gn.C().is_zero());
    CHECK(gn.is_special());

    RatMatrix n1{{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}};
    GroupElement gm = mu(n1);
    CHECK(gm.C() == n1);
    CHECK(gm.B().is_zero());

    RatMatrix sym{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    CHECK_THROWS_AS(nu(sym), NotAntisymmetric);
    CHECK_THROWS_AS(mu(sym), NotAntisymmetric);

    // additivity, and rho is multiplicative
    Prng rng(17);
    for (int t = 0; t < 30; ++t) {
        std::size_t dim = 2 + rng.below(4);
        RatMatrix a = random_integer_skew(dim, 3, rng);
        RatMatrix b = random_integer_skew(dim, 3, rng);
        CHECK(compose(nu(a), nu(b)) == nu(a + b));
        CHECK(compose(mu(a), mu(b)) == mu(a + b));
        RatMatrix r1 = random_unimodular(dim, rng), r2 = random_unimodular(dim, rng);
        CHECK(compose(rho(r1), rho(r2)) == rho(r1 * r2));
    }
}

TEST_CASE("sigma") {
    CHECK(sigma(0, 3) == GroupElement::identity(3));

    GroupElement s = sigma(2, 2);
    CHECK(s.A().is_zero());
    CHECK(s.B().is_identity());
    CHECK(s.C().is_identity());
    CHECK(s.D().is_zero());

    CHECK_THROWS_AS(sigma(1, 2), OddKRejected);

    GroupElement s_odd = sigma(1, 2, true);
    CHECK(s_odd.det() == Rational(-1));
    CHECK(!s_odd.is_special());

    for (std::size_t n : {2u, 3u, 4u, 5u}) {
        for (std::size_t k = 0; k <= n; k += 2) {
            GroupElement sk = sigma(k, n);
            CHECK(compose(sk, sk) == GroupElement::identity(n));
            CHECK(sk.is_special());
        }
    }
}

TEST_CASE("constructor rejects broken blocks") {
    RatMatrix id = RatMatrix::identity(2), z(2, 2);
    RatMatrix notint = id;
    notint(0, 0) = Rational(1, 2);
    CHECK_THROWS_AS(GroupElement(notint, z, z, id), InputError);
    RatMatrix two = id;
    two(0, 0) = Rational(2);
    CHECK_THROWS_AS(GroupElement(two, z, z, id), InputError);
}

TEST_CASE("compose, inverse, words") {
    Prng rng(19);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + rng.below(3);
        GroupElement g = random_token(n, rng).evaluate(n);
        CHECK(block_equations_hold(g));
        CHECK(g.is_special());
        CHECK(compose(g, g.inverse()) == GroupElement::identity(n));
        CHECK(compose(g.inverse(), g) == GroupElement::identity(n));
    }

    // conjugation: sigma2 nu(N) sigma2^{-1} = mu(N) for N in the top-left 2x2 block
    for (std::size_t n : {2u, 3u, 4u}) {
        for (long long v = -3; v <= 3; ++v) {
            RatMatrix nm(n, n);
            nm(0, 1) = Rational(v);
            nm(1, 0) = Rational(-v);
            GeneratorWord w;
            w.push(GeneratorToken::make_sigma(2));
            w.push(GeneratorToken::make_nu(nm));
            w.push(GeneratorToken::make_inverse(GeneratorToken::make_sigma(2)));
            CHECK(w.evaluate(n) == mu(nm));
        }
    }

    // rho-conjugation moves the support of mu(N)
    Prng rng2(23);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 3;
        RatMatrix perm(n, n);
        perm(0, 1) = 1;
        perm(1, 2) = 1;
        perm(2, 0) = 1;
        RatMatrix nm = random_integer_skew(n, 2, rng2);
        GeneratorWord w;
        w.push(GeneratorToken::make_rho(perm));
        w.push(GeneratorToken::make_mu(nm));
        w.push(GeneratorToken::make_inverse(GeneratorToken::make_rho(perm)));
        RatMatrix pinv_t = invert(perm).transpose();
        // rho(P) mu(N) rho(P)^{-1} = mu(P^{-t} N P^{-1})
        CHECK(w.evaluate(n) == mu(pinv_t * nm * invert(perm)));
    }
}

TEST_CASE("action: generator formulas") {
    Prng rng(29);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 2 + rng.below(4);
        SkewMatrix theta = oracle::random_skew(n, rng);

        CHECK(act(GroupElement::identity(n), theta) == theta);

        RatMatrix nm = random_integer_skew(n, 3, rng);
        CHECK(act(nu(nm), theta) == SkewMatrix(theta.inner() + nm));

        RatMatrix r = random_unimodular(n, rng);
        CHECK(act(rho(r), theta) == SkewMatrix(r * theta.inner() * r.transpose()));
    }

    SkewMatrix half = SkewMatrix::zero(2);
    half.set(0, 1, Rational(1, 2));
    CHECK(act(sigma(2, 2), half)(0, 1) == Rational(-2));
}

TEST_CASE("action law on triple-defined samples") {
    Prng rng(31);
    int done = 0;
    while (done < 30) {
        std::size_t n = 2 + rng.below(2);
        SkewMatrix theta = oracle::random_skew(n, rng);
        GroupElement g = random_word(n, 3, rng).evaluate(n);
        GroupElement h = random_word(n, 3, rng).evaluate(n);
        if (!in_domain(h, theta)) continue;
        SkewMatrix mid = act(h, theta);
        if (!in_domain(g, mid) || !in_domain(compose(g, h), theta)) continue;
        CHECK(act(g, mid) == act(compose(g, h), theta));
        ++done;
    }
}

TEST_CASE("domain tests") {
    Prng rng(37);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 2 + rng.below(3);
        SkewMatrix theta = oracle::random_skew(n, rng);
        CHECK(in_domain(nu(random_integer_skew(n, 3, rng)), theta));
    }

    SkewMatrix z2 = SkewMatrix::zero(2);
    CHECK(!in_domain(sigma(2, 2), z2));
    CHECK_THROWS_AS(act(sigma(2, 2), z2), OutsideDomain);

    // odd n: sigma_n (odd) never has any theta in its domain
    for (std::size_t n : {3u, 5u}) {
        GroupElement sn = sigma(n, n, true);
        Prng rng2(41);
        for (int t = 0; t < 10; ++t)
            CHECK(!in_domain(sn, oracle::random_skew(n, rng2)));
    }
}

TEST_CASE("domain report is deterministic and well formed") {
    SkewMatrix theta = SkewMatrix::zero(3);
    theta.set(0, 1, Rational(1, 2));
    theta.set(0, 2, Rational(1, 3));
    theta.set(1, 2, Rational(2, 5));
    DomainReport a = sample_domain_report(theta, 4, 50, 123);
    DomainReport b = sample_domain_report(theta, 4, 50, 123);
    CHECK(a.defined == b.defined);
    CHECK(a.count == 50);
    std::size_t total = 0;
    for (auto c : a.count_by_len) total += c;
    CHECK(total == 50);
    CHECK(a.fraction == Rational(static_cast<long long>(a.defined), 50));
}
