#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nct/json_io.hpp"
#include "oracles.hpp"

using namespace nct;

TEST_CASE("matrix wire format") {
    RatMatrix m{{Rational(0), Rational(1, 2)}, {Rational(-1, 2), Rational(0)}};
    Json j = to_json(m);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 2);
    CHECK(j["entries"][0][1] == "1/2");
    CHECK(matrix_from_json(j) == m);

    CHECK_THROWS_AS(matrix_from_json(parse_json("{\"rows\":2}")), InputError);
    CHECK_THROWS_AS(matrix_from_json(parse_json(
                        "{\"rows\":2,\"cols\":1,\"entries\":[[\"1\"]]}")),
                    InputError);
    CHECK_THROWS_AS(parse_json("{nope"), InputError);
    // integers are accepted as entries
    RatMatrix one = matrix_from_json(parse_json(
        "{\"rows\":1,\"cols\":1,\"entries\":[[3]]}"));
    CHECK(one(0, 0) == Rational(3));
}

TEST_CASE("round trips") {
    Prng rng(167);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 2 + rng.below(3);

        RatMatrix m = oracle::random_matrix(n, n, rng);
        CHECK(matrix_from_json(to_json(m)) == m);

        SkewMatrix s = oracle::random_skew(n, rng);
        CHECK(skew_from_json(to_json(s)) == s);

        GroupElement g = random_word(n, 3, rng).evaluate(n);
        CHECK(group_from_json(to_json(g)) == g);

        GeneratorWord w = random_word(n, 4, rng);
        GeneratorWord w2 = word_from_json(to_json(w));
        CHECK(w2.evaluate(n) == w.evaluate(n));

        GrassmannElement e = gaussian_element(s);
        CHECK(grassmann_from_json(to_json(e)) == e);
    }
}

TEST_CASE("group wire format shape") {
    GroupElement g = sigma(2, 2);
    Json j = to_json(g);
    CHECK(j["n"] == 2);
    CHECK(j.contains("A"));
    CHECK(j.contains("D"));
    CHECK(group_from_json(j) == g);
    CHECK_THROWS_AS(group_from_json(parse_json("{\"n\":2}")), InputError);
}

TEST_CASE("grassmann terms omit zeros") {
    SkewMatrix s = SkewMatrix::zero(2);
    s.set(0, 1, Rational(1, 2));
    Json j = to_json(gaussian_element(s));
    CHECK(j["terms"].size() == 2); // {} and {1,2}
    CHECK(j["terms"][0]["subset"].size() == 0);
    CHECK(j["terms"][1]["subset"] == Json::array({1, 2}));
}

TEST_CASE("klattice wire format") {
    KLatticeElement x(3, Parity::Even);
    x.set_coord(0b011, 7);
    Json j = to_json(x);
    CHECK(j["parity"] == "even");
    KLatticeElement back = klattice_from_json(j);
    CHECK(back.coord(0b011) == 7);
    CHECK_THROWS_AS(
        klattice_from_json(parse_json(
            "{\"n\":2,\"parity\":\"even\",\"terms\":[{\"subset\":[1],\"coeff\":\"1\"}]}")),
        ParityMismatch);
}

TEST_CASE("rational theta wire format") {
    RationalTheta rt(2, 3, {0, 1, -1, 0});
    Json j = to_json(rt);
    CHECK(j["q"] == 3);
    RationalTheta back = rational_theta_from_json(j);
    CHECK(back.q == 3);
    CHECK(back.entry(0, 1) == 1);
    CHECK_THROWS_AS(rational_theta_from_json(parse_json("{\"q\":2}")), InputError);
}
