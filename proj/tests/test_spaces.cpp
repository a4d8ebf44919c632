#include <doctest.h>

#include "tsilab/spaces.hpp"

#include <stdexcept>

using namespace tsilab;

TEST_CASE("plain norm evaluators") {
    FiniteVector x;
    x.set(1, 3);
    x.set(2, -4);

    CHECK(c0_norm(x) == 4);
    CHECK(c0_norm(FiniteVector()) == 0);

    CHECK(lp_norm_pow(x, 1) == 7);
    CHECK(lp_norm_pow(x, 2) == 25);
    CHECK(lp_norm_pow(x, 3) == 91);
    CHECK(lp_norm_pow(FiniteVector(), 2) == 0);
    CHECK_THROWS_AS(lp_norm_pow(x, 0), std::invalid_argument);
}

TEST_CASE("oracles carry their reporting conventions") {
    FiniteVector x;
    x.set(1, 3);
    x.set(2, -4);

    const auto c0 = c0_oracle();
    CHECK(c0.id == "c0");
    CHECK(c0.power == 1);
    CHECK(!c0.theta.has_value());
    CHECK(!c0.is_dual_tsirelson);
    CHECK(c0.evaluate(x) == 4);

    const auto l2 = lp_oracle(2);
    CHECK(l2.id == "lp:2");
    CHECK(l2.power == 2);
    CHECK(l2.evaluate(x) == 25);

    const auto primal = tsirelson_oracle(Theta(Rational(2, 3)));
    CHECK(primal.id == "tsirelson:2/3");
    CHECK(primal.power == 1);
    REQUIRE(primal.theta.has_value());
    CHECK(*primal.theta == Rational(2, 3));
    CHECK(!primal.is_dual_tsirelson);
    FiniteVector pair;
    pair.set(2, 1);
    pair.set(3, 1);
    CHECK(primal.evaluate(pair) == Rational(4, 3));

    const auto dual = dual_tsirelson_oracle(Theta(Rational(2, 3)));
    CHECK(dual.id == "dual-tsirelson:2/3");
    CHECK(dual.power == 1);
    CHECK(dual.is_dual_tsirelson);
    CHECK(dual.evaluate(pair) == Rational(3, 2));
}

TEST_CASE("space ids parse and reject") {
    CHECK(parse_space("c0").id == "c0");
    CHECK(parse_space("lp:1").power == 1);
    CHECK(parse_space("lp:3").power == 3);
    CHECK(parse_space("tsirelson:1/2").theta == Rational(1, 2));
    CHECK(parse_space("dual-tsirelson:9/10").is_dual_tsirelson);

    CHECK_THROWS_AS(parse_space(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("l2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("lp:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("lp:two"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("lp:2.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("tsirelson:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("tsirelson:5/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("tsirelson:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("dual-tsirelson:1"), std::invalid_argument);
}

TEST_CASE("prototype family in c0") {
    const auto family = c0_prototype_family(3);
    REQUIRE(family.size() == 3);
    CHECK(family[0] == FiniteVector{{1, Rational(1)}, {2, Rational(-1)}});
    CHECK(family[1] == FiniteVector{{1, Rational(1)}, {2, Rational(1)}, {3, Rational(-1)}});
    CHECK(family[2] == FiniteVector{{1, Rational(1)}, {2, Rational(1)}, {3, Rational(1)},
                                    {4, Rational(-1)}});

    for (const auto& x : family)
        CHECK(c0_norm(x) == 1);
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            CHECK(c0_norm(family[i] - family[j]) == 2);
            CHECK(c0_norm(family[i] + family[j]) == 2);
        }
    }

    CHECK_THROWS_AS(c0_prototype_family(0), std::invalid_argument);
}

TEST_CASE("basis family") {
    const auto family = lp_basis_family(4);
    REQUIRE(family.size() == 4);
    for (int i = 0; i < 4; ++i)
        CHECK(family[static_cast<std::size_t>(i)] == FiniteVector::unit(i + 1));
    CHECK_THROWS_AS(lp_basis_family(0), std::invalid_argument);
}
