#include <doctest.h>

#include "tsilab/acceptance.hpp"
#include "tsilab/tsirelson.hpp"

#include <algorithm>
#include <variant>
#include <vector>

using namespace tsilab;

namespace {

FiniteVector basis_sum(int first, int last) {
    FiniteVector x;
    for (int i = first; i <= last; ++i)
        x.set(i, 1);
    return x;
}

} // namespace

TEST_CASE("theta must lie strictly between zero and one") {
    CHECK_THROWS_AS(Theta(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(Theta(Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(Theta(Rational(-1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(Theta(Rational(3, 2)), std::invalid_argument);
    CHECK(Theta(Rational(2, 3)).value() == Rational(2, 3));
}

TEST_CASE("norm values on small vectors") {
    const Theta half{Rational(1, 2)};
    const Theta two_thirds{Rational(2, 3)};

    CHECK(tsirelson_norm_value(FiniteVector::unit(1), two_thirds) == 1);
    CHECK(tsirelson_norm_value(FiniteVector(), half) == 0);

    // Splitting e_2 + e_3 into singletons is admissible (two parts starting
    // at coordinate 2), so the norm is max(1, 2 theta).
    const FiniteVector pair = basis_sum(2, 3);
    CHECK(tsirelson_norm_value(pair, two_thirds) == Rational(4, 3));
    CHECK(tsirelson_norm_value(pair, half) == 1);
    CHECK(tsirelson_norm_value(pair, Theta(Rational(9, 10))) == Rational(9, 5));

    // No two-part split may start at coordinate 1.
    CHECK(tsirelson_norm_value(basis_sum(1, 2), two_thirds) == 1);
    CHECK(tsirelson_norm_value(basis_sum(1, 2), Theta(Rational(9, 10))) == 1);

    CHECK(tsirelson_norm_value(basis_sum(3, 5), half) == Rational(3, 2));

    FiniteVector weighted;
    weighted.set(2, 1);
    weighted.set(3, Rational(3, 4));
    CHECK(tsirelson_norm_value(weighted, two_thirds) == Rational(7, 6));
}

TEST_CASE("picard levels increase to the fixed point") {
    const Theta theta{Rational(2, 3)};

    // Admissible families may skip coordinates, so the three tail singletons
    // {3}, {4}, {5} are available at the very first level.
    const FiniteVector flat = basis_sum(2, 5);
    CHECK(norm_level(flat, theta, 0) == 1);
    CHECK(norm_level(flat, theta, 1) == 2);
    CHECK(tsirelson_norm_value(flat, theta) == 2);

    // A heavy head makes the nested split {2}, {3,4,5} beat every flat
    // family, giving a strictly increasing level sequence.
    FiniteVector x;
    x.set(2, Rational(3, 2));
    x.set(3, 1);
    x.set(4, 1);
    x.set(5, 1);
    CHECK(norm_level(x, theta, 0) == Rational(3, 2));
    CHECK(norm_level(x, theta, 1) == 2);
    CHECK(norm_level(x, theta, 2) == Rational(7, 3));
    CHECK(norm_level(x, theta, 3) == Rational(7, 3));
    CHECK(tsirelson_norm_value(x, theta) == Rational(7, 3));
    CHECK(reference_tsirelson_norm(x, theta) == Rational(7, 3));

    // The iteration is always stationary once the level reaches the support
    // size.
    const FiniteVector y = basis_sum(3, 5);
    const Theta half{Rational(1, 2)};
    CHECK(norm_level(y, half, static_cast<int>(y.support_size())) ==
          tsirelson_norm_value(y, half));
}

TEST_CASE("certificates re-evaluate to the reported value") {
    const Theta theta{Rational(2, 3)};

    SUBCASE("partition witness") {
        const FiniteVector x = basis_sum(2, 3);
        const auto [value, certificate] = tsirelson_norm(x, theta);
        CHECK(value == Rational(4, 3));
        CHECK(certificate.value == value);
        REQUIRE(!certificate.is_leaf());
        const auto& node = std::get<NormCertificate::Node>(certificate.witness);
        CHECK(node.partition.part_count == 2);
        CHECK(node.children.size() == 2);
        CHECK(certificate_value(certificate, x, theta) == value);
    }

    SUBCASE("leaf witness when the sup norm wins") {
        const Theta half{Rational(1, 2)};
        const FiniteVector x = basis_sum(1, 2);
        const auto [value, certificate] = tsirelson_norm(x, half);
        CHECK(value == 1);
        REQUIRE(certificate.is_leaf());
        CHECK(std::get<NormCertificate::Leaf>(certificate.witness).index == 1);
        CHECK(certificate_value(certificate, x, half) == 1);
    }

    SUBCASE("zero vector") {
        const auto [value, certificate] = tsirelson_norm(FiniteVector(), theta);
        CHECK(value == 0);
        REQUIRE(certificate.is_leaf());
        CHECK(std::get<NormCertificate::Leaf>(certificate.witness).index == 0);
    }

    SUBCASE("nested witness") {
        const FiniteVector x = basis_sum(2, 5);
        const auto [value, certificate] = tsirelson_norm(x, theta);
        CHECK(value == 2);
        CHECK(certificate_value(certificate, x, theta) == 2);
    }
}

TEST_CASE("certificate functionals pair exactly and stay in the dual ball") {
    const Theta theta{Rational(2, 3)};
    std::vector<FiniteVector> samples;
    samples.push_back(basis_sum(2, 3));
    samples.push_back(basis_sum(2, 5));
    samples.push_back(basis_sum(3, 5));
    FiniteVector mixed;
    mixed.set(2, Rational(1));
    mixed.set(4, Rational(-2, 3));
    mixed.set(5, Rational(1, 2));
    samples.push_back(mixed);

    for (const auto& x : samples) {
        const auto [value, certificate] = tsirelson_norm(x, theta);
        const FiniteVector functional = certificate_functional(certificate, x, theta);
        CHECK(dot(functional, x) == value);
        // Membership in the dual ball: the functional never beats the norm.
        for (const auto& y : samples)
            CHECK(dot(functional, y) <= tsirelson_norm_value(y, theta));
    }
}

TEST_CASE("norm agrees with the fully general reference recursion") {
    const std::vector<Rational> thetas = {Rational(1, 4), Rational(1, 2), Rational(2, 3),
                                          Rational(9, 10)};
    std::vector<FiniteVector> samples;
    samples.push_back(basis_sum(2, 4));
    samples.push_back(basis_sum(1, 5));
    FiniteVector gaps;
    gaps.set(2, Rational(1, 2));
    gaps.set(4, Rational(-1));
    gaps.set(7, Rational(3, 2));
    samples.push_back(gaps);
    FiniteVector spread;
    spread.set(3, Rational(-2, 3));
    spread.set(5, Rational(1));
    spread.set(6, Rational(1, 4));
    spread.set(8, Rational(-1, 2));
    samples.push_back(spread);

    for (const auto& t : thetas) {
        const Theta theta{t};
        for (const auto& x : samples)
            CHECK(tsirelson_norm_value(x, theta) == reference_tsirelson_norm(x, theta));
    }
}

TEST_CASE("norming set on two and three coordinates") {
    const Theta theta{Rational(2, 3)};

    const auto dim2 = norming_functionals(2, theta);
    CHECK(dim2.size() == 4); // signed coordinate functionals only

    const auto dim3 = norming_functionals(3, theta);
    CHECK(dim3.size() == 10); // six signed units plus theta(+-e*_2 +- e*_3)

    FiniteVector composite;
    composite.set(2, Rational(2, 3));
    composite.set(3, Rational(2, 3));
    const auto found = std::find_if(dim3.begin(), dim3.end(), [&](const NormingFunctional& f) {
        return f.functional == composite;
    });
    REQUIRE(found != dim3.end());
    CHECK(found->level == 1);

    // No composite may start at coordinate 1.
    for (const auto& f : dim3) {
        if (f.functional.at(1) != 0)
            CHECK(f.level == 0);
    }

    // The generated set actually norms: its maximum recovers the norm.
    std::vector<FiniteVector> probes;
    probes.push_back(basis_sum(1, 3));
    probes.push_back(basis_sum(2, 3));
    FiniteVector skew;
    skew.set(1, Rational(1, 2));
    skew.set(3, Rational(-1));
    probes.push_back(skew);
    for (const auto& x : probes) {
        Rational best = 0;
        for (const auto& f : dim3)
            best = std::max(best, Rational(dot(f.functional, x)));
        CHECK(best == tsirelson_norm_value(x, theta));
    }
}

TEST_CASE("block combinations are sandwiched between theta l1 and l1") {
    const Theta half{Rational(1, 2)};
    const Theta two_thirds{Rational(2, 3)};

    SUBCASE("unit vector blocks at the lower edge") {
        const std::vector<FiniteVector> blocks = {FiniteVector::unit(3), FiniteVector::unit(4),
                                                  FiniteVector::unit(5)};
        const std::vector<Rational> coefficients = {1, 1, 1};
        const auto bounds = block_l1_bounds(blocks, coefficients, half);
        CHECK(bounds.lower == Rational(3, 2));
        CHECK(bounds.value == Rational(3, 2));
        CHECK(bounds.upper == 3);
    }

    SUBCASE("two blocks under theta two thirds") {
        const std::vector<FiniteVector> blocks = {FiniteVector::unit(2), FiniteVector::unit(3)};
        const auto bounds = block_l1_bounds(blocks, {1, 1}, two_thirds);
        CHECK(bounds.lower == Rational(4, 3));
        CHECK(bounds.value == Rational(4, 3));
        CHECK(bounds.upper == 2);
    }

    SUBCASE("signed fractional coefficients") {
        const std::vector<FiniteVector> blocks = {FiniteVector::unit(2), FiniteVector::unit(3)};
        const auto bounds = block_l1_bounds(blocks, {1, Rational(-1, 2)}, two_thirds);
        CHECK(bounds.lower == 1);
        CHECK(bounds.value == 1);
        CHECK(bounds.upper == Rational(3, 2));
    }

    SUBCASE("multi-coordinate normalized blocks") {
        const std::vector<FiniteVector> blocks = {basis_sum(2, 3), FiniteVector::unit(4)};
        const auto bounds = block_l1_bounds(blocks, {1, 1}, half);
        CHECK(bounds.lower == 1);
        CHECK(bounds.value == 1);
        CHECK(bounds.upper == 2);
    }

    SUBCASE("validation") {
        const std::vector<FiniteVector> too_many = {FiniteVector::unit(2), FiniteVector::unit(3),
                                                    FiniteVector::unit(4)};
        CHECK_THROWS_AS(block_l1_bounds(too_many, {1, 1, 1}, half), std::invalid_argument);

        const std::vector<FiniteVector> unnormalized = {basis_sum(2, 3), FiniteVector::unit(4)};
        CHECK_THROWS_AS(block_l1_bounds(unnormalized, {1, 1}, two_thirds),
                        std::invalid_argument);

        const std::vector<FiniteVector> overlapping = {basis_sum(2, 4), FiniteVector::unit(3)};
        CHECK_THROWS_AS(block_l1_bounds(overlapping, {1, 1}, half), std::invalid_argument);

        const std::vector<FiniteVector> blocks = {FiniteVector::unit(2), FiniteVector::unit(3)};
        CHECK_THROWS_AS(block_l1_bounds(blocks, {1}, half), std::invalid_argument);
    }
}

TEST_CASE("suppressing coordinates never increases the norm") {
    const Theta theta{Rational(2, 3)};
    const FiniteVector x = basis_sum(2, 6);
    CHECK(check_suppression(x, Segment({2, 3, 4, 5, 6}), theta));
    CHECK(check_suppression(x, Segment({3, 5}), theta));
    CHECK(check_suppression(x, Segment({6}), theta));

    FiniteVector mixed;
    mixed.set(1, Rational(3, 2));
    mixed.set(4, Rational(-1, 3));
    mixed.set(9, Rational(2));
    CHECK(check_suppression(mixed, Segment({1, 9}), theta));
    CHECK(check_suppression(mixed, Segment({4}), Theta(Rational(1, 4))));
}
