#include "tsilab/vectors.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace tsilab;

TEST_CASE("rational parsing and rendering") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);

    CHECK(rational_to_string(Rational(3, 2)) == "3/2");
    CHECK(rational_to_string(Rational(4)) == "4");
    CHECK(rational_to_string(Rational(-1, 3)) == "-1/3");

    CHECK(rational_to_decimal(Rational(4, 3), 4) == "1.3333");
    CHECK(rational_to_decimal(Rational(-1, 8), 3) == "-0.125");
    CHECK(rational_to_decimal(Rational(2), 2) == "2.00");

    // Truncated decimal expansion of the p-th root.
    CHECK(rational_root_decimal(Rational(2), 2, 5) == "1.41421");
    CHECK(rational_root_decimal(Rational(9, 4), 2, 3) == "1.500");
    CHECK(rational_root_decimal(Rational(8), 3, 4) == "2.0000");

    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(5), 0) == 1);
}

TEST_CASE("finite vector storage drops zeros") {
    FiniteVector x;
    CHECK(x.is_zero());
    x.set(3, Rational(1, 2));
    x.set(5, Rational(-2));
    CHECK(x.support_size() == 2);
    CHECK(x.at(3) == Rational(1, 2));
    CHECK(x.at(4) == 0);
    x.set(3, 0);
    CHECK(x.support() == std::vector<int>{5});

    CHECK_THROWS_AS(x.set(0, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(FiniteVector().min_index(), std::logic_error);
    CHECK_THROWS_AS(FiniteVector().max_index(), std::logic_error);

    const FiniteVector y{{2, Rational(1)}, {7, Rational(1, 3)}};
    CHECK(y.min_index() == 2);
    CHECK(y.max_index() == 7);
}

TEST_CASE("finite vector arithmetic") {
    const FiniteVector x{{1, Rational(1)}, {2, Rational(-1, 2)}};
    const FiniteVector y{{2, Rational(1, 2)}, {3, Rational(2)}};

    const FiniteVector sum = x + y;
    CHECK(sum == FiniteVector{{1, Rational(1)}, {3, Rational(2)}});
    CHECK((x - x).is_zero());
    CHECK(-x == FiniteVector{{1, Rational(-1)}, {2, Rational(1, 2)}});
    CHECK(x.scaled(Rational(-2)) == FiniteVector{{1, Rational(-2)}, {2, Rational(1)}});
    CHECK(x.abs() == FiniteVector{{1, Rational(1)}, {2, Rational(1, 2)}});
    CHECK(dot(x, y) == Rational(-1, 4));
    CHECK(dot(x, FiniteVector()) == 0);

    CHECK(FiniteVector::unit(4) == FiniteVector{{4, Rational(1)}});
    CHECK(x < y); // map-lexicographic order
}

TEST_CASE("segments validate their index lists") {
    const Segment s{2, 3, 5};
    CHECK(s.min() == 2);
    CHECK(s.max() == 5);
    CHECK(s.size() == 3);
    CHECK(s.contains(3));
    CHECK(!s.contains(4));

    CHECK_THROWS_AS(Segment(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(Segment({3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Segment({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Segment({0, 1}), std::invalid_argument);
}

TEST_CASE("restriction and sup norm") {
    const FiniteVector x{{2, Rational(1)}, {3, Rational(-3, 2)}, {6, Rational(1, 4)}};
    CHECK(restrict(x, Segment{3, 6}) ==
          FiniteVector{{3, Rational(-3, 2)}, {6, Rational(1, 4)}});
    CHECK(restrict(x, Segment{4, 5}).is_zero());
    CHECK(sup_norm(x) == Rational(3, 2));
    CHECK(sup_norm(FiniteVector()) == 0);
}

TEST_CASE("admissibility checks") {
    AdmissiblePartition p;
    p.part_count = 2;
    p.parts = {Segment{2, 3}, Segment{5}};
    CHECK(is_admissible(p));

    p.parts = {Segment{1, 3}, Segment{5}};
    CHECK(!is_admissible(p)); // two parts need min(E_1) >= 2

    p.parts = {Segment{2, 5}, Segment{4}};
    CHECK(!is_admissible(p)); // parts out of order

    p.part_count = 1;
    p.parts = {Segment{2, 3}, Segment{5}};
    CHECK(!is_admissible(p)); // count mismatch
}

TEST_CASE("admissible partition enumeration over runs") {
    SUBCASE("support {1,2}: the first-part bound leaves only single runs") {
        const auto partitions = enumerate_admissible(Segment{1, 2}, 2);
        REQUIRE(partitions.size() == 3);
        for (const auto& partition : partitions)
            CHECK(partition.part_count == 1);
        CHECK(partitions[0].parts[0] == Segment{1});
        CHECK(partitions[1].parts[0] == Segment{1, 2});
        CHECK(partitions[2].parts[0] == Segment{2});
    }

    SUBCASE("support {3,4,5} admits the full split") {
        const auto partitions = enumerate_admissible(Segment{3, 4, 5}, 3);
        bool found = false;
        for (const auto& partition : partitions)
            if (partition.part_count == 3 && partition.parts[0] == Segment{3} &&
                partition.parts[1] == Segment{4} && partition.parts[2] == Segment{5})
                found = true;
        CHECK(found);
        for (const auto& partition : partitions)
            CHECK(is_admissible(partition));
    }

    SUBCASE("support {2,3} admits the pair split") {
        const auto partitions = enumerate_admissible(Segment{2, 3}, 2);
        bool found = false;
        for (const auto& partition : partitions)
            if (partition.part_count == 2 && partition.parts[0] == Segment{2} &&
                partition.parts[1] == Segment{3})
                found = true;
        CHECK(found);
    }

    SUBCASE("partitions arrive ordered by part count") {
        const auto partitions = enumerate_admissible(Segment{3, 4, 5, 6}, 4);
        for (std::size_t i = 1; i < partitions.size(); ++i)
            CHECK(partitions[i - 1].part_count <= partitions[i].part_count);
    }

    SUBCASE("gaps in the support are respected") {
        // Runs are consecutive stretches of the listed support, so {2, 5}
        // splits into singleton runs only.
        const auto partitions = enumerate_admissible(Segment{2, 5}, 2);
        bool found_pair = false;
        for (const auto& partition : partitions)
            if (partition.part_count == 2)
                found_pair = true;
        CHECK(found_pair);
    }

    SUBCASE("visitor can stop early") {
        int seen = 0;
        for_each_admissible(Segment{2, 3, 4}, 3, [&seen](const AdmissiblePartition&) {
            ++seen;
            return false;
        });
        CHECK(seen == 1);
    }
}
