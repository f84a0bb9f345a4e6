#include <algorithm>
#include <array>
#include <numeric>

#include "doctest.h"
#include "dgr/landscape.hpp"

using namespace dgr;

TEST_CASE("Lehmer rank of the identity and the reverse permutation") {
    CHECK(permutation_index(Assignment{}) == 0);
    CHECK(permutation_index(Assignment::from_digits(std::array{9, 8, 7, 6, 5, 4, 3, 2, 1, 0})) ==
          3628799);
    CHECK(assignment_at(0) == Assignment{});
    CHECK_THROWS_AS(assignment_at(3628800), std::out_of_range);
}

TEST_CASE("Lehmer rank follows lexicographic order") {
    std::array<int, 10> d{};
    std::iota(d.begin(), d.end(), 0);
    for (std::uint32_t k = 0; k < 20000; ++k) {
        REQUIRE(permutation_index(Assignment::from_digits(d)) == k);
        REQUIRE(assignment_at(k) == Assignment::from_digits(d));
        std::next_permutation(d.begin(), d.end());
    }
}

TEST_CASE("Lehmer round trip on random assignments") {
    Rng rng(8);
    for (int i = 0; i < 100000; ++i) {
        const auto a = Assignment::uniform(rng);
        REQUIRE(assignment_at(permutation_index(a)) == a);
    }
}

TEST_CASE("minimum predicates") {
    CHECK(is_minimum(solution_assignment()));
    CHECK(is_strict_minimum(solution_assignment()));
    const auto tie = Assignment::parse("5840231769");
    CHECK(cost(tie) == 1);
    CHECK(is_minimum(tie));
    CHECK_FALSE(is_strict_minimum(tie));
    CHECK_FALSE(is_minimum(Assignment{}));
}

TEST_CASE("exhaustive census") {
    const auto r = enumerate_minima();
    CHECK(r.total_states == 3628800);
    CHECK(r.minima_count == 102);
    CHECK(r.global_minima_count == 1);
    CHECK(r.local_minima_count == 101);
    CHECK(r.strict_minima_count == 100);
    REQUIRE(r.minima.size() == 102);
    CHECK(r.minima.front().assignment == solution_assignment());
    CHECK(r.minima.front().cost == 0);
    int zero = 0;
    for (const auto& m : r.minima) {
        zero += m.cost == 0;
        CHECK(m.cost == cost(m.assignment));
        CHECK(m.cost < kSentinelCost);
        CHECK(m.index == permutation_index(m.assignment));
        bool strict = true;
        for (const auto& n : neighbors(m.assignment)) {
            CHECK(cost(n) >= m.cost);
            strict = strict && cost(n) > m.cost;
        }
        CHECK(m.strict == strict);
    }
    CHECK(zero == 1);
    CHECK(std::is_sorted(r.minima.begin(), r.minima.end(), [](const auto& a, const auto& b) {
        return a.cost != b.cost ? a.cost < b.cost : a.index < b.index;
    }));
    const auto again = enumerate_minima(1);
    CHECK(again.minima.size() == r.minima.size());
    for (std::size_t i = 0; i < r.minima.size(); ++i)
        CHECK(again.minima[i].index == r.minima[i].index);
}
