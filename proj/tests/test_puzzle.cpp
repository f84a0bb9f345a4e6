#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <set>
#include <string>

#include "doctest.h"
#include "dgr/puzzle.hpp"

using namespace dgr;

namespace {

Assignment example_state() { return Assignment::from_digits(std::array{0, 2, 9, 4, 8, 1, 7, 6, 3, 5}); }
Assignment model_state() { return Assignment::from_digits(std::array{5, 3, 9, 4, 8, 1, 6, 2, 7, 0}); }

// Cost from the word values alone, independent of the linear weights.
std::uint64_t oracle_cost(const Assignment& a) {
    if (a.digit(Letter::D) == 0 || a.digit(Letter::G) == 0 || a.digit(Letter::R) == 0)
        return 100000000;
    const auto lhs = static_cast<std::int64_t>(word_value(a, "DONALD") + word_value(a, "GERALD"));
    const auto rhs = static_cast<std::int64_t>(word_value(a, "ROBERT"));
    return static_cast<std::uint64_t>(std::llabs(rhs - lhs));
}

bool bijective(const Assignment& a) {
    std::array<bool, kNumLetters> seen{};
    for (Letter l : kLetters) {
        const int d = a.digit(l);
        if (d < 0 || d > 9 || seen[d] || a.holder(d) != l) return false;
        seen[d] = true;
    }
    return true;
}

}  // namespace

TEST_CASE("from_digits builds the solution and rejects non-permutations") {
    const auto sol = Assignment::from_digits(std::array{4, 3, 5, 9, 1, 8, 6, 2, 7, 0});
    CHECK(sol == solution_assignment());
    CHECK(sol.to_string() == "4359186270");
    CHECK(Assignment::from_digits(std::array{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}) == Assignment{});
    CHECK_THROWS_AS(Assignment::from_digits(std::array{0, 0, 2, 3, 4, 5, 6, 7, 8, 9}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Assignment::from_digits(std::array{0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Assignment::parse("43591862x0"), std::invalid_argument);
    CHECK(Assignment::parse("4359186270") == sol);
}

TEST_CASE("letter names round trip") {
    for (Letter l : kLetters) CHECK(letter_from_char(to_char(l)) == l);
    CHECK_THROWS_AS(letter_from_char('Z'), std::invalid_argument);
}

TEST_CASE("word values") {
    CHECK(word_value(solution_assignment(), "DONALD") == 526485);
    CHECK(word_value(solution_assignment(), "GERALD") == 197485);
    CHECK(word_value(solution_assignment(), "ROBERT") == 723970);
    CHECK(word_value(example_state(), "GERALD") == 843019);
}

TEST_CASE("cost of worked examples") {
    CHECK(cost(example_state()) == 1447603);
    CHECK(cost(model_state()) == 1050568);
    CHECK(cost(solution_assignment()) == 0);
    CHECK(is_solution(solution_assignment()));
    CHECK_FALSE(is_solution(Assignment{}));
    // identity has D=2, G=4, R=8: no sentinel
    CHECK(cost(Assignment{}) == oracle_cost(Assignment{}));
}

TEST_CASE("leading zero gives the sentinel") {
    for (Letter lead : {Letter::D, Letter::G, Letter::R}) {
        Assignment a = solution_assignment();
        a.swap_letters(lead, a.holder(0));
        CHECK(cost(a) == kSentinelCost);
        CHECK_FALSE(is_solution(a));
    }
}

TEST_CASE("cost matches the word-value oracle and is zero only at the solution") {
    Rng rng(12345);
    for (int i = 0; i < 100000; ++i) {
        const auto a = Assignment::uniform(rng);
        REQUIRE(bijective(a));
        REQUIRE(cost(a) == oracle_cost(a));
        REQUIRE(is_solution(a) == (cost(a) == 0));
        REQUIRE(cost(Assignment::from_digits(a.digits())) == cost(a));
    }
}

TEST_CASE("swap delta equals the balance difference") {
    Rng rng(99);
    for (int i = 0; i < 20000; ++i) {
        const auto a = Assignment::uniform(rng);
        for (const auto& [x, y] : letter_pairs()) {
            const auto b = apply_swap(a, x, y);
            REQUIRE(balance(b) - balance(a) == swap_delta(a, x, y));
        }
    }
}

TEST_CASE("apply_swap") {
    auto b = apply_swap(example_state(), Letter::D, Letter::T);
    CHECK(b.digit(Letter::D) == 5);
    CHECK(b.digit(Letter::T) == 9);
    CHECK(b.agreement(example_state()) == 8);
    auto s = apply_swap(solution_assignment(), Letter::A, Letter::B);
    CHECK(s.to_string() == "3459186270");
    CHECK(apply_swap(s, Letter::A, Letter::B) == solution_assignment());
    CHECK_THROWS_AS(apply_swap(s, Letter::E, Letter::E), std::invalid_argument);
    CHECK(bijective(s));
}

TEST_CASE("neighbors: 45 distinct, symmetric, all worse than the solution") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = trial == 0 ? solution_assignment() : Assignment::uniform(rng);
        const auto nb = neighbors(a);
        REQUIRE(nb.size() == 45);
        std::set<std::string> distinct;
        for (const auto& n : nb) {
            distinct.insert(n.to_string());
            CHECK(n.agreement(a) == 8);
            const auto back = neighbors(n);
            CHECK(std::find(back.begin(), back.end(), a) != back.end());
        }
        CHECK(distinct.size() == 45);
        CHECK(distinct.count(a.to_string()) == 0);
    }
    for (const auto& n : neighbors(solution_assignment())) CHECK(cost(n) > 0);
}

TEST_CASE("neighbors follow the lexicographic pair order") {
    const auto nb = neighbors(Assignment{});
    CHECK(nb.front() == apply_swap(Assignment{}, Letter::A, Letter::B));
    CHECK(nb[9] == apply_swap(Assignment{}, Letter::B, Letter::D));
    CHECK(nb.back() == apply_swap(Assignment{}, Letter::R, Letter::T));
}

TEST_CASE("random elementary moves are uniform over the 45 neighbors") {
    Rng rng(2024);
    const auto a = example_state();
    const auto nb = neighbors(a);
    std::array<int, 45> counts{};
    const int draws = 225000;
    for (int i = 0; i < draws; ++i) {
        const auto b = random_elementary_move(a, rng);
        const auto it = std::find(nb.begin(), nb.end(), b);
        REQUIRE(it != nb.end());
        ++counts[it - nb.begin()];
    }
    const double expected = draws / 45.0;
    double chi2 = 0;
    for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
    // 44 degrees of freedom; 99.9% quantile is about 78.7
    CHECK(chi2 < 78.7);
}

TEST_CASE("two consecutive moves return to the start with probability 1/45") {
    Rng rng(77);
    const auto a = example_state();
    const int trials = 450000;
    int back = 0;
    for (int i = 0; i < trials; ++i)
        back += random_elementary_move(random_elementary_move(a, rng), rng) == a;
    const double p = 1.0 / 45.0;
    const double se = std::sqrt(p * (1 - p) / trials);
    CHECK(std::abs(back / double(trials) - p) < 4 * se);
}

TEST_CASE("uniform initial assignment: each letter's digit is uniform") {
    Rng rng(31);
    std::array<std::array<int, 10>, kNumLetters> counts{};
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const auto a = Assignment::uniform(rng);
        for (int l = 0; l < kNumLetters; ++l) ++counts[l][a.digit(letter_at(l))];
    }
    for (const auto& row : counts) {
        double chi2 = 0;
        for (int c : row) chi2 += (c - draws / 10.0) * (c - draws / 10.0) / (draws / 10.0);
        CHECK(chi2 < 27.9);  // 9 dof, 99.9%
    }
}
