#include "nsmac/combinat.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

using namespace nsmac;

namespace {

Composition comp(std::initializer_list<int> e) { return Composition(std::vector<int>(e)); }

std::mt19937 rng(20240917);

Composition random_composition(int n, int maxval) {
    std::uniform_int_distribution<int> d(0, maxval);
    std::vector<int> e(static_cast<size_t>(n));
    for (auto& x : e) x = d(rng);
    return Composition(e);
}

}  // namespace

TEST_CASE("rank function examples") {
    CHECK(rank_function(comp({2, 0, 0, 0})).values() == std::vector<int>{1, 2, 3, 4});
    CHECK(rank_function(comp({0, 2, 0, 0})).values() == std::vector<int>{2, 1, 3, 4});
    CHECK(rank_function(comp({0, 0, 2, 0})).values() == std::vector<int>{2, 3, 1, 4});
    CHECK(rank_function(comp({0, 0, 0, 2})).values() == std::vector<int>{2, 3, 4, 1});
}

TEST_CASE("rank function is a permutation, identity iff partition") {
    for (int trial = 0; trial < 200; ++trial) {
        Composition a = random_composition(1 + trial % 7, 4);
        RankFunction r = rank_function(a);  // constructor checks permutation
        CHECK(r.is_identity() == a.is_weakly_decreasing());
        // alpha^+_{r(i)} = alpha_i
        auto sorted = a.sorted_desc();
        for (int i = 1; i <= a.n(); ++i)
            CHECK(sorted[static_cast<size_t>(r.at(i)) - 1] == a.at(i));
    }
}

TEST_CASE("dominance succ") {
    CHECK(dominance_succ(comp({3, 1}), comp({2, 2})));
    CHECK_FALSE(dominance_succ(comp({3, 1}), comp({3, 1})));
    CHECK_FALSE(dominance_succ(comp({2, 2}), comp({3, 1})));
    CHECK_THROWS_AS(dominance_succ(comp({3, 1}), comp({2, 1})), std::invalid_argument);
}

TEST_CASE("dominance tri") {
    CHECK(dominance_tri(comp({0, 2, 0, 0}), comp({0, 0, 2, 0})));
    CHECK(dominance_tri(comp({2, 0, 0, 0}), comp({1, 1, 0, 0})));
    CHECK_FALSE(dominance_tri(comp({2, 0, 0, 0}), comp({2, 0, 0, 0})));
    CHECK_FALSE(dominance_tri(comp({1, 1}), comp({2, 0, 0})));  // different N
}

TEST_CASE("dominance tri is a strict partial order on samples") {
    std::vector<Composition> sample;
    for (int t = 0; t < 40; ++t) sample.push_back(random_composition(4, 3));
    for (const auto& a : sample)
        for (const auto& b : sample) {
            if (dominance_tri(a, b)) CHECK_FALSE(dominance_tri(b, a));
            for (const auto& c : sample)
                if (dominance_tri(a, b) && dominance_tri(b, c)) CHECK(dominance_tri(a, c));
        }
}

TEST_CASE("enumerate RSYT counts") {
    CHECK(enumerate_rsyt(Partition({3, 1})).size() == 3);
    CHECK(enumerate_rsyt(Partition({5})).size() == 1);
    CHECK(enumerate_rsyt(Partition({2, 2})).size() == 2);
    for (auto shape : {Partition({3, 2}), Partition({4, 3}), Partition({2, 2, 1}),
                       Partition({3, 3, 1}), Partition({1, 1, 1, 1})})
        CHECK(static_cast<int>(enumerate_rsyt(shape).size()) == hook_length_count_check(shape));
    CHECK_THROWS_AS(enumerate_rsyt(Partition({21})), std::invalid_argument);
}

TEST_CASE("enumeration order: inv descending, first element is S0, last is S1") {
    for (auto shape : {Partition({3, 1}), Partition({4, 3}), Partition({2, 2, 1})}) {
        auto tabs = enumerate_rsyt(shape);
        auto [s0, s1] = extremal_tableaux(shape);
        CHECK(tabs.front() == s0);
        CHECK(tabs.back() == s1);
        for (size_t i = 0; i + 1 < tabs.size(); ++i)
            CHECK(inversions(tabs[i]) >= inversions(tabs[i + 1]));
    }
}

TEST_CASE("content vectors") {
    // shape (4,3) tableau with rows (bottom) 7 6 5 2 / 4 3 1
    Tableau s(Partition({4, 3}), {{7, 6, 5, 2}, {4, 3, 1}});
    CHECK(content_vector(s) == std::vector<int>{1, 3, 0, -1, 2, 1, 0});

    auto [s0, s1] = extremal_tableaux(Partition({3, 1}));
    CHECK(content_vector(s1) == std::vector<int>{-1, 2, 1, 0});

    auto row = extremal_tableaux(Partition({4})).second;
    CHECK(content_vector(row) == std::vector<int>{3, 2, 1, 0});
}

TEST_CASE("content vector determines the tableau") {
    for (auto shape : {Partition({3, 2}), Partition({4, 3}), Partition({2, 2, 2})}) {
        auto tabs = enumerate_rsyt(shape);
        std::set<std::vector<int>> seen;
        for (const auto& t : tabs) CHECK(seen.insert(content_vector(t)).second);
    }
}

TEST_CASE("inversions and extremal tableaux") {
    auto [s0, s1] = extremal_tableaux(Partition({4, 3}));
    CHECK(inversions(s0) == 6);
    CHECK(inversions(s1) == 0);
    CHECK(s0 == Tableau(Partition({4, 3}), {{7, 5, 3, 1}, {6, 4, 2}}));
    CHECK(s1 == Tableau(Partition({4, 3}), {{7, 6, 5, 4}, {3, 2, 1}}));

    auto [r0, r1] = extremal_tableaux(Partition({4}));
    CHECK(r0 == r1);
    auto [c0, c1] = extremal_tableaux(Partition({1, 1, 1}));
    CHECK(c0 == c1);
}

TEST_CASE("steps decrease inv by one and stay within the RSYT set") {
    for (auto shape : {Partition({3, 1}), Partition({3, 2}), Partition({2, 2, 1})}) {
        auto tabs = enumerate_rsyt(shape);
        std::set<Tableau> universe(tabs.begin(), tabs.end());
        for (const auto& t : tabs)
            for (int i = 1; i < t.num_entries(); ++i) {
                if (!step_is_legal(t, i)) continue;
                Tableau u = step(t, i);
                CHECK(inversions(u) == inversions(t) - 1);
                CHECK(u.is_rsyt());
                CHECK(universe.count(u) == 1);
            }
    }
}

TEST_CASE("step errors") {
    auto s1 = extremal_tableaux(Partition({3, 1})).second;
    // 3 and 2 share the bottom row of S1
    CHECK(s1.row_of(2) == s1.row_of(3));
    CHECK_THROWS_WITH_AS(step(s1, 2), "illegal step at i=2", std::invalid_argument);
}

TEST_CASE("the 2.3 shape-(3,1) tableaux are linked by a step at i=1") {
    Tableau first(Partition({3, 1}), {{4, 3, 2}, {1}});
    Tableau second(Partition({3, 1}), {{4, 3, 1}, {2}});
    CHECK(step_is_legal(second, 1));
    CHECK(step(second, 1) == first);
    CHECK_FALSE(step_is_legal(first, 1));  // inv(first) = 0, nothing below it
}

TEST_CASE("exchanged validates row order") {
    Tableau s(Partition({3, 3}), {{6, 4, 3}, {5, 2, 1}});
    // swapping 2 and 3 keeps rows ordered
    CHECK_NOTHROW(s.exchanged(2));
    // swapping 1 and 2 puts them adjacent in the top row: 5 1 2 is not ordered
    CHECK_THROWS_AS(s.exchanged(1), std::invalid_argument);
}

TEST_CASE("tableau kind flag") {
    Tableau rsyt(Partition({3, 3}), {{6, 4, 3}, {5, 2, 1}});
    CHECK(rsyt.kind() == TableauKind::RSYT);
    Tableau rro(Partition({3, 3}), {{6, 2, 1}, {5, 4, 3}});
    CHECK(rro.kind() == TableauKind::ReverseRowOrdered);
}

TEST_CASE("composition parsing and padding") {
    CHECK(Composition::parse("2,0,0,0") == comp({2, 0, 0, 0}));
    CHECK(comp({2, 1}).padded(4) == comp({2, 1, 0, 0}));
    CHECK(comp({2, 1}).to_string() == "2,1");
    CHECK(comp({0, 3, 1}).length() == 3);
    CHECK(comp({3, 1, 0}).length() == 2);
}
