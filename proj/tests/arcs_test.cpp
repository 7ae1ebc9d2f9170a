#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sct/arcs.hpp"

using sct::Arc;
using sct::ArcSet;

namespace {

const std::vector<long> bell_numbers = {1,    1,    2,     5,     15,    52,
                                        203,  877,  4140,  21147, 115975};

std::vector<Arc> all_arcs(int n) {
    std::vector<Arc> arcs;
    for (int i = 1; i < n; ++i)
        for (int l = i + 1; l <= n; ++l)
            arcs.push_back({i, l});
    return arcs;
}

}  // namespace

TEST_CASE("arc set construction and validation") {
    const ArcSet empty(4);
    CHECK(empty.n() == 4);
    CHECK(empty.size() == 0);
    CHECK(empty.arcs().empty());

    const ArcSet s(4, {{2, 3}, {1, 2}});
    CHECK(s.size() == 2);
    CHECK(s.arcs() == std::vector<Arc>{{1, 2}, {2, 3}});  // sorted
    CHECK(s.contains({1, 2}));
    CHECK(s.contains({2, 3}));
    CHECK_FALSE(s.contains({1, 3}));

    CHECK(ArcSet(4, {{1, 2}, {1, 2}}).size() == 1);  // duplicates collapse

    CHECK_THROWS_AS(ArcSet(4, {{1, 2}, {1, 3}}), std::invalid_argument);  // shared left
    CHECK_THROWS_AS(ArcSet(4, {{1, 3}, {2, 3}}), std::invalid_argument);  // shared right
    CHECK_THROWS_AS(ArcSet(4, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(ArcSet(4, {{2, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(ArcSet(4, {{3, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(ArcSet(-1), std::invalid_argument);

    CHECK(ArcSet(0).n() == 0);  // the empty diagram on zero nodes is legal
}

TEST_CASE("string form and parsing") {
    const ArcSet s(4, {{1, 4}, {2, 3}});
    CHECK(s.str() == "n=4:1-4,2-3");
    CHECK(ArcSet::parse("n=4:1-4,2-3") == s);
    CHECK(ArcSet(4).str() == "n=4:");
    CHECK(ArcSet::parse("n=4:") == ArcSet(4));
    CHECK(ArcSet::parse("n=0:") == ArcSet(0));

    for (const char* bad : {"", "n=", "n=4", "4:1-2", "n=4:2-1", "n=4:1-2,1-3",
                            "n=-1:", "n=4:1-2,", "n=4:0-2", "n=x:", "n=4:1_2"})
        CHECK_THROWS_AS(ArcSet::parse(bad), std::invalid_argument);

    for (int n = 0; n <= 5; ++n)
        for (const ArcSet& s2 : sct::enumerate_arc_sets(n))
            CHECK(ArcSet::parse(s2.str()) == s2);
}

TEST_CASE("enumeration counts are Bell numbers") {
    for (int n = 0; n <= 9; ++n)
        CHECK(sct::enumerate_arc_sets(n).size() == static_cast<size_t>(bell_numbers[n]));
    for (int n = 0; n <= 9; ++n) {
        long count = 0;
        sct::for_each_arc_set(n, [&](const std::vector<Arc>&) { ++count; });
        CHECK(count == bell_numbers[n]);
    }
}

TEST_CASE("validity is equivalent to block reconstruction, exhaustively at n=6") {
    const std::vector<Arc> arcs = all_arcs(6);
    REQUIRE(arcs.size() == 15);
    long valid_count = 0;
    for (unsigned mask = 0; mask < (1u << 15); ++mask) {
        std::vector<Arc> subset;
        for (int i = 0; i < 15; ++i)
            if (mask >> i & 1u)
                subset.push_back(arcs[i]);
        bool lefts_distinct = true, rights_distinct = true;
        std::vector<int> lc(7, 0), rc(7, 0);
        for (const Arc& a : subset) {
            if (++lc[a.left] > 1)
                lefts_distinct = false;
            if (++rc[a.right] > 1)
                rights_distinct = false;
        }
        const bool valid = lefts_distinct && rights_distinct;
        CHECK(sct::is_valid_arc_set(6, subset) == valid);
        if (!valid)
            continue;
        ++valid_count;
        // Blocks must partition [6] and their consecutive pairs must be the arcs.
        const ArcSet s(6, subset);
        std::vector<int> seen(7, 0);
        std::vector<Arc> covers;
        for (const std::vector<int>& block : sct::parts(s)) {
            REQUIRE(!block.empty());
            for (size_t i = 0; i < block.size(); ++i) {
                ++seen[block[i]];
                if (i + 1 < block.size())
                    covers.push_back({block[i], block[i + 1]});
            }
        }
        for (int v = 1; v <= 6; ++v)
            CHECK(seen[v] == 1);
        std::sort(covers.begin(), covers.end());
        CHECK(covers == s.arcs());
    }
    CHECK(valid_count == bell_numbers[6]);
}

TEST_CASE("blocks are reported in order of their least element") {
    const ArcSet s(4, {{1, 2}, {2, 3}});
    CHECK(sct::parts(s) == std::vector<std::vector<int>>{{1, 2, 3}, {4}});
    CHECK(sct::parts(ArcSet(3)) == std::vector<std::vector<int>>{{1}, {2}, {3}});
    const ArcSet t(5, {{2, 4}, {3, 5}});
    CHECK(sct::parts(t) == std::vector<std::vector<int>>{{1}, {2, 4}, {3, 5}});
}

TEST_CASE("statistics of a six node example") {
    const ArcSet s(6, {{1, 5}, {2, 3}, {3, 4}, {4, 6}});
    CHECK(sct::arc_count(s) == 4);
    CHECK(sct::dim_stat(s) == 8);
    CHECK(sct::dimv(s) == sct::IntPartitionKey{4, 2, 1, 1});
    CHECK(sct::rnode(s) == sct::IntPartitionKey{6, 5, 4, 3});
    CHECK(sct::nst(s, s) == 2);

    CHECK(sct::dimv(ArcSet(3)) == sct::IntPartitionKey{});
    CHECK(sct::rnode(ArcSet(3)) == sct::IntPartitionKey{});
}

TEST_CASE("nesting statistic") {
    const ArcSet outer(4, {{1, 4}});
    const ArcSet inner(4, {{2, 3}});
    CHECK(sct::nst(outer, inner) == 1);
    CHECK(sct::nst(inner, outer) == 0);
    CHECK(sct::nst(outer, outer) == 0);  // strict containment only
    CHECK_THROWS_AS(sct::nst(ArcSet(4), ArcSet(5)), std::invalid_argument);

    // Arcs nested under a single arc are bounded by its span minus one.
    for (int n = 2; n <= 5; ++n) {
        const auto sets = sct::enumerate_arc_sets(n);
        for (const Arc& a : all_arcs(n))
            for (const ArcSet& mu : sets)
                CHECK(sct::nst(ArcSet(n, {a}), mu) <= a.right - a.left - 1);
    }
}

TEST_CASE("conflict arcs") {
    const ArcSet s(4, {{1, 4}, {2, 3}});
    const std::vector<Arc> expected = {{1, 2}, {1, 3}, {2, 4}, {3, 4}};
    CHECK(sct::cflt(s) == expected);
    CHECK_FALSE(sct::is_valid_arc_set(4, expected));  // cflt need not be a diagram
    CHECK(sct::cflt(ArcSet(4)).empty());
    CHECK(sct::cflt(ArcSet(4, {{1, 2}})).empty());  // spans of one have no strict sub-arc
    CHECK(sct::cflt(ArcSet(3, {{1, 3}})) == std::vector<Arc>{{1, 2}, {2, 3}});
}

TEST_CASE("separated nesting splits along conflicts") {
    for (int n = 0; n <= 5; ++n) {
        const auto sets = sct::enumerate_arc_sets(n);
        for (const ArcSet& lam : sets) {
            const std::vector<Arc> conflicts = sct::cflt(lam);
            for (const ArcSet& mu : sets) {
                std::vector<Arc> in_conflict;
                std::set_intersection(mu.arcs().begin(), mu.arcs().end(),
                                      conflicts.begin(), conflicts.end(),
                                      std::back_inserter(in_conflict));
                CHECK(sct::snst(lam, mu) + sct::nst(lam.arcs(), in_conflict) ==
                      sct::nst(lam, mu));
            }
        }
    }
}

TEST_CASE("subset relation") {
    const ArcSet nu(4, {{1, 2}});
    const ArcSet mu(4, {{1, 2}, {2, 3}});
    CHECK(sct::is_subset(nu, mu));
    CHECK_FALSE(sct::is_subset(mu, nu));
    CHECK(sct::is_subset(ArcSet(4), mu));
    CHECK(sct::is_subset(mu, mu));
}

TEST_CASE("canonical order at n=3 and n=4") {
    const std::vector<std::string> expected3 = {"n=3:", "n=3:1-2", "n=3:2-3",
                                                "n=3:1-2,2-3", "n=3:1-3"};
    const auto sets3 = sct::enumerate_arc_sets(3);
    REQUIRE(sets3.size() == expected3.size());
    for (size_t i = 0; i < sets3.size(); ++i)
        CHECK(sets3[i].str() == expected3[i]);

    const std::vector<std::string> expected4 = {
        "n=4:",          "n=4:1-2",         "n=4:2-3",     "n=4:3-4",
        "n=4:1-2,2-3",   "n=4:1-2,3-4",     "n=4:2-3,3-4", "n=4:1-2,2-3,3-4",
        "n=4:1-3",       "n=4:2-4",         "n=4:1-2,2-4", "n=4:1-3,3-4",
        "n=4:1-3,2-4",   "n=4:1-4",         "n=4:1-4,2-3"};
    const auto sets4 = sct::enumerate_arc_sets(4);
    REQUIRE(sets4.size() == expected4.size());
    for (size_t i = 0; i < sets4.size(); ++i)
        CHECK(sets4[i].str() == expected4[i]);
}

TEST_CASE("enumeration is strictly sorted by the total order") {
    for (int n = 0; n <= 5; ++n) {
        const auto sets = sct::enumerate_arc_sets(n);
        for (size_t i = 0; i < sets.size(); ++i) {
            CHECK(sct::total_order_cmp(sets[i], sets[i]) == std::strong_ordering::equal);
            for (size_t j = i + 1; j < sets.size(); ++j) {
                CHECK(sct::total_order_cmp(sets[i], sets[j]) == std::strong_ordering::less);
                CHECK(sct::total_order_cmp(sets[j], sets[i]) ==
                      std::strong_ordering::greater);
            }
        }
    }
}

TEST_CASE("total order refines the superset order") {
    for (int n = 0; n <= 6; ++n) {
        const auto sets = sct::enumerate_arc_sets(n);
        for (const ArcSet& nu : sets)
            for (const ArcSet& mu : sets) {
                if (!sct::is_subset(nu, mu) || nu == mu)
                    continue;
                CHECK(sct::total_order_cmp(nu, mu) == std::strong_ordering::less);
            }
    }
}

TEST_CASE("ties in the statistics are broken lexicographically at n=7") {
    const ArcSet a(7, {{3, 5}, {4, 7}});
    const ArcSet b(7, {{2, 5}, {5, 7}});
    REQUIRE(sct::dimv(a) == sct::dimv(b));
    REQUIRE(sct::rnode(a) == sct::rnode(b));
    CHECK(sct::total_order_cmp(b, a) == std::strong_ordering::less);

    const auto sets = sct::enumerate_arc_sets(7);
    const auto pos = [&](const ArcSet& s) {
        return std::find(sets.begin(), sets.end(), s) - sets.begin();
    };
    CHECK(pos(b) < pos(a));
}
