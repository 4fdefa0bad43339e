#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "redcheck/builtins.hpp"
#include "redcheck/coloring.hpp"
#include "redcheck/rank.hpp"
#include "testutil.hpp"

using namespace redcheck;

TEST_CASE("P232 rank table") {
    Pattern p = builtin("P232");
    RankTable table = compute_ranks(p);
    REQUIRE(table.total() == 4);
    CHECK(table.k0 == 1);
    CHECK(table.stage_counts == std::vector<std::size_t>{3, 1});
    CHECK(table.unranked().empty());
    for (const auto& c : table.classes) {
        REQUIRE(c.rank.has_value());
        if (*c.rank == 1) {
            CHECK(c.representative == FrontierColoring{1, 2, 1});
            CHECK(*c.witness_pair == ColorPair{1, 2});
        } else {
            CHECK_FALSE(c.witness_pair.has_value());
        }
    }
}

TEST_CASE("rank histograms and k0 match the census") {
    for (const auto& expected : testutil::expected_census()) {
        Verdict v = is_reducible_pattern(builtin(expected.name));
        CHECK(v.reducible);
        CHECK(v.total_classes == expected.total);
        CHECK(v.histogram == expected.histogram);
        CHECK(v.k0 == expected.k0);
        CHECK(v.unranked.empty());
    }
}

TEST_CASE("rank 0 entries are exactly the extendable classes") {
    for (const char* name : {"P232", "P323", "P7"}) {
        Pattern p = builtin(name);
        RankTable table = compute_ranks(p);
        std::set<FrontierColoring> rank0;
        for (const auto& c : table.classes)
            if (c.rank && *c.rank == 0) rank0.insert(c.representative);
        const auto gamma0 = compute_gamma0(p);
        CHECK(rank0 == std::set<FrontierColoring>(gamma0.begin(), gamma0.end()));
    }
}

TEST_CASE("ranks are gap-free and the stage loop terminates early") {
    for (const Pattern& p : all_builtins()) {
        RankTable table = compute_ranks(p);
        for (std::size_t k = 1; k < table.stage_counts.size(); ++k)
            CHECK(table.stage_counts[k] > 0);
        CHECK(table.stages_executed <= static_cast<int>(table.total()) + 1);
        // rank k+1 classes are reducible to ranks <= k but not to ranks < k
        std::size_t sum = 0;
        for (std::size_t c : table.stage_counts) sum += c;
        CHECK(sum == table.ranked_count());
    }
}

TEST_CASE("the ranked sets form a strictly growing chain up to the fixpoint") {
    Pattern p = builtin("P323");
    RankTable table = compute_ranks(p);
    auto below = [&](int bound) {
        std::set<FrontierColoring> reps;
        for (const auto& c : table.classes)
            if (c.rank && *c.rank < bound) reps.insert(c.representative);
        return reps;
    };
    for (int k = 0; k < table.k0; ++k) {
        auto pi_k = below(k + 1);
        auto pi_next = below(k + 2);
        CHECK(std::includes(pi_next.begin(), pi_next.end(), pi_k.begin(), pi_k.end()));
        CHECK(pi_next.size() > pi_k.size());
    }
    CHECK(below(table.k0 + 1) == below(table.k0 + 2));
}

TEST_CASE("rank <= k sets are closed under the group action") {
    Pattern p = builtin("P323");
    RankTable table = compute_ranks(p);
    std::map<FrontierColoring, int> rank_of;
    for (const auto& c : table.classes)
        if (c.rank) rank_of[c.representative] = *c.rank;
    FrontierColoring gamma(p.frontier_size(), 1);
    do {
        int r = rank_of.at(canonical_representative(p, gamma));
        for (const auto& sigma : all_color_permutations())
            for (const auto& pi : p.symmetries) {
                FrontierColoring image = apply_action(sigma, gamma, pi);
                CHECK(rank_of.at(canonical_representative(p, image)) == r);
            }
    } while (next_coloring(gamma));
}

TEST_CASE("two runs produce identical tables") {
    Pattern p = builtin("P23322");
    RankTable a = compute_ranks(p);
    RankTable b = compute_ranks(p);
    REQUIRE(a.total() == b.total());
    CHECK(a.k0 == b.k0);
    CHECK(a.stage_counts == b.stage_counts);
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        CHECK(a.classes[i].representative == b.classes[i].representative);
        CHECK(a.classes[i].rank == b.classes[i].rank);
        CHECK(a.classes[i].witness_pair == b.classes[i].witness_pair);
        CHECK(a.classes[i].orbit_size == b.classes[i].orbit_size);
    }
}

TEST_CASE("oracle-checked run matches the plain run") {
    Pattern p = builtin("P323");
    RankOptions opts;
    opts.oracle_check = true;
    RankTable checked = compute_ranks(p, opts);
    RankTable plain = compute_ranks(p);
    CHECK(checked.k0 == plain.k0);
    CHECK(checked.stage_counts == plain.stage_counts);
}

TEST_CASE("a non-3-edge-colorable pattern with empty frontier is not reducible") {
    Pattern knot = parse_pattern(
        "pattern K4s\nvertices 5\n"
        "edge 0 2\nedge 0 3\nedge 0 4\n"
        "edge 1 2\nedge 1 3\nedge 1 4\n"
        "edge 2 3\n");
    Verdict v = is_reducible_pattern(knot);
    CHECK_FALSE(v.reducible);
    CHECK(v.total_classes == 1);
    CHECK(v.histogram == std::vector<std::size_t>{0});
    CHECK(v.unranked.size() == 1);
    CHECK(v.k0 == 1);
}

TEST_CASE("histogram table for a single pattern") {
    std::vector<Verdict> one = {is_reducible_pattern(builtin("P22"))};
    CHECK(rank_histogram_table_csv(one) == "pattern,total,rank0\nP22,2,2\n");
}

TEST_CASE("histogram table renderings") {
    std::vector<Verdict> verdicts = {
        is_reducible_pattern(builtin("P22")),
        is_reducible_pattern(builtin("P232")),
    };
    CHECK(rank_histogram_table_csv(verdicts) ==
          "pattern,total,rank0,rank1\n"
          "P22,2,2,\n"
          "P232,4,3,1\n");
    CHECK(rank_histogram_table_text(verdicts) ==
          "pattern  total  rank0  rank1\n"
          "P22          2      2     --\n"
          "P232         4      3      1\n");
}
