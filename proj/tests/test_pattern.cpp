#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "redcheck/builtins.hpp"
#include "redcheck/pattern.hpp"
#include "testutil.hpp"

using namespace redcheck;

TEST_CASE("parse a two-vertex pattern") {
    Pattern p = parse_pattern(
        "pattern P22\n"
        "vertices 2\n"
        "edge 0 1\n"
        "half 0\n"
        "half 1\n"
        "sym 1 0\n");
    CHECK(p.name == "P22");
    CHECK(p.vertex_count == 2);
    CHECK(p.frontier_size() == 2);
    CHECK(p.internal_edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(p.symmetries.size() == 2);
    CHECK(p == builtin("P22"));
}

TEST_CASE("parse tolerates comments, blank lines and extra whitespace") {
    Pattern p = parse_pattern(
        "# a comment\n"
        "pattern   X\n"
        "\n"
        "vertices 3\n"
        "edge 1 0   # reversed endpoints are normalized\n"
        "edge 1 2\n"
        "half 0\n"
        "half 1\n"
        "half 2\n");
    CHECK(p.internal_edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(p.symmetries.size() == 1);  // identity implied
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_pattern(""), ParseError);
    CHECK_THROWS_AS(parse_pattern("vertices 2\nedge 0 1\nhalf 0\nhalf 1\n"), ParseError);
    CHECK_THROWS_AS(parse_pattern("pattern X\nvertices two\n"), ParseError);
    CHECK_THROWS_AS(parse_pattern("pattern X\nvertices 2\nedg 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_pattern("pattern X\nvertices 2\nedge 0\n"), ParseError);
    try {
        parse_pattern("pattern X\nvertices 2\nedge 0 q\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 8);
    }
}

TEST_CASE("validation rejects invariant violations") {
    // degree 4
    CHECK_THROWS_AS(parse_pattern("pattern X\nvertices 5\n"
                                  "edge 0 1\nedge 0 2\nedge 0 3\nedge 0 4\n"
                                  "half 0\nhalf 1\nhalf 2\nhalf 3\nhalf 4\n"),
                    ValidationError);
    // two half-edges on one vertex
    CHECK_THROWS_AS(parse_pattern("pattern X\nvertices 2\nedge 0 1\n"
                                  "half 0\nhalf 0\n"),
                    ValidationError);
    // self-loop
    CHECK_THROWS_AS(parse_pattern("pattern X\nvertices 2\nedge 0 0\nedge 0 1\n"
                                  "half 0\nhalf 1\n"),
                    ValidationError);
    // multiple edge
    CHECK_THROWS_AS(parse_pattern("pattern X\nvertices 2\nedge 0 1\nedge 1 0\n"
                                  "half 0\nhalf 1\n"),
                    ValidationError);
    // disconnected
    CHECK_THROWS_AS(parse_pattern("pattern X\nvertices 4\nedge 0 1\nedge 2 3\n"
                                  "half 0\nhalf 1\nhalf 2\nhalf 3\n"),
                    ValidationError);
    // degree 1
    CHECK_THROWS_AS(parse_pattern("pattern X\nvertices 2\nedge 0 1\nhalf 0\n"),
                    ValidationError);
}

TEST_CASE("validation rejects non-group symmetry lists") {
    // a 3-cycle of frontier positions without its square is not closed
    std::string base =
        "pattern X\nvertices 4\n"
        "edge 0 1\nedge 0 2\nedge 0 3\n"
        "half 1\nhalf 2\nhalf 3\n";
    CHECK_THROWS_AS(parse_pattern(base + "sym 1 2 0\n"), ValidationError);
    CHECK_NOTHROW(parse_pattern(base + "sym 1 2 0\nsym 2 0 1\n"));
    // not a permutation
    CHECK_THROWS_AS(parse_pattern(base + "sym 0 0 1\n"), ValidationError);
    // wrong length
    CHECK_THROWS_AS(parse_pattern(base + "sym 1 0\n"), ParseError);
}

TEST_CASE("validation rejects symmetries that break the cyclic order") {
    // swapping two adjacent positions of a 5-cycle is no rotation/reflection
    Pattern p = builtin("P323");
    p.symmetries.push_back({1, 0, 2, 3, 4});
    std::sort(p.symmetries.begin(), p.symmetries.end());
    p.symmetries.erase(std::unique(p.symmetries.begin(), p.symmetries.end()),
                       p.symmetries.end());
    CHECK_THROWS_AS(validate_pattern(p), ValidationError);
}

TEST_CASE("validation rejects dihedral permutations not induced by the graph") {
    // P23322 has no mirror: the lone top pendant breaks it
    Pattern p = builtin("P23322");
    p.symmetries.push_back({4, 3, 2, 1, 0});
    std::sort(p.symmetries.begin(), p.symmetries.end());
    CHECK_THROWS_AS(validate_pattern(p), ValidationError);
}

TEST_CASE("line graph of P22") {
    LineGraphAdjacency lg = line_graph(builtin("P22"));
    REQUIRE(lg.edge_count() == 3);
    CHECK(lg.internal_count == 1);
    // internal edge adjacent to both half-edges, half-edges not adjacent
    CHECK(lg.neighbors[0] == std::vector<int>{1, 2});
    CHECK(lg.neighbors[1] == std::vector<int>{0});
    CHECK(lg.neighbors[2] == std::vector<int>{0});
}

TEST_CASE("line graph of P232") {
    LineGraphAdjacency lg = line_graph(builtin("P232"));
    REQUIRE(lg.edge_count() == 5);
    // middle half-edge (id 3) touches both path edges; end half-edges one each
    CHECK(lg.neighbors[3] == std::vector<int>{0, 1});
    CHECK(lg.neighbors[2] == std::vector<int>{0});
    CHECK(lg.neighbors[4] == std::vector<int>{1});
}

TEST_CASE("line graph of P7 has 15 edge ids") {
    LineGraphAdjacency lg = line_graph(builtin("P7"));
    CHECK(lg.internal_count == 9);
    CHECK(lg.frontier_count == 6);
    CHECK(lg.edge_count() == 15);
}

TEST_CASE("line graph is symmetric, irreflexive and subcubic-bounded") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        Pattern p = testutil::random_pattern(rng);
        validate_pattern(p);
        LineGraphAdjacency lg = line_graph(p);
        for (int e = 0; e < lg.edge_count(); ++e) {
            CHECK(lg.neighbors[e].size() <= 4);
            for (int f : lg.neighbors[e]) {
                CHECK(f != e);
                const auto& back = lg.neighbors[f];
                CHECK(std::find(back.begin(), back.end(), e) != back.end());
            }
        }
    }
}

TEST_CASE("canonical representative basics") {
    Pattern p22 = builtin("P22");
    CHECK(canonical_representative(p22, {3, 3}) == FrontierColoring{1, 1});
    Pattern p232 = builtin("P232");
    CHECK(canonical_representative(p232, {1, 2, 1}) == FrontierColoring{1, 2, 1});
    CHECK_THROWS_AS(canonical_representative(p232, {1, 2}), std::invalid_argument);
}

TEST_CASE("canonical representative of (1,2,1) is minimal over all 12 actions") {
    Pattern p = builtin("P232");
    FrontierColoring gamma = {1, 2, 1};
    for (const auto& sigma : all_color_permutations())
        for (const auto& pi : p.symmetries)
            CHECK(FrontierColoring{1, 2, 1} <= apply_action(sigma, gamma, pi));
}

TEST_CASE("canonicalization is idempotent and sound on every builtin") {
    for (const Pattern& p : all_builtins()) {
        FrontierColoring gamma(p.frontier_size(), 1);
        do {
            FrontierColoring rep = canonical_representative(p, gamma);
            CHECK(canonical_representative(p, rep) == rep);
            for (const auto& sigma : all_color_permutations())
                for (const auto& pi : p.symmetries)
                    CHECK(canonical_representative(p, apply_action(sigma, gamma, pi)) ==
                          rep);
        } while (next_coloring(gamma));
    }
}

TEST_CASE("class representative counts match the census") {
    for (const auto& expected : testutil::expected_census()) {
        Pattern p = builtin(expected.name);
        CHECK(enumerate_class_representatives(p).size() == expected.total);
    }
}

TEST_CASE("orbit sizes partition the coloring space") {
    for (const Pattern& p : all_builtins()) {
        std::size_t sum = 0;
        for (const auto& rep : enumerate_class_representatives(p))
            sum += orbit_size(p, rep);
        std::size_t space = 1;
        for (int k = 0; k < p.frontier_size(); ++k) space *= 3;
        CHECK(sum == space);
    }
}
