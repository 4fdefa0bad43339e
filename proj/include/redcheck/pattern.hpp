// pattern.hpp
//
// Plane subcubic patterns: a connected internal graph whose vertices may
// carry at most one half-edge each, pending towards the outer face. The
// half-edges (the frontier) are listed in their cyclic order around the
// outer face. A frontier coloring assigns one of the colors {1,2,3} to
// each frontier position; colorings are grouped into equivalence classes
// modulo color permutations and the pattern's symmetry group.

#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace redcheck {

using Color = int;  // 1, 2 or 3
using FrontierColoring = std::vector<Color>;  // indexed by frontier position
using FullColoring = std::vector<Color>;      // indexed by edge id
using FrontierPermutation = std::vector<int>; // position k maps to entry [k]

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& msg);
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One of the 6 bijections of {1,2,3}. image[0] is unused.
struct ColorPermutation {
    std::array<Color, 4> image;
    Color operator()(Color c) const { return image[c]; }
    bool operator==(const ColorPermutation&) const = default;
};

const std::array<ColorPermutation, 6>& all_color_permutations();

struct Pattern {
    std::string name;
    int vertex_count = 0;
    std::vector<std::pair<int, int>> internal_edges;  // u < v, no duplicates
    std::vector<int> frontier;  // frontier position -> vertex carrying the half-edge
    std::vector<FrontierPermutation> symmetries;  // full group, identity included

    int frontier_size() const { return static_cast<int>(frontier.size()); }
    bool operator==(const Pattern&) const = default;
};

// Adjacency of the line graph. Edge ids: internal edges first (in input
// order), then frontier edges in cyclic order. Two edge ids are adjacent
// iff the corresponding edges share a vertex of the pattern.
struct LineGraphAdjacency {
    int internal_count = 0;
    int frontier_count = 0;
    std::vector<std::vector<int>> neighbors;  // edge id -> sorted adjacent ids

    int edge_count() const { return internal_count + frontier_count; }
};

// Parses the line-oriented pattern file format:
//   pattern <name>
//   vertices <n>
//   edge <u> <v>          one per internal edge
//   half <v>              one per half-edge, in cyclic frontier order
//   sym <i0> ... <i_m-1>  image of each frontier position (identity implied)
//   # comment (anywhere)
// The returned pattern satisfies all invariants; throws ParseError on
// malformed input, ValidationError on invariant violations.
Pattern parse_pattern(std::string_view text);

// Checks every structural invariant: degrees in {2,3}, at most one
// half-edge per vertex, simple connected internal graph, and that the
// symmetries form a group of dihedral frontier permutations, each induced
// by a degree-preserving map of the pattern onto itself.
void validate_pattern(const Pattern& p);

LineGraphAdjacency line_graph(const Pattern& p);

// gamma composed with a symmetry and a color permutation:
// out[k] = sigma(gamma[pi[k]]).
FrontierColoring apply_action(const ColorPermutation& sigma,
                              const FrontierColoring& gamma,
                              const FrontierPermutation& pi);

// Lexicographically minimal coloring equivalent to gamma modulo color
// permutations and pattern symmetries. Throws std::invalid_argument on a
// length mismatch.
FrontierColoring canonical_representative(const Pattern& p,
                                          const FrontierColoring& gamma);

// Sorted, duplicate-free list of all canonical class representatives.
std::vector<FrontierColoring> enumerate_class_representatives(const Pattern& p);

// Number of distinct colorings in the equivalence class of gamma.
std::size_t orbit_size(const Pattern& p, const FrontierColoring& gamma);

// Iterates all 3^m colorings in lexicographic order. Returns false when
// gamma has wrapped around (gamma must start as all 1s).
bool next_coloring(FrontierColoring& gamma);

std::string coloring_to_string(const FrontierColoring& gamma);

}  // namespace redcheck
