// kempe.hpp
//
// Boundary switches and the auxiliary circle graph they induce. For a
// coloring gamma, a target set Gamma and a color pair {i,j}, the frontier
// edges colored i or j are placed on a circle in cyclic frontier order; a
// loop (chord) marks a single (pair) switch whose result is NOT in Gamma.
// gamma is reducible to Gamma when for some pair the auxiliary graph has
// no non-crossing perfect quasi-matching: however the Kempe chains of the
// host are disposed, some switch reaches Gamma.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "redcheck/pattern.hpp"

namespace redcheck {

using ColorPair = std::pair<Color, Color>;  // first < second

// Flips gamma[e] between i and j. Requires gamma[e] in {i,j}; throws
// std::invalid_argument otherwise.
FrontierColoring boundary_switch_single(const FrontierColoring& gamma,
                                        ColorPair pair, int e);

// Flips both gamma[e] and gamma[e2] between i and j (e != e2, both
// colored i or j, not necessarily with the same color).
FrontierColoring boundary_switch_pair(const FrontierColoring& gamma,
                                      ColorPair pair, int e, int e2);

struct AuxiliaryGraph {
    std::vector<int> circle_vertices;  // frontier positions, strictly increasing
    std::vector<int> loops;            // circle positions, increasing
    std::vector<std::pair<int, int>> chords;  // circle position pairs, a < b

    int size() const { return static_cast<int>(circle_vertices.size()); }
    bool operator==(const AuxiliaryGraph&) const = default;
};

// Line 1: circle vertices (frontier positions); line 2: loop positions;
// one line per chord.
std::string dump_auxiliary_graph(const AuxiliaryGraph& a);

using ColoringPredicate = std::function<bool(const FrontierColoring&)>;

AuxiliaryGraph build_auxiliary_graph(const Pattern& p,
                                     const ColoringPredicate& in_gamma,
                                     const FrontierColoring& gamma,
                                     ColorPair pair);

// Interval DP over the circle cut open at position 0: an arc is coverable
// iff it is empty, or its first vertex carries a loop and the rest is
// coverable, or its first vertex is chord-connected to some k inside the
// arc with both sub-arcs coverable. Loops are drawn outside the circle
// and never cross anything.
bool has_noncrossing_perfect_quasimatching(const AuxiliaryGraph& a);

// Independent oracle: enumerates every partition of the circle vertices
// into loops and chords and tests pairwise cyclic non-crossing directly.
// Guarded to at most 12 vertices; throws std::invalid_argument beyond.
bool brute_force_quasimatching(const AuxiliaryGraph& a);

struct QuasiMatching {
    std::vector<int> loops;                   // circle positions
    std::vector<std::pair<int, int>> chords;  // circle position pairs
};

// True iff the elements are available in a, pairwise disjoint, cover every
// circle vertex, and no two chords interleave in cyclic order.
bool is_perfect_noncrossing(const AuxiliaryGraph& a, const QuasiMatching& m);

struct ReductionResult {
    bool reducible = false;
    std::optional<ColorPair> witness_pair;
};

using AuxGraphObserver = std::function<void(const AuxiliaryGraph&)>;

// Tries the pairs {1,2}, {1,3}, {2,3} in order; the first pair whose
// auxiliary graph has no non-crossing perfect quasi-matching is the
// witness. The observer, when given, sees every auxiliary graph built.
ReductionResult is_reducible_to(const Pattern& p, const FrontierColoring& gamma,
                                const ColoringPredicate& in_gamma,
                                const AuxGraphObserver* observer = nullptr);

}  // namespace redcheck
