// coloring.hpp
//
// Extendability of frontier colorings: a frontier coloring is extendable
// if it is the restriction of some proper 3-edge-coloring of the whole
// pattern. Decided by exhaustive backtracking over the internal edges
// with the frontier colors pinned.

#pragma once

#include <optional>
#include <vector>

#include "redcheck/pattern.hpp"

namespace redcheck {

// True iff no two adjacent edge ids share a color and all colors are in
// {1,2,3}. Checks the full coloring against the line graph only.
bool is_proper(const LineGraphAdjacency& lg, const FullColoring& full);

// Verdict-only extendability test.
bool is_extendable(const LineGraphAdjacency& lg, const FrontierColoring& gamma);

// Extendability with a witness: a proper full coloring agreeing with
// gamma on the frontier, or nullopt.
std::optional<FullColoring> extend_to_full(const LineGraphAdjacency& lg,
                                           const FrontierColoring& gamma);

// The canonical representatives whose class is extendable (rank 0).
// Extendability is class-invariant, so testing representatives suffices.
std::vector<FrontierColoring> compute_gamma0(const Pattern& p);

}  // namespace redcheck
