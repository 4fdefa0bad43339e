#include "redcheck/coloring.hpp"

#include <algorithm>

namespace redcheck {

bool is_proper(const LineGraphAdjacency& lg, const FullColoring& full) {
    if (static_cast<int>(full.size()) != lg.edge_count()) return false;
    for (int e = 0; e < lg.edge_count(); ++e) {
        if (full[e] < 1 || full[e] > 3) return false;
        for (int f : lg.neighbors[e])
            if (f > e && full[f] == full[e]) return false;
    }
    return true;
}

namespace {

// Static search order: repeatedly pick the uncolored internal edge with the
// most neighbors that are either frontier edges or already ordered.
std::vector<int> search_order(const LineGraphAdjacency& lg) {
    const int internal = lg.internal_count;
    std::vector<int> constrained(internal, 0);
    for (int e = 0; e < internal; ++e)
        for (int f : lg.neighbors[e])
            if (f >= internal) ++constrained[e];

    std::vector<int> order;
    std::vector<bool> placed(internal, false);
    order.reserve(internal);
    for (int step = 0; step < internal; ++step) {
        int best = -1;
        for (int e = 0; e < internal; ++e)
            if (!placed[e] && (best == -1 || constrained[e] > constrained[best]))
                best = e;
        placed[best] = true;
        order.push_back(best);
        for (int f : lg.neighbors[best])
            if (f < internal && !placed[f]) ++constrained[f];
    }
    return order;
}

bool backtrack(const LineGraphAdjacency& lg, const std::vector<int>& order,
               std::size_t depth, FullColoring& colors) {
    if (depth == order.size()) return true;
    const int e = order[depth];
    for (Color c = 1; c <= 3; ++c) {
        bool free = true;
        for (int f : lg.neighbors[e])
            if (colors[f] == c) {
                free = false;
                break;
            }
        if (!free) continue;
        colors[e] = c;
        if (backtrack(lg, order, depth + 1, colors)) return true;
        colors[e] = 0;
    }
    return false;
}

bool solve(const LineGraphAdjacency& lg, const FrontierColoring& gamma,
           FullColoring& colors) {
    colors.assign(lg.edge_count(), 0);
    for (int k = 0; k < lg.frontier_count; ++k) colors[lg.internal_count + k] = gamma[k];
    return backtrack(lg, search_order(lg), 0, colors);
}

}  // namespace

bool is_extendable(const LineGraphAdjacency& lg, const FrontierColoring& gamma) {
    FullColoring colors;
    return solve(lg, gamma, colors);
}

std::optional<FullColoring> extend_to_full(const LineGraphAdjacency& lg,
                                           const FrontierColoring& gamma) {
    FullColoring colors;
    if (!solve(lg, gamma, colors)) return std::nullopt;
    return colors;
}

std::vector<FrontierColoring> compute_gamma0(const Pattern& p) {
    const LineGraphAdjacency lg = line_graph(p);
    std::vector<FrontierColoring> out;
    for (const auto& rep : enumerate_class_representatives(p))
        if (is_extendable(lg, rep)) out.push_back(rep);
    return out;
}

}  // namespace redcheck
