// builtins.cpp
//
// The six built-in patterns. Each comment block fixes the plane drawing
// the cyclic frontier order was read from: the path is horizontal, read
// left to right, and the listed half-edge order is one full walk around
// the outer face. Relabeling the circle by a rotation or reflection does
// not change class counts or ranks, but the relative cyclic positions do,
// so the orders below are pinned.

#include "redcheck/builtins.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace redcheck {

namespace {

Pattern make(std::string name, int vertex_count,
             std::vector<std::pair<int, int>> edges, std::vector<int> frontier,
             std::vector<FrontierPermutation> extra_syms) {
    Pattern p;
    p.name = std::move(name);
    p.vertex_count = vertex_count;
    p.internal_edges = std::move(edges);
    p.frontier = std::move(frontier);
    FrontierPermutation id(p.frontier.size());
    for (std::size_t k = 0; k < id.size(); ++k) id[k] = static_cast<int>(k);
    p.symmetries.push_back(std::move(id));
    for (auto& s : extra_syms) p.symmetries.push_back(std::move(s));
    std::sort(p.symmetries.begin(), p.symmetries.end());
    validate_pattern(p);
    return p;
}

// P22: an edge between two degree-2 vertices, one half-edge at each end.
//
//   h0 --- 0 === 1 --- h1
//
// Frontier order (h0, h1); the end swap is a symmetry.
Pattern make_p22() {
    return make("P22", 2, {{0, 1}}, {0, 1}, {{1, 0}});
}

// P232: a path 0-1-2 of degrees 2,3,2, one half-edge at every vertex,
// all drawn on the same side.
//
//   0 === 1 === 2
//   |     |     |
//   h0    h1    h2
//
// Frontier order (h0, h1, h2); reflection swaps the ends.
Pattern make_p232() {
    return make("P232", 3, {{0, 1}, {1, 2}}, {0, 1, 2}, {{2, 1, 0}});
}

// P323: a path 0-1-2 of degree-3 vertices, each with a degree-2 neighbor
// (3, 4, 5 respectively) hanging below; half-edges at the path ends point
// up and outward.
//
//   h0              h1
//     \             /
//      0 === 1 === 2
//      |     |     |
//      3     4     5
//      |     |     |
//      h4    h3    h2
//
// Walking around the outer face: h at 0, h at 2, then down the right side
// and back along the bottom: h at 5, h at 4, h at 3. Reflection about the
// middle vertex swaps 0<->2 and 3<->5.
Pattern make_p323() {
    return make("P323", 6, {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 5}},
                {0, 2, 5, 4, 3}, {{1, 0, 4, 3, 2}});
}

// P23322: same internal tree as P323, but the degree-2 neighbor of the
// first path vertex sits above the path instead of below.
//
//       3 --- h0
//       |
//       0 === 1 === 2 --- h1
//      /      |     |
//    h4       4     5
//             |     |
//             h3    h2
//
// Frontier order (h at 3, h at 2, h at 5, h at 4, h at 0). The abstract
// tree still has an end swap, but it reverses only part of the circle, so
// the symmetry group is trivial.
Pattern make_p23322() {
    return make("P23322", 6, {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 5}},
                {3, 2, 5, 4, 0}, {});
}

// P32332: a path 0-1-2-3 of degree-3 vertices; 0, 1 and 3 have degree-2
// neighbors (4, 5, 6) below the path, and the half-edge of 2 points down
// as well, between them.
//
//   h0                         h1
//     \                        /
//      0 === 1 === 2 === 3
//      |     |     |     |
//      4     5     h3    6
//      |     |           |
//      h5    h4          h2
//
// Frontier order (h at 0, h at 3, h at 6, h at 2, h at 5, h at 4). The
// rank census is sensitive to the side of vertex 2's half-edge: drawn on
// the top side instead, 47 of the 122 classes end up with no rank. No
// nontrivial symmetry.
Pattern make_p32332() {
    return make("P32332", 7, {{0, 1}, {0, 4}, {1, 2}, {1, 5}, {2, 3}, {3, 6}},
                {0, 3, 6, 2, 5, 4}, {});
}

// P7: a 7-cycle 0-1-2-3-4-5-6 (an inner face), vertex 0 of degree 2;
// vertices 3 and 4 carry pendant degree-2 neighbors 7 and 8 outside the
// cycle, the remaining cycle vertices carry half-edges outside.
//
//             0
//           .   .
//   h0 - 1       6 - h5
//   h1 - 2       5 - h4
//           .   .
//          3 --- 4
//          |     |
//          7     8
//          |     |
//          h2    h3
//
// Frontier order (h at 1, h at 2, h at 7, h at 8, h at 5, h at 6);
// reflection through vertex 0 and the opposite edge 3-4 reverses it.
Pattern make_p7() {
    return make("P7", 9,
                {{0, 1}, {0, 6}, {1, 2}, {2, 3}, {3, 4}, {3, 7}, {4, 5}, {4, 8}, {5, 6}},
                {1, 2, 7, 8, 5, 6}, {{5, 4, 3, 2, 1, 0}});
}

const std::vector<Pattern>& catalog() {
    static const std::vector<Pattern> patterns = {
        make_p22(), make_p232(), make_p323(), make_p23322(), make_p32332(), make_p7(),
    };
    return patterns;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& p : catalog()) out.push_back(p.name);
        return out;
    }();
    return names;
}

bool is_builtin(const std::string& name) {
    for (const auto& p : catalog())
        if (p.name == name) return true;
    return false;
}

Pattern builtin(const std::string& name) {
    for (const auto& p : catalog())
        if (p.name == name) return p;
    std::ostringstream os;
    os << "unknown builtin pattern '" << name << "'; available:";
    for (const auto& n : builtin_names()) os << ' ' << n;
    throw std::invalid_argument(os.str());
}

std::vector<Pattern> all_builtins() { return catalog(); }

}  // namespace redcheck
