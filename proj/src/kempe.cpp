#include "redcheck/kempe.hpp"

#include <algorithm>
#include <sstream>

namespace redcheck {

namespace {

void check_switchable(const FrontierColoring& gamma, ColorPair pair, int e) {
    if (e < 0 || e >= static_cast<int>(gamma.size()))
        throw std::invalid_argument("frontier position " + std::to_string(e) +
                                    " out of range");
    if (gamma[e] != pair.first && gamma[e] != pair.second)
        throw std::invalid_argument("frontier edge " + std::to_string(e) +
                                    " is colored " + std::to_string(gamma[e]) +
                                    ", not " + std::to_string(pair.first) + " or " +
                                    std::to_string(pair.second));
}

Color flipped(Color c, ColorPair pair) {
    return c == pair.first ? pair.second : pair.first;
}

}  // namespace

FrontierColoring boundary_switch_single(const FrontierColoring& gamma, ColorPair pair,
                                        int e) {
    check_switchable(gamma, pair, e);
    FrontierColoring out = gamma;
    out[e] = flipped(out[e], pair);
    return out;
}

FrontierColoring boundary_switch_pair(const FrontierColoring& gamma, ColorPair pair,
                                      int e, int e2) {
    if (e == e2) throw std::invalid_argument("pair switch needs two distinct edges");
    check_switchable(gamma, pair, e);
    check_switchable(gamma, pair, e2);
    FrontierColoring out = gamma;
    out[e] = flipped(out[e], pair);
    out[e2] = flipped(out[e2], pair);
    return out;
}

std::string dump_auxiliary_graph(const AuxiliaryGraph& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.circle_vertices.size(); ++i) {
        if (i) os << ' ';
        os << a.circle_vertices[i];
    }
    os << '\n';
    for (std::size_t i = 0; i < a.loops.size(); ++i) {
        if (i) os << ' ';
        os << a.loops[i];
    }
    os << '\n';
    for (auto [x, y] : a.chords) os << x << ' ' << y << '\n';
    return os.str();
}

AuxiliaryGraph build_auxiliary_graph(const Pattern& p, const ColoringPredicate& in_gamma,
                                     const FrontierColoring& gamma, ColorPair pair) {
    AuxiliaryGraph a;
    for (int k = 0; k < p.frontier_size(); ++k)
        if (gamma[k] == pair.first || gamma[k] == pair.second)
            a.circle_vertices.push_back(k);

    const int n = a.size();
    for (int x = 0; x < n; ++x)
        if (!in_gamma(boundary_switch_single(gamma, pair, a.circle_vertices[x])))
            a.loops.push_back(x);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (!in_gamma(boundary_switch_pair(gamma, pair, a.circle_vertices[x],
                                               a.circle_vertices[y])))
                a.chords.emplace_back(x, y);
    return a;
}

bool has_noncrossing_perfect_quasimatching(const AuxiliaryGraph& a) {
    const int n = a.size();
    std::vector<bool> loop(n, false);
    for (int x : a.loops) loop[x] = true;
    std::vector<std::vector<bool>> chord(n, std::vector<bool>(n, false));
    for (auto [x, y] : a.chords) chord[x][y] = chord[y][x] = true;

    // coverable[l][r]: the arc of positions [l, r) admits a non-crossing
    // perfect cover. Cutting the circle at position 0 is sound: chords
    // interleave cyclically iff they interleave in this linear order.
    std::vector<std::vector<bool>> coverable(n + 1, std::vector<bool>(n + 2, false));
    for (int l = 0; l <= n; ++l) coverable[l][l] = true;
    for (int len = 1; len <= n; ++len) {
        for (int l = 0; l + len <= n; ++l) {
            const int r = l + len;
            bool ok = loop[l] && coverable[l + 1][r];
            for (int k = l + 1; k < r && !ok; ++k)
                ok = chord[l][k] && coverable[l + 1][k] && coverable[k + 1][r];
            coverable[l][r] = ok;
        }
    }
    return coverable[0][n];
}

bool is_perfect_noncrossing(const AuxiliaryGraph& a, const QuasiMatching& m) {
    const int n = a.size();
    std::vector<bool> loop_avail(n, false);
    for (int x : a.loops) loop_avail[x] = true;
    std::vector<std::vector<bool>> chord_avail(n, std::vector<bool>(n, false));
    for (auto [x, y] : a.chords) chord_avail[x][y] = chord_avail[y][x] = true;

    std::vector<int> covered(n, 0);
    for (int x : m.loops) {
        if (x < 0 || x >= n || !loop_avail[x]) return false;
        ++covered[x];
    }
    for (auto [x, y] : m.chords) {
        if (x < 0 || x >= n || y < 0 || y >= n || x == y || !chord_avail[x][y])
            return false;
        ++covered[x];
        ++covered[y];
    }
    for (int x = 0; x < n; ++x)
        if (covered[x] != 1) return false;

    // cyclic interleaving test; loops lie outside the circle, never cross
    auto strictly_between = [&](int x, int from, int to) {
        int span = ((to - from) % n + n) % n;
        int off = ((x - from) % n + n) % n;
        return 0 < off && off < span;
    };
    for (std::size_t i = 0; i < m.chords.size(); ++i)
        for (std::size_t j = i + 1; j < m.chords.size(); ++j) {
            auto [a1, b1] = m.chords[i];
            auto [a2, b2] = m.chords[j];
            int inside = (strictly_between(a2, a1, b1) ? 1 : 0) +
                         (strictly_between(b2, a1, b1) ? 1 : 0);
            if (inside == 1) return false;
        }
    return true;
}

namespace {

bool enumerate_covers(const AuxiliaryGraph& a, std::vector<bool>& taken,
                      QuasiMatching& partial, const std::vector<bool>& loop_avail,
                      const std::vector<std::vector<bool>>& chord_avail) {
    const int n = a.size();
    int first = -1;
    for (int x = 0; x < n; ++x)
        if (!taken[x]) {
            first = x;
            break;
        }
    if (first == -1) return is_perfect_noncrossing(a, partial);

    taken[first] = true;
    if (loop_avail[first]) {
        partial.loops.push_back(first);
        if (enumerate_covers(a, taken, partial, loop_avail, chord_avail)) return true;
        partial.loops.pop_back();
    }
    for (int y = first + 1; y < n; ++y) {
        if (taken[y] || !chord_avail[first][y]) continue;
        taken[y] = true;
        partial.chords.emplace_back(first, y);
        if (enumerate_covers(a, taken, partial, loop_avail, chord_avail)) return true;
        partial.chords.pop_back();
        taken[y] = false;
    }
    taken[first] = false;
    return false;
}

}  // namespace

bool brute_force_quasimatching(const AuxiliaryGraph& a) {
    const int n = a.size();
    if (n > 12)
        throw std::invalid_argument("brute-force quasi-matching limited to 12 vertices, got " +
                                    std::to_string(n));
    std::vector<bool> loop_avail(n, false);
    for (int x : a.loops) loop_avail[x] = true;
    std::vector<std::vector<bool>> chord_avail(n, std::vector<bool>(n, false));
    for (auto [x, y] : a.chords) chord_avail[x][y] = chord_avail[y][x] = true;

    std::vector<bool> taken(n, false);
    QuasiMatching partial;
    return enumerate_covers(a, taken, partial, loop_avail, chord_avail);
}

ReductionResult is_reducible_to(const Pattern& p, const FrontierColoring& gamma,
                                const ColoringPredicate& in_gamma,
                                const AuxGraphObserver* observer) {
    static const ColorPair pairs[3] = {{1, 2}, {1, 3}, {2, 3}};
    for (ColorPair pair : pairs) {
        AuxiliaryGraph a = build_auxiliary_graph(p, in_gamma, gamma, pair);
        if (observer && *observer) (*observer)(a);
        if (!has_noncrossing_perfect_quasimatching(a)) return {true, pair};
    }
    return {false, std::nullopt};
}

}  // namespace redcheck
