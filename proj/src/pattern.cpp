#include "redcheck/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace redcheck {

ParseError::ParseError(int line_, int column_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ", column " +
                         std::to_string(column_) + ": " + msg),
      line(line_),
      column(column_) {}

const std::array<ColorPermutation, 6>& all_color_permutations() {
    static const std::array<ColorPermutation, 6> perms = {{
        {{0, 1, 2, 3}},
        {{0, 1, 3, 2}},
        {{0, 2, 1, 3}},
        {{0, 2, 3, 1}},
        {{0, 3, 1, 2}},
        {{0, 3, 2, 1}},
    }};
    return perms;
}

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

int parse_int(const Token& tok, int line_no) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok.text, &pos);
    } catch (const std::exception&) {
        throw ParseError(line_no, tok.column, "expected an integer, got '" + tok.text + "'");
    }
    if (pos != tok.text.size() || value < 0)
        throw ParseError(line_no, tok.column,
                         "expected a non-negative integer, got '" + tok.text + "'");
    return value;
}

FrontierPermutation identity_permutation(int m) {
    FrontierPermutation id(m);
    std::iota(id.begin(), id.end(), 0);
    return id;
}

FrontierPermutation compose(const FrontierPermutation& a, const FrontierPermutation& b) {
    // (a * b)(k) = a(b(k))
    FrontierPermutation out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[b[k]];
    return out;
}

FrontierPermutation invert(const FrontierPermutation& a) {
    FrontierPermutation out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[a[k]] = static_cast<int>(k);
    return out;
}

std::string perm_to_string(const FrontierPermutation& pi) {
    std::ostringstream os;
    for (std::size_t k = 0; k < pi.size(); ++k) {
        if (k) os << ' ';
        os << pi[k];
    }
    return os.str();
}

// pi is a rotation or reflection of the cycle 0..m-1: pi(k) = (s*k + r) mod m.
bool is_dihedral(const FrontierPermutation& pi) {
    const int m = static_cast<int>(pi.size());
    if (m <= 2) return true;
    for (int s : {1, -1}) {
        const int r = pi[0];
        bool ok = true;
        for (int k = 0; k < m; ++k) {
            if (pi[k] != ((s * k + r) % m + m) % m) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Searches for a bijection of the vertices that preserves internal
// adjacency and maps the half-edge at frontier[k] to the one at
// frontier[pi[k]] for every k.
bool induced_by_pattern_map(const Pattern& p, const FrontierPermutation& pi) {
    const int n = p.vertex_count;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<int> degree(n, 0);
    for (auto [u, v] : p.internal_edges) {
        adj[u][v] = adj[v][u] = true;
        ++degree[u];
        ++degree[v];
    }
    std::vector<bool> has_half(n, false);
    for (int v : p.frontier) has_half[v] = true;

    std::vector<int> image(n, -1), used(n, 0);
    for (int k = 0; k < p.frontier_size(); ++k) {
        int v = p.frontier[k];
        int w = p.frontier[pi[k]];
        if (image[v] != -1 && image[v] != w) return false;
        image[v] = w;
    }
    for (int v = 0; v < n; ++v)
        if (image[v] != -1) {
            if (used[image[v]]) return false;
            used[image[v]] = 1;
            if (degree[v] != degree[image[v]]) return false;
        }
    // adjacency among the pinned vertices
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (image[u] != -1 && image[v] != -1 && adj[u][v] != adj[image[u]][image[v]])
                return false;

    std::vector<int> free_vertices;
    for (int v = 0; v < n; ++v)
        if (image[v] == -1) free_vertices.push_back(v);

    auto extend = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == free_vertices.size()) return true;
        int v = free_vertices[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || has_half[w] || degree[w] != degree[v]) continue;
            bool ok = true;
            for (int u = 0; u < n; ++u) {
                if (image[u] == -1) continue;
                if (adj[v][u] != adj[w][image[u]]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            if (self(self, idx + 1)) return true;
            image[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    return extend(extend, 0);
}

}  // namespace

Pattern parse_pattern(std::string_view text) {
    Pattern p;
    bool has_header = false, has_vertices = false;
    std::vector<FrontierPermutation> syms;
    std::vector<std::pair<std::vector<int>, int>> deferred_syms;  // values + line

    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool any_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        any_content = true;
        const std::string& key = toks[0].text;
        if (key == "pattern") {
            if (toks.size() != 2)
                throw ParseError(line_no, toks[0].column, "expected: pattern <name>");
            if (has_header) throw ParseError(line_no, toks[0].column, "duplicate pattern line");
            p.name = toks[1].text;
            has_header = true;
        } else if (key == "vertices") {
            if (toks.size() != 2)
                throw ParseError(line_no, toks[0].column, "expected: vertices <n>");
            if (has_vertices)
                throw ParseError(line_no, toks[0].column, "duplicate vertices line");
            p.vertex_count = parse_int(toks[1], line_no);
            has_vertices = true;
        } else if (key == "edge") {
            if (toks.size() != 3)
                throw ParseError(line_no, toks[0].column, "expected: edge <u> <v>");
            int u = parse_int(toks[1], line_no);
            int v = parse_int(toks[2], line_no);
            p.internal_edges.emplace_back(std::min(u, v), std::max(u, v));
        } else if (key == "half") {
            if (toks.size() != 2)
                throw ParseError(line_no, toks[0].column, "expected: half <v>");
            p.frontier.push_back(parse_int(toks[1], line_no));
        } else if (key == "sym") {
            std::vector<int> images;
            for (std::size_t i = 1; i < toks.size(); ++i)
                images.push_back(parse_int(toks[i], line_no));
            deferred_syms.emplace_back(std::move(images), line_no);
        } else {
            throw ParseError(line_no, toks[0].column, "unknown directive '" + key + "'");
        }
    }
    if (!any_content) throw ParseError(line_no ? line_no : 1, 1, "empty pattern file");
    if (!has_header) throw ParseError(1, 1, "missing 'pattern <name>' header line");
    if (!has_vertices) throw ParseError(1, 1, "missing 'vertices <n>' line");

    const int m = p.frontier_size();
    for (auto& [images, sym_line] : deferred_syms) {
        if (static_cast<int>(images.size()) != m)
            throw ParseError(sym_line, 1,
                             "sym line has " + std::to_string(images.size()) +
                                 " entries, frontier has " + std::to_string(m));
        syms.push_back(images);
    }
    syms.push_back(identity_permutation(m));
    std::sort(syms.begin(), syms.end());
    syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
    p.symmetries = std::move(syms);

    validate_pattern(p);
    return p;
}

void validate_pattern(const Pattern& p) {
    const int n = p.vertex_count;
    if (n < 2) throw ValidationError("pattern needs at least 2 vertices, has " +
                                     std::to_string(n));

    std::set<std::pair<int, int>> seen;
    std::vector<int> degree(n, 0);
    for (auto [u, v] : p.internal_edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} references a vertex out of range");
        if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
        if (u > v) throw ValidationError("internal edge not normalized");
        if (!seen.insert({u, v}).second)
            throw ValidationError("multiple edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
        ++degree[u];
        ++degree[v];
    }

    std::vector<int> half_count(n, 0);
    for (int v : p.frontier) {
        if (v < 0 || v >= n)
            throw ValidationError("half-edge references vertex " + std::to_string(v) +
                                  " out of range");
        if (++half_count[v] > 1)
            throw ValidationError("vertex " + std::to_string(v) +
                                  " carries more than one half-edge");
    }
    for (int v = 0; v < n; ++v) {
        int d = degree[v] + half_count[v];
        if (d < 2 || d > 3)
            throw ValidationError("vertex " + std::to_string(v) + " has total degree " +
                                  std::to_string(d) + ", must be 2 or 3");
    }

    // connectivity of the internal graph
    std::vector<std::vector<int>> neigh(n);
    for (auto [u, v] : p.internal_edges) {
        neigh[u].push_back(v);
        neigh[v].push_back(u);
    }
    std::vector<bool> reached(n, false);
    std::vector<int> stack = {0};
    reached[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : neigh[v])
            if (!reached[u]) {
                reached[u] = true;
                stack.push_back(u);
            }
    }
    for (int v = 0; v < n; ++v)
        if (!reached[v])
            throw ValidationError("internal graph is disconnected (vertex " +
                                  std::to_string(v) + " unreachable)");

    // symmetry group axioms
    const int m = p.frontier_size();
    std::set<FrontierPermutation> group(p.symmetries.begin(), p.symmetries.end());
    if (group.size() != p.symmetries.size())
        throw ValidationError("duplicate symmetry permutation");
    for (const auto& pi : p.symmetries) {
        if (static_cast<int>(pi.size()) != m)
            throw ValidationError("symmetry '" + perm_to_string(pi) +
                                  "' has wrong length");
        std::vector<bool> hit(m, false);
        for (int v : pi) {
            if (v < 0 || v >= m || hit[v])
                throw ValidationError("symmetry '" + perm_to_string(pi) +
                                      "' is not a permutation");
            hit[v] = true;
        }
    }
    if (!group.count(identity_permutation(m)))
        throw ValidationError("symmetry group does not contain the identity");
    for (const auto& a : p.symmetries) {
        if (!group.count(invert(a)))
            throw ValidationError("symmetry group not closed under inverse: missing "
                                  "inverse of '" + perm_to_string(a) + "'");
        for (const auto& b : p.symmetries)
            if (!group.count(compose(a, b)))
                throw ValidationError("symmetry group not closed under composition: '" +
                                      perm_to_string(a) + "' * '" + perm_to_string(b) +
                                      "' is missing");
    }
    for (const auto& pi : p.symmetries) {
        if (!is_dihedral(pi))
            throw ValidationError("symmetry '" + perm_to_string(pi) +
                                  "' does not preserve the cyclic frontier order");
        if (!induced_by_pattern_map(p, pi))
            throw ValidationError("symmetry '" + perm_to_string(pi) +
                                  "' is not induced by any degree-preserving pattern map");
    }
}

LineGraphAdjacency line_graph(const Pattern& p) {
    LineGraphAdjacency lg;
    lg.internal_count = static_cast<int>(p.internal_edges.size());
    lg.frontier_count = p.frontier_size();
    const int total = lg.edge_count();

    std::vector<std::vector<int>> incident(p.vertex_count);
    for (int e = 0; e < lg.internal_count; ++e) {
        incident[p.internal_edges[e].first].push_back(e);
        incident[p.internal_edges[e].second].push_back(e);
    }
    for (int k = 0; k < lg.frontier_count; ++k)
        incident[p.frontier[k]].push_back(lg.internal_count + k);

    lg.neighbors.assign(total, {});
    for (const auto& at_vertex : incident)
        for (int a : at_vertex)
            for (int b : at_vertex)
                if (a != b) lg.neighbors[a].push_back(b);
    for (auto& nb : lg.neighbors) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return lg;
}

FrontierColoring apply_action(const ColorPermutation& sigma, const FrontierColoring& gamma,
                              const FrontierPermutation& pi) {
    FrontierColoring out(gamma.size());
    for (std::size_t k = 0; k < gamma.size(); ++k) out[k] = sigma(gamma[pi[k]]);
    return out;
}

FrontierColoring canonical_representative(const Pattern& p, const FrontierColoring& gamma) {
    if (static_cast<int>(gamma.size()) != p.frontier_size())
        throw std::invalid_argument("coloring length " + std::to_string(gamma.size()) +
                                    " does not match frontier size " +
                                    std::to_string(p.frontier_size()));
    FrontierColoring best = gamma;
    FrontierColoring candidate(gamma.size());
    bool first = true;
    for (const auto& sigma : all_color_permutations()) {
        for (const auto& pi : p.symmetries) {
            for (std::size_t k = 0; k < gamma.size(); ++k)
                candidate[k] = sigma(gamma[pi[k]]);
            if (first || candidate < best) {
                best = candidate;
                first = false;
            }
        }
    }
    return best;
}

std::vector<FrontierColoring> enumerate_class_representatives(const Pattern& p) {
    std::set<FrontierColoring> reps;
    FrontierColoring gamma(p.frontier_size(), 1);
    do {
        reps.insert(canonical_representative(p, gamma));
    } while (next_coloring(gamma));
    return {reps.begin(), reps.end()};
}

std::size_t orbit_size(const Pattern& p, const FrontierColoring& gamma) {
    std::set<FrontierColoring> orbit;
    for (const auto& sigma : all_color_permutations())
        for (const auto& pi : p.symmetries) orbit.insert(apply_action(sigma, gamma, pi));
    return orbit.size();
}

bool next_coloring(FrontierColoring& gamma) {
    for (int k = static_cast<int>(gamma.size()) - 1; k >= 0; --k) {
        if (gamma[k] < 3) {
            ++gamma[k];
            return true;
        }
        gamma[k] = 1;
    }
    return false;
}

std::string coloring_to_string(const FrontierColoring& gamma) {
    std::string out;
    out.reserve(gamma.size());
    for (Color c : gamma) out.push_back(static_cast<char>('0' + c));
    return out;
}

}  // namespace redcheck
