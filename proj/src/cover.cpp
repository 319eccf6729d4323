#include "gsep/cover.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gsep/graph_ops.hpp"

namespace gsep {

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            const VertexSet& nb = g.neighbors(v);
            for (int u = nb.first(); u >= 0; u = nb.next(u)) {
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

namespace {

bool k_colorable(const Graph& g, int k) {
    int n = g.vertex_count();
    if (n == 0) return true;
    if (k <= 0) return false;
    // Static max-degree-first order with used-color symmetry breaking.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(n, -1);

    auto rec = [&](auto&& self, int idx, int max_used) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        int limit = std::min(k - 1, max_used);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            const VertexSet& nb = g.neighbors(v);
            for (int u = nb.first(); u >= 0; u = nb.next(u)) {
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color[v] = c;
            if (self(self, idx + 1, std::max(max_used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

int greedy_clique_bound(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    for (int start = 0; start < n; ++start) {
        int size = 1;
        VertexSet cands = g.neighbors(start);
        while (!cands.empty()) {
            int v = cands.first();
            ++size;
            cands &= g.neighbors(v);
        }
        best = std::max(best, size);
    }
    return best;
}

int greedy_coloring_bound(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    int used = 0;
    for (int v = 0; v < n; ++v) {
        std::vector<bool> taken(n + 1, false);
        const VertexSet& nb = g.neighbors(v);
        for (int u = nb.first(); u >= 0; u = nb.next(u)) {
            if (color[u] >= 0) taken[color[u]] = true;
        }
        int c = 0;
        while (taken[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

}  // namespace

std::optional<std::vector<int>> k_coloring_lex_least(const Graph& g, int k) {
    int n = g.vertex_count();
    if (n == 0) return std::vector<int>{};
    if (k <= 0) return std::nullopt;
    std::vector<int> color(n, -1);
    // Vertices in index order, colors ascending: the first full assignment
    // found is the lexicographically least one.
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            const VertexSet& nb = g.neighbors(v);
            for (int u = nb.first(); u >= 0 && u < v; u = nb.next(u)) {
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return color;
}

Coloring chromatic_number(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return {0, {}};
    if (n > kExactColoringGuard) {
        throw std::invalid_argument("graph too large for exact coloring");
    }
    if (g.edge_count() == 0) return {1, std::vector<int>(n, 0)};
    int lb = greedy_clique_bound(g);
    int ub = greedy_coloring_bound(g);
    for (int k = lb; k <= ub; ++k) {
        if (k_colorable(g, k)) {
            return {k, *k_coloring_lex_least(g, k)};
        }
    }
    return {ub, *k_coloring_lex_least(g, ub)};  // unreachable: greedy bound colors
}

bool verify_clique_cover(const Graph& g, const VertexSet& s, const CliqueCover& cover, int k) {
    if (static_cast<int>(cover.parts.size()) > k) return false;
    if (cover.covered != s) return false;
    VertexSet seen(s.universe());
    for (const VertexSet& part : cover.parts) {
        if (part.empty()) return false;
        if (part.intersects(seen)) return false;
        if (!part.is_subset_of(s)) return false;
        if (!is_clique(g, part)) return false;
        seen |= part;
    }
    return seen == s;
}

int clique_cover_number(const Graph& g, const VertexSet& s) {
    if (s.empty()) return 0;
    Graph h = complement(induced_subgraph(g, s).graph);
    if (h.edge_count() == 0) return 1;
    if (two_coloring(h)) return 2;
    return chromatic_number(h).colors;
}

std::optional<CliqueCover> k_simplicial_cover(const Graph& g, const VertexSet& s, int k) {
    if (k < 0) throw std::invalid_argument("cover size must be nonnegative");
    if (s.empty()) return CliqueCover{{}, s};
    if (k == 0) return std::nullopt;
    MappedGraph sub = induced_subgraph(g, s);
    Graph h = complement(sub.graph);
    std::optional<std::vector<int>> coloring;
    if (k <= 2) {
        if (k == 1) {
            if (h.edge_count() != 0) return std::nullopt;
            coloring = std::vector<int>(h.vertex_count(), 0);
        } else {
            coloring = two_coloring(h);
        }
    } else {
        coloring = k_coloring_lex_least(h, k);
    }
    if (!coloring) return std::nullopt;
    int used = 0;
    for (int c : *coloring) used = std::max(used, c + 1);
    CliqueCover cover;
    cover.covered = s;
    cover.parts.assign(used, VertexSet(g.vertex_count()));
    for (int i = 0; i < h.vertex_count(); ++i) {
        cover.parts[(*coloring)[i]].add(sub.to_old[i]);
    }
    std::erase_if(cover.parts, [](const VertexSet& p) { return p.empty(); });
    return cover;
}

bool is_k_simplicial_vertex(const Graph& g, int v, int k) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    return k_simplicial_cover(g, g.neighbors(v), k).has_value();
}

}  // namespace gsep
