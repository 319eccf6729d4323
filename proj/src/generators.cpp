#include "gsep/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "gsep/graph_ops.hpp"
#include "gsep/membership.hpp"
#include "gsep/rng.hpp"

namespace gsep {

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph edgeless_graph(int n) { return Graph::from_edges(n, {}); }

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("part sizes must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < p; ++u) {
        for (int v = 0; v < q; ++v) edges.emplace_back(u, p + v);
    }
    return Graph::from_edges(p + q, edges);
}

namespace {

// Appends a path of `len` edges between existing vertices a and b; internal
// vertices start at *next.
void add_path(std::vector<std::pair<int, int>>& edges, int a, int b, int len, int* next) {
    int prev = a;
    for (int i = 1; i < len; ++i) {
        int x = (*next)++;
        edges.emplace_back(prev, x);
        prev = x;
    }
    edges.emplace_back(prev, b);
}

}  // namespace

Graph theta_graph(int l1, int l2, int l3) {
    for (int l : {l1, l2, l3}) {
        if (l < 2) throw std::invalid_argument("theta path lengths must all be at least 2");
    }
    std::vector<std::pair<int, int>> edges;
    int next = 2;
    add_path(edges, 0, 1, l1, &next);
    add_path(edges, 0, 1, l2, &next);
    add_path(edges, 0, 1, l3, &next);
    return Graph::from_edges(next, edges);
}

Graph pyramid_graph(int l1, int l2, int l3) {
    for (int l : {l1, l2, l3}) {
        if (l < 1) throw std::invalid_argument("pyramid path lengths must be at least 1");
    }
    if ((l1 >= 2) + (l2 >= 2) + (l3 >= 2) < 2) {
        throw std::invalid_argument("pyramid needs at least two paths of length 2 or more");
    }
    std::vector<std::pair<int, int>> edges{{1, 2}, {1, 3}, {2, 3}};
    int next = 4;
    add_path(edges, 0, 1, l1, &next);
    add_path(edges, 0, 2, l2, &next);
    add_path(edges, 0, 3, l3, &next);
    return Graph::from_edges(next, edges);
}

Graph prism_graph(int l1, int l2, int l3) {
    for (int l : {l1, l2, l3}) {
        if (l < 1) throw std::invalid_argument("prism path lengths must be at least 1");
    }
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
    int next = 6;
    add_path(edges, 0, 3, l1, &next);
    add_path(edges, 1, 4, l2, &next);
    add_path(edges, 2, 5, l3, &next);
    return Graph::from_edges(next, edges);
}

bool is_long_prism_params(int l1, int l2, int l3) { return l1 >= 2 || l2 >= 2 || l3 >= 2; }

Graph short_n_prism(int n) {
    if (n < 3) throw std::invalid_argument("complete prism needs cliques of size at least 3");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
            edges.emplace_back(n + u, n + v);
        }
        edges.emplace_back(u, n + u);
    }
    return Graph::from_edges(2 * n, edges);
}

Graph wheel_graph(int hole_len, const std::vector<int>& spokes) {
    if (hole_len < 4) throw std::invalid_argument("wheel hole must have length at least 4");
    if (static_cast<int>(spokes.size()) < 3) throw std::invalid_argument("wheel needs at least 3 spokes");
    std::vector<bool> seen(hole_len, false);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < hole_len; ++v) edges.emplace_back(v, (v + 1) % hole_len);
    for (int s : spokes) {
        if (s < 0 || s >= hole_len) throw std::invalid_argument("spoke position out of range");
        if (seen[s]) throw std::invalid_argument("duplicate spoke position");
        seen[s] = true;
        edges.emplace_back(hole_len, s);
    }
    return Graph::from_edges(hole_len + 1, edges);
}

bool is_broken_wheel_params(int hole_len, const std::vector<int>& spokes) {
    if (hole_len < 4 || static_cast<int>(spokes.size()) < 3) return false;
    std::vector<bool> in(hole_len, false);
    for (int s : spokes) in[s] = true;
    int gaps = 0;  // arcs = number of spoke positions whose successor is spokeless
    for (int v = 0; v < hole_len; ++v) {
        if (in[v] && !in[(v + 1) % hole_len]) ++gaps;
    }
    return gaps >= 2;
}

Graph apex_pair(const Graph& g) { return complete_join(edgeless_graph(2), g); }

Graph forbidden_g2_minor(int k) {
    if (k < 1) throw std::invalid_argument("forbidden minor level must be at least 1");
    return apex_pair(complement(cycle_graph(2 * k + 1)));
}

Graph poljak_double_subdivision(const Graph& g) {
    int next = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int x = next++, y = next++;
        edges.emplace_back(u, x);
        edges.emplace_back(x, y);
        edges.emplace_back(y, v);
    }
    return Graph::from_edges(next, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.next_double() < p) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph random_chordal(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    SplitMix64 rng(seed);
    std::vector<VertexSet> earlier(n, VertexSet(n > 0 ? n : 1));
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        if (rng.next_below(16) == 0) continue;  // occasionally isolated
        int u = static_cast<int>(rng.next_below(v));
        VertexSet clique(earlier[u].universe());
        clique.add(u);
        for (int z = earlier[u].first(); z >= 0; z = earlier[u].next(z)) {
            if (rng.next_bool() && clique.is_subset_of(earlier[z] | VertexSet(clique.universe(), {z}))) {
                clique.add(z);
            }
        }
        for (int z = clique.first(); z >= 0; z = clique.next(z)) {
            edges.emplace_back(z, v);
            earlier[z].add(v);
            earlier[v].add(z);
        }
    }
    return Graph::from_edges(n, edges);
}

std::optional<Graph> random_g2_sample(int n, double p, std::uint64_t seed, int tries) {
    SplitMix64 rng(seed);
    for (int t = 0; t < tries; ++t) {
        Graph g = random_graph(n, p, rng.next());
        if (gk_membership(g, 2).in_class) return g;
    }
    return std::nullopt;
}

}  // namespace gsep
