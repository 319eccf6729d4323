#include "gsep/graph.hpp"

#include <stdexcept>
#include <string>

namespace gsep {

namespace {
int g_max_vertices = 4096;
}

int Graph::max_vertices() { return g_max_vertices; }

void Graph::set_max_vertices(int cap) {
    if (cap < 0) throw std::invalid_argument("vertex cap must be nonnegative");
    g_max_vertices = cap;
}

void Graph::check_cap(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (n > g_max_vertices) {
        throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(g_max_vertices));
    }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    check_cap(n);
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        }
        if (u == v) throw std::invalid_argument("loop rejected at vertex " + std::to_string(u));
        adj[u].add(v);
        adj[v].add(u);
    }
    return Graph(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj) {
    int n = static_cast<int>(adj.size());
    check_cap(n);
    for (int v = 0; v < n; ++v) {
        if (adj[v].universe() != n) throw std::invalid_argument("adjacency row has wrong universe");
        if (adj[v].contains(v)) throw std::invalid_argument("loop rejected at vertex " + std::to_string(v));
        for (int u = adj[v].first(); u >= 0; u = adj[v].next(u)) {
            if (!adj[u].contains(v)) throw std::invalid_argument("asymmetric adjacency");
        }
    }
    return Graph(std::move(adj));
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].count();
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
    }
    return out;
}

void validate_weights(const Graph& g, const VertexWeights& w) {
    if (static_cast<int>(w.size()) != g.vertex_count()) {
        throw std::invalid_argument("weight vector length does not match vertex count");
    }
    for (Weight x : w) {
        if (x < 0) throw std::invalid_argument("negative vertex weight");
    }
}

}  // namespace gsep
