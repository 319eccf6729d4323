#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gsep/vertex_set.hpp"

namespace gsep {

using Weight = std::int64_t;
using VertexWeights = std::vector<Weight>;

// Undirected simple graph on vertices 0..n-1, immutable after construction,
// adjacency stored as one VertexSet per vertex.
class Graph {
public:
    Graph() = default;

    // Validates vertex range and rejects loops; duplicate edges collapse.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    // Validates symmetry and irreflexivity of the given adjacency rows.
    static Graph from_adjacency(std::vector<VertexSet> adj);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    VertexSet closed_neighborhood(int v) const {
        VertexSet s = adj_[v];
        s.add(v);
        return s;
    }
    VertexSet vertices() const { return VertexSet::full(n_); }
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const = default;

    // Largest supported vertex count; construction beyond it throws.
    static int max_vertices();
    static void set_max_vertices(int cap);

private:
    explicit Graph(std::vector<VertexSet> adj) : n_(static_cast<int>(adj.size())), adj_(std::move(adj)) {}
    static void check_cap(int n);

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// One side of a separation: A and B are nonempty, anticomplete to each other,
// and A, B, C partition the vertex set.
struct CutPartition {
    VertexSet a;
    VertexSet b;
    VertexSet c;
};

void validate_weights(const Graph& g, const VertexWeights& w);

}  // namespace gsep
