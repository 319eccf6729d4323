#pragma once

#include <vector>

#include "gsep/graph.hpp"

namespace gsep {

// Result of an operation that renumbers vertices: `to_new[old]` is -1 for
// dropped vertices, `to_old[new]` recovers originals (for contractions,
// the surviving representative).
struct MappedGraph {
    Graph graph;
    std::vector<int> to_new;
    std::vector<int> to_old;
};

// Subgraph induced by `keep`; kept vertices are renumbered in increasing
// original order.
MappedGraph induced_subgraph(const Graph& g, const VertexSet& keep);

Graph complement(const Graph& g);

// Contracts edge uv into a single vertex placed at min(u,v)'s slot; the other
// endpoint is removed and higher vertices shift down. Requires uv in E.
MappedGraph contract_edge(const Graph& g, int u, int v);

// Relabels: vertex v of g becomes perm[v]. perm must be a permutation.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Disjoint union; vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

// Disjoint union plus all edges between the two sides.
Graph complete_join(const Graph& a, const Graph& b);

// Identifies clique c1 of g1 with clique c2 of g2 along the bijection given
// by `pairing` (entries are (vertex in c1, vertex in c2)). Vertices of g1
// keep their labels; unshared vertices of g2 are appended in increasing
// order. map2 sends g2 vertices to the result.
struct GlueResult {
    Graph graph;
    std::vector<int> map2;
};
GlueResult glue_along_clique(const Graph& g1, const Graph& g2,
                             const std::vector<std::pair<int, int>>& pairing);

// Connected components as vertex sets, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& sub);
VertexSet component_of(const Graph& g, const VertexSet& sub, int v);

// Components of the complement, ordered by smallest vertex.
std::vector<VertexSet> anticomponents(const Graph& g);

bool is_connected(const Graph& g);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_stable_set(const Graph& g, const VertexSet& s);

// True when no four vertices induce a diamond (K4 minus an edge); checked via
// every open neighborhood inducing a disjoint union of cliques.
bool is_diamond_free(const Graph& g);

// N(s) = vertices outside s with a neighbor in s.
VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s);

}  // namespace gsep
