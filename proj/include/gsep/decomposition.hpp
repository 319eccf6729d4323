#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gsep/graph.hpp"

namespace gsep {

// Binary decomposition tree over subsets of the original vertex set. A split
// node carries a clique cutset c of its vertex span and the component a that
// was cut off; its left child spans a union c, its right child the rest
// union c. Leaves are atoms: induced subgraphs without clique cutsets.
struct DecompositionTree {
    struct Node {
        bool is_atom = true;
        VertexSet vertices;  // span of this subtree
        VertexSet cutset;    // split only
        VertexSet side_a;    // split only
        int left = -1;
        int right = -1;
        std::vector<std::pair<int, int>> atom_edges;  // atom only, original labels
    };
    std::vector<Node> nodes;
    int root = -1;

    // Atom node indices / spans in depth-first left-before-right order.
    std::vector<int> atom_indices() const;
    std::vector<VertexSet> atoms() const;
};

// A clique cutset of g as a cut partition (shrunk to a minimal separator),
// or none exactly when no clique cutset exists. Disconnected graphs yield
// the empty cutset.
std::optional<CutPartition> find_clique_cutset(const Graph& g);

// Recursively splits along clique cutsets found by a minimal-elimination-
// ordering scan; every emitted piece is re-scanned, so leaves admit no
// clique cutset.
DecompositionTree decompose(const Graph& g);

// Rebuilds the decomposed graph by gluing children along their cutsets;
// reglue(decompose(g)) == g.
Graph reglue(const DecompositionTree& tree);

// Minimal elimination ordering machinery (exposed for tests): returns the
// elimination sequence (first entry eliminated first) and the filled
// adjacency of the minimal triangulation, restricted to `sub`.
struct MinimalOrdering {
    std::vector<int> elimination;
    std::vector<VertexSet> fill_adjacency;
};
MinimalOrdering mcs_m(const Graph& g, const VertexSet& sub);

}  // namespace gsep
