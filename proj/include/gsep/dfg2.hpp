#pragma once

#include <vector>

#include "gsep/cover.hpp"
#include "gsep/decomposition.hpp"
#include "gsep/graph.hpp"
#include "gsep/solvers.hpp"

namespace gsep {

// Structural class of a connected graph without clique cutsets. A complete
// prism on parameter k is two disjoint k-cliques joined by a perfect
// matching where the i-th vertex of one clique is adjacent exactly to the
// i-th vertex of the other.
struct AtomClass {
    enum class Kind { Complete, Cycle, CompletePrism, Other };
    Kind kind = Kind::Other;
    int param = 0;  // vertex count (Complete), length (Cycle), clique size (CompletePrism)
    // Structural witness: Complete lists the vertices ascending in order_a;
    // Cycle lists a traversal in order_a (starting at the smallest vertex,
    // toward its smaller neighbor); CompletePrism lists one clique ascending
    // in order_a and the matched partners in order_b (order_a[i] adjacent to
    // order_b[i] and to no other order_b vertex).
    std::vector<int> order_a;
    std::vector<int> order_b;
};

// Decision order: a connected 2-regular graph is a cycle; then an all-
// degrees-(n-1) graph is complete; otherwise the prism shape is forced:
// 2k vertices, all degrees k, one vertex's neighborhood splitting into a
// (k-1)-clique component plus a single vertex, and both sides k-cliques.
// Throws std::invalid_argument on disconnected input.
AtomClass classify_atom(const Graph& h);

struct Recognition {
    bool accepted = false;
    bool diamond_free = false;
    DecompositionTree tree;
    std::vector<int> atom_nodes;          // tree node index per atom, tree order
    std::vector<AtomClass> atom_classes;  // parallel; witnesses in g's labels
};

// A graph is accepted exactly when it is diamond-free and every atom of its
// clique-cutset decomposition is a complete graph, a cycle, or a complete
// prism; this matches membership in the class whose minimal separators are
// unions of two cliques, restricted to diamond-free graphs.
Recognition recognize_dfg2(const Graph& g);

enum class Dfg2Problem { mwc, mwss, color };

struct Dfg2Solution {
    Dfg2Problem problem = Dfg2Problem::mwc;
    SolveResult best;   // mwc / mwss: optimum and certificate
    Coloring coloring;  // color only: optimal proper coloring
};

// Exact solvers over the decomposition of a recognized graph; throws
// strict_mode_error when recognition fails. Maximum-weight clique takes the
// best closed-form atom optimum; coloring aligns per-atom colorings along
// the gluing cliques top-down; maximum-weight stable set runs the cutset
// recursion that re-solves each side with and without every cutset vertex
// and folds the difference into redefined weights. All tie-breaking is by
// fixed deterministic rules, so reruns agree byte for byte. For color,
// best.value carries the color count.
Dfg2Solution solve_dfg2(const Graph& g, const VertexWeights& w, Dfg2Problem problem);

}  // namespace gsep
