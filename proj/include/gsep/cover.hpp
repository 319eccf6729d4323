#pragma once

#include <optional>
#include <vector>

#include "gsep/graph.hpp"

namespace gsep {

// Partition of a vertex set into at most k cliques; parts are disjoint,
// nonempty, and their union is the covered set.
struct CliqueCover {
    std::vector<VertexSet> parts;
    VertexSet covered;
};

bool verify_clique_cover(const Graph& g, const VertexSet& s, const CliqueCover& cover, int k);

// Fewest cliques of g[s] covering s; equals the chromatic number of the
// complement of g[s]. 0 for the empty set.
int clique_cover_number(const Graph& g, const VertexSet& s);

// A cover of s by at most k cliques when one exists. Levels 0-2 go through
// bipartiteness of the complement; higher levels through exact coloring.
// Deterministic: the underlying color assignment is lexicographically least.
std::optional<CliqueCover> k_simplicial_cover(const Graph& g, const VertexSet& s, int k);

// Whether N(v) splits into at most k cliques.
bool is_k_simplicial_vertex(const Graph& g, int v, int k);

// Exact chromatic number with a deterministic lexicographically least
// coloring (colors indexed by vertex); guarded for small graphs: above
// kExactColoringGuard vertices chromatic_number refuses to run.
inline constexpr int kExactColoringGuard = 20;

struct Coloring {
    int colors = 0;
    std::vector<int> assignment;
};
Coloring chromatic_number(const Graph& g);

// Lexicographically least proper k-coloring of g, if any.
std::optional<std::vector<int>> k_coloring_lex_least(const Graph& g, int k);

// Proper 2-coloring with the lexicographically least assignment (the
// smallest vertex of every component gets color 0), or none if an odd
// cycle exists.
std::optional<std::vector<int>> two_coloring(const Graph& g);

}  // namespace gsep
