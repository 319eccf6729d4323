#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gsep/graph.hpp"

namespace gsep {

// Deterministic constructions. Vertex layouts are fixed and documented so
// tests can address vertices directly.

Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph path_graph(int n);      // 0-1-...-(n-1)
Graph cycle_graph(int n);     // n >= 3, 0-1-...-(n-1)-0
Graph complete_bipartite(int p, int q);  // part one 0..p-1, part two p..p+q-1

// Two ends 0 and 1 joined by three internally disjoint paths with l1, l2, l3
// edges; every li >= 2. Internal vertices appended path by path.
Graph theta_graph(int l1, int l2, int l3);

// Apex 0, triangle {1,2,3}, paths of l1, l2, l3 edges from the apex to the
// triangle; li >= 1 and at least two li >= 2.
Graph pyramid_graph(int l1, int l2, int l3);

// Triangles {0,1,2} and {3,4,5} linked by vertex-disjoint paths of l1, l2,
// l3 edges (i to 3+i); li >= 1. "Long" when some li >= 2.
Graph prism_graph(int l1, int l2, int l3);
bool is_long_prism_params(int l1, int l2, int l3);

// Complete prism: cliques A = 0..n-1 and B = n..2n-1 plus the perfect
// matching i -- n+i; n >= 3.
Graph short_n_prism(int n);

// Hole 0..hole_len-1 (hole_len >= 4) plus hub hole_len adjacent to the >= 3
// listed hole positions. Broken means the spokes do not form one circular arc.
Graph wheel_graph(int hole_len, const std::vector<int>& spokes);
bool is_broken_wheel_params(int hole_len, const std::vector<int>& spokes);

// Two nonadjacent apexes 0 and 1 joined to every vertex of g (shifted by 2).
Graph apex_pair(const Graph& g);

// apex_pair(complement(cycle(2k+1))), k >= 1; 2k+3 vertices. The minimal
// obstructions for membership at level two.
Graph forbidden_g2_minor(int k);

// Each edge uv becomes a path u-x-y-v; the 2|E| new vertices are appended in
// canonical edge order. Triangle-free, 3-colorable, and alpha increases by
// exactly |E|.
Graph poljak_double_subdivision(const Graph& g);

// G(n, p) with a fixed pair order and the documented SplitMix64 stream.
Graph random_graph(int n, double p, std::uint64_t seed);

// Chordal graph built by adding vertex v with a clique neighborhood among
// 0..v-1, so 0..n-1 read in order is a 1-simplicial elimination ordering.
Graph random_chordal(int n, std::uint64_t seed);

// Rejection-samples random_graph(n, p) until the level-two membership test
// accepts; none when `tries` attempts are exhausted.
std::optional<Graph> random_g2_sample(int n, double p, std::uint64_t seed, int tries);

}  // namespace gsep
