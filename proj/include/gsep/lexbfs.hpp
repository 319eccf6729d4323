#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gsep/cover.hpp"
#include "gsep/graph.hpp"

namespace gsep {

// Visit order produced by lexicographic breadth-first search.
struct Ordering {
    int start = 0;
    std::vector<int> seq;
};

// Partition-refinement LexBFS from `start`; ties pop the smallest vertex of
// the first class, so the output is deterministic. Unreached components are
// taken up in index order once the labels run dry.
Ordering lexbfs(const Graph& g, int start);

// Checks that seq read left to right eliminates from the back: position i is
// valid when seq[i]'s neighborhood inside {seq[0..i]} splits into at most k
// cliques. bad_index is the first failing position, or -1.
struct EliminationCheck {
    bool ok = true;
    int bad_index = -1;
};
EliminationCheck is_k_simplicial_elimination_ordering(const Graph& g, const std::vector<int>& seq,
                                                      int k);

// Chordality: the LexBFS order from vertex 0 must be a 1-simplicial
// elimination ordering.
bool is_chordal(const Graph& g);

// A vertex whose whole neighborhood covers by k cliques, with the cover.
// Tries the last LexBFS vertex first, then scans in index order.
std::optional<std::pair<int, CliqueCover>> find_k_simplicial_vertex(const Graph& g, int k);

}  // namespace gsep
