#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gsep/graph.hpp"

namespace gsep {

// Branch sets indexed by H-vertex: nonempty, disjoint, connected in G, with
// an edge between sets i and j exactly when ij is an edge of H.
struct InducedMinorModel {
    std::vector<VertexSet> branch_sets;
};

bool verify_model(const Graph& g, const Graph& h, const InducedMinorModel& model);

struct MinorSearchOptions {
    // Search nodes (vertex assignments tried) before raising
    // budget_exhausted_error.
    std::int64_t budget = 20'000'000;
};

// Branch-and-bound over assignments of G-vertices (in index order) to branch
// sets or deletion; prunes on cross-adjacency violations and broken
// connectivity. Returns the first model found, or none.
std::optional<InducedMinorModel> find_induced_minor(const Graph& g, const Graph& h,
                                                    const MinorSearchOptions& opt = {});

// Scans levels k = 1, 2, ... (while 2k+3 <= |V(g)| and k <= k_max) for the
// level-k obstruction as an induced minor.
struct ObstructionScan {
    bool found = false;
    int level = 0;
    std::optional<InducedMinorModel> model;
};
ObstructionScan g2_forbidden_minor_scan(const Graph& g, int k_max,
                                        const MinorSearchOptions& opt = {});

// Whether complement(h) embeds into complement(g) as a (not necessarily
// induced) subgraph: an injection preserving complement edges.
bool complement_subgraph_check(const Graph& g, const Graph& h);

}  // namespace gsep
