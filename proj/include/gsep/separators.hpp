#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gsep/graph.hpp"

namespace gsep {

// One enumerated minimal separator together with the certificate that makes
// minimality checkable in isolation: a witness nonadjacent pair and the two
// full components flanking it.
struct SeparatorRecord {
    VertexSet separator;
    int witness_a = -1;
    int witness_b = -1;
    VertexSet side_a;
    VertexSet side_b;
};

struct EnumerationOptions {
    // Abort with budget_exhausted_error after this many emitted separators.
    std::int64_t cap = 1'000'000;
    // threads <= 1 selects the serial reference path; larger values enable
    // the OpenMP frontier kernel. Both produce identical output sequences.
    int threads = 1;
};

bool is_separator(const Graph& g, const VertexSet& s, int a, int b);
bool is_minimal_ab_separator(const Graph& g, const VertexSet& s, int a, int b);

// Shrinks a separator of a and b to a minimal (a,b)-separator contained in it.
VertexSet minimalize_separator(const Graph& g, const VertexSet& s, int a, int b);

// True when g minus s has at least two components whose neighborhood is all
// of s; such components are recorded by the enumeration.
bool is_minimal_separator(const Graph& g, const VertexSet& s);

// Streams every minimal separator exactly once in a deterministic order
// (close-separator saturation). Returning false from the visitor stops early.
void for_each_minimal_separator(const Graph& g, const EnumerationOptions& opt,
                                const std::function<bool(const SeparatorRecord&)>& visit);

std::vector<SeparatorRecord> all_minimal_separators(const Graph& g,
                                                    const EnumerationOptions& opt = {});

// Minimal separators between the given nonadjacent pair. For vertices in
// different components this is exactly the empty set.
std::vector<SeparatorRecord> minimal_ab_separators(const Graph& g, int a, int b,
                                                   const EnumerationOptions& opt = {});

// Minimal cutsets: minimal separators every one of whose vertices sees every
// component of the remainder. A disconnected graph has exactly the empty one.
std::vector<VertexSet> minimal_cutsets(const Graph& g, const EnumerationOptions& opt = {});

// Splits V into (component of smallest vertex outside c, rest, c); c must be
// a cutset.
CutPartition cut_partition_for(const Graph& g, const VertexSet& c);

}  // namespace gsep
