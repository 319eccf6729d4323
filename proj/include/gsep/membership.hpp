#pragma once

#include <optional>
#include <vector>

#include "gsep/cover.hpp"
#include "gsep/separators.hpp"

namespace gsep {

// Outcome of the level-k membership test. When the graph is outside the
// class, `witness` is a minimal separator needing more than k cliques,
// carried with its certificate. When inside, `covers` holds one cover per
// enumerated separator (truncated to `cover_limit` entries).
struct MembershipVerdict {
    bool in_class = false;
    int k = 0;
    std::optional<SeparatorRecord> witness;
    std::vector<std::pair<VertexSet, CliqueCover>> covers;
};

struct MembershipOptions {
    EnumerationOptions enumeration;
    // Keep at most this many per-separator covers on success.
    int cover_limit = 64;
};

// Tests whether every minimal separator of g splits into at most k cliques.
// Streams separators and short-circuits on the first violation in serial
// mode; with threads > 1 the full stream is scanned and the witness is the
// lexicographically least violator. Cap overflow raises
// budget_exhausted_error (indeterminate), never a verdict.
MembershipVerdict gk_membership(const Graph& g, int k, const MembershipOptions& opt = {});

// max over minimal separators of the clique cover number (0 when none), i.e.
// the least k for which gk_membership holds.
int separator_profile(const Graph& g, const MembershipOptions& opt = {});

}  // namespace gsep
