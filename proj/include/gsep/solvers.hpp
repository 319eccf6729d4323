#pragma once

#include <functional>

#include "gsep/graph.hpp"

namespace gsep {

// Value plus certificate. Certificates are deterministic: among all optimal
// sets, the lexicographically least (as a sorted vertex sequence, shorter
// prefixes first) is returned, so reruns and independent solvers agree
// byte for byte.
struct SolveResult {
    Weight value = 0;
    VertexSet vertices;
};

// Maximum-weight stable set of a bipartite graph via min-cut duality on the
// derived source/sink network (source to one side with capacity w, other
// side to sink with capacity w, infinite capacity across edges), solved by
// blocking-flow augmentation with exact integer capacities.
// Throws std::invalid_argument when g is not bipartite.
SolveResult bipartite_mwis(const Graph& g, const VertexWeights& w);

// Minimum-weight vertex cover of a bipartite graph; its value equals the
// max flow of the derived network, which equals total weight minus the
// maximum-weight stable set. The certificate is the complement of the
// bipartite_mwis certificate.
SolveResult bipartite_min_vertex_cover(const Graph& g, const VertexWeights& w);

struct SolveOptions {
    // Verify a 2-clique simplicial elimination ordering up front and throw
    // strict_mode_error when none is found; without it the result is always
    // a valid clique, but maximality is only guaranteed when every swept
    // neighborhood splits into two cliques.
    bool strict = true;
    // Per-vertex subproblems are independent; with threads > 1 they run
    // under OpenMP and a deterministic reduction keeps the result identical
    // to the serial one.
    int threads = 1;
};

// Maximum-weight clique for graphs whose minimal separators are unions of
// two cliques: sweep a lexicographic BFS order v1..vn; the best clique whose
// last swept vertex is vi is {vi} plus a maximum-weight stable set of the
// complement of N(vi) inside G[v1..vi], which is bipartite for such graphs.
SolveResult mwc_g2(const Graph& g, const VertexWeights& w, const SolveOptions& opt = {});

// Size guard for the exhaustive solvers; past it they throw
// budget_exhausted_error rather than run forever.
inline constexpr int kBruteForceGuard = 24;
inline constexpr int kSmallScaleGuard = 40;

// Exhaustive branch-and-bound maximum-weight clique / stable set. Guarded
// by kBruteForceGuard.
SolveResult mwc_bruteforce(const Graph& g, const VertexWeights& w);
SolveResult mwss_bruteforce(const Graph& g, const VertexWeights& w);

// Stable-set number, via the memoized branching solver. Guarded by
// kSmallScaleGuard.
int alpha(const Graph& g);

// Maximum-weight stable set by memoized branching with component splitting:
// the exact reference for classes admitting polynomial algorithms whose
// published form is not reproduced here. The class parameter k is validated
// (k >= 0) but does not change the answer. Guarded by kSmallScaleGuard.
SolveResult mwss_gk_smallscale(const Graph& g, const VertexWeights& w, int k);

// Builds the lexicographically least stable set of weight `target` from a
// value oracle: `value_on(sub)` must return the maximum stable-set weight of
// g restricted to an arbitrary vertex subset. Scans vertices in index order,
// stops as soon as the target is collected (so the empty continuation beats
// any nonempty one), and keeps a vertex exactly when some optimum extends
// the choices made so far through it. Shared by every solver that promises
// lexicographically least certificates.
VertexSet lex_least_stable_certificate(const Graph& g, const VertexWeights& w, Weight target,
                                       const std::function<Weight(const VertexSet&)>& value_on);

}  // namespace gsep
