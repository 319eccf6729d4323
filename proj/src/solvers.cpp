#include "gsep/solvers.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gsep/cover.hpp"
#include "gsep/errors.hpp"
#include "gsep/graph_ops.hpp"
#include "gsep/lexbfs.hpp"

namespace gsep {
namespace {

Weight set_weight(const VertexSet& s, const VertexWeights& w) {
    Weight total = 0;
    for (int v = s.first(); v >= 0; v = s.next(v)) total += w[v];
    return total;
}

// Blocking-flow max flow with integer capacities.
struct Dinic {
    struct Arc {
        int to;
        Weight cap;
        int rev;
    };
    std::vector<std::vector<Arc>> adj;
    std::vector<int> level;
    std::vector<int> iter;

    explicit Dinic(int nodes) : adj(nodes) {}

    void add_arc(int u, int v, Weight cap) {
        adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
        adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
    }

    bool layer(int s, int t) {
        level.assign(adj.size(), -1);
        std::queue<int> queue;
        level[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (const Arc& a : adj[u]) {
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[u] + 1;
                    queue.push(a.to);
                }
            }
        }
        return level[t] >= 0;
    }

    Weight augment(int u, int t, Weight limit) {
        if (u == t) return limit;
        for (int& i = iter[u]; i < static_cast<int>(adj[u].size()); ++i) {
            Arc& a = adj[u][i];
            if (a.cap > 0 && level[a.to] == level[u] + 1) {
                Weight pushed = augment(a.to, t, std::min(limit, a.cap));
                if (pushed > 0) {
                    a.cap -= pushed;
                    adj[a.to][a.rev].cap += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    Weight max_flow(int s, int t) {
        Weight flow = 0;
        while (layer(s, t)) {
            iter.assign(adj.size(), 0);
            Weight pushed;
            while ((pushed = augment(s, t, std::numeric_limits<Weight>::max())) > 0) flow += pushed;
        }
        return flow;
    }
};

// Max flow of the derived network restricted to `sub`, i.e. the minimum
// weight of a vertex cover of g[sub]; `side` is any proper 2-coloring of g.
Weight min_cover_flow(const Graph& g, const VertexWeights& w, const VertexSet& sub,
                      const std::vector<int>& side) {
    std::vector<int> to_old = sub.to_vector();
    int k = static_cast<int>(to_old.size());
    if (k == 0) return 0;
    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) pos[to_old[i]] = i;
    Weight inf = set_weight(sub, w) + 1;
    Dinic net(k + 2);
    int s = k;
    int t = k + 1;
    for (int i = 0; i < k; ++i) {
        int v = to_old[i];
        if (side[v] == 0) {
            net.add_arc(s, i, w[v]);
            VertexSet nb = g.neighbors(v) & sub;
            for (int u = nb.first(); u >= 0; u = nb.next(u)) net.add_arc(i, pos[u], inf);
        } else {
            net.add_arc(i, t, w[v]);
        }
    }
    return net.max_flow(s, t);
}

}  // namespace

VertexSet lex_least_stable_certificate(const Graph& g, const VertexWeights& w, Weight target,
                                       const std::function<Weight(const VertexSet&)>& value_on) {
    int n = g.vertex_count();
    VertexSet chosen(n);
    VertexSet avail = VertexSet::full(n);
    Weight got = 0;
    for (int v = 0; v < n; ++v) {
        if (got == target) break;
        if (!avail.contains(v)) continue;
        VertexSet rest = avail - g.neighbors(v);
        rest.remove(v);
        if (got + w[v] + value_on(rest) == target) {
            chosen.add(v);
            got += w[v];
            avail.remove(v);
            avail -= g.neighbors(v);
        } else {
            avail.remove(v);
        }
    }
    if (got != target) throw std::logic_error("lex forcing failed to reach the optimum");
    return chosen;
}

SolveResult bipartite_mwis(const Graph& g, const VertexWeights& w) {
    validate_weights(g, w);
    std::optional<std::vector<int>> side = two_coloring(g);
    if (!side) throw std::invalid_argument("graph is not bipartite");
    int n = g.vertex_count();
    VertexSet full = VertexSet::full(n);
    auto value_on = [&](const VertexSet& sub) {
        return set_weight(sub, w) - min_cover_flow(g, w, sub, *side);
    };
    Weight target = value_on(full);
    SolveResult out;
    out.value = target;
    out.vertices = lex_least_stable_certificate(g, w, target, value_on);
    return out;
}

SolveResult bipartite_min_vertex_cover(const Graph& g, const VertexWeights& w) {
    SolveResult mwis = bipartite_mwis(g, w);
    int n = g.vertex_count();
    SolveResult out;
    out.value = set_weight(VertexSet::full(n), w) - mwis.value;
    out.vertices = VertexSet::full(n) - mwis.vertices;
    return out;
}

namespace {

// The sweep itself: exact value whenever every swept neighborhood splits
// into two cliques; the certificate is valid but not yet canonical.
SolveResult mwc_sweep_best(const Graph& g, const VertexWeights& w, int threads) {
    int n = g.vertex_count();
    SolveResult best;
    best.vertices = VertexSet(n);
    if (n == 0) return best;

    Ordering ord = lexbfs(g, 0);
    std::vector<VertexSet> prefixes;
    prefixes.reserve(n);
    VertexSet seen(n);
    for (int i = 0; i < n; ++i) {
        prefixes.push_back(seen);
        seen.add(ord.seq[i]);
    }

    // Best clique whose latest swept vertex is seq[i].
    auto solve_one = [&](int i) {
        int vi = ord.seq[i];
        SolveResult out;
        out.value = w[vi];
        out.vertices = VertexSet(n);
        out.vertices.add(vi);
        VertexSet nb = g.neighbors(vi) & prefixes[i];
        if (nb.empty()) return out;
        MappedGraph sub = induced_subgraph(g, nb);
        Graph comp = complement(sub.graph);
        VertexWeights sw(sub.to_old.size());
        for (std::size_t j = 0; j < sub.to_old.size(); ++j) sw[j] = w[sub.to_old[j]];
        if (two_coloring(comp)) {
            SolveResult inner = bipartite_mwis(comp, sw);
            const VertexSet& pick = inner.vertices;
            for (int v = pick.first(); v >= 0; v = pick.next(v)) out.vertices.add(sub.to_old[v]);
            out.value += inner.value;
        } else {
            // Only reachable without the strict check: fall back to a greedy
            // clique (heaviest vertex first, lowest index on ties).
            VertexSet cand = nb;
            while (!cand.empty()) {
                int pick = cand.first();
                for (int u = cand.next(pick); u >= 0; u = cand.next(u)) {
                    if (w[u] > w[pick]) pick = u;
                }
                out.vertices.add(pick);
                out.value += w[pick];
                cand &= g.neighbors(pick);
            }
        }
        return out;
    };

    std::vector<SolveResult> cands(n);
    if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (int i = 0; i < n; ++i) cands[i] = solve_one(i);
    } else {
        for (int i = 0; i < n; ++i) cands[i] = solve_one(i);
    }
    for (const SolveResult& cand : cands) {
        if (cand.value > best.value ||
            (cand.value == best.value && VertexSet::lex_less(cand.vertices, best.vertices))) {
            best = cand;
        }
    }
    return best;
}

}  // namespace

SolveResult mwc_g2(const Graph& g, const VertexWeights& w, const SolveOptions& opt) {
    validate_weights(g, w);
    int n = g.vertex_count();
    if (n == 0) {
        SolveResult empty;
        empty.vertices = VertexSet(0);
        return empty;
    }
    if (opt.strict) {
        Ordering ord = lexbfs(g, 0);
        EliminationCheck check = is_k_simplicial_elimination_ordering(g, ord.seq, 2);
        if (!check.ok) {
            throw strict_mode_error(
                "sweep order is not a 2-clique simplicial elimination ordering");
        }
    }
    SolveResult best = mwc_sweep_best(g, w, opt.threads);

    // Canonicalize: cliques of g are stable sets of the complement, so the
    // shared forcing loop pins the lexicographically least optimum, with the
    // sweep on induced subgraphs as its value oracle. When the sweep is not
    // exact (non-strict use outside the class) the rebuilt set can miss the
    // value; the raw sweep certificate is kept in that case.
    Graph co = complement(g);
    auto value_on = [&](const VertexSet& sub) -> Weight {
        MappedGraph m = induced_subgraph(g, sub);
        VertexWeights mw(m.to_old.size());
        for (std::size_t j = 0; j < m.to_old.size(); ++j) mw[j] = w[m.to_old[j]];
        return mwc_sweep_best(m.graph, mw, 1).value;
    };
    VertexSet cert = lex_least_stable_certificate(co, w, best.value, value_on);
    Weight cert_weight = 0;
    for (int v = cert.first(); v >= 0; v = cert.next(v)) cert_weight += w[v];
    if (cert_weight == best.value && is_clique(g, cert)) best.vertices = cert;
    return best;
}

SolveResult mwc_bruteforce(const Graph& g, const VertexWeights& w) {
    validate_weights(g, w);
    int n = g.vertex_count();
    if (n > kBruteForceGuard) {
        throw budget_exhausted_error("graph exceeds the exhaustive clique solver guard");
    }
    SolveResult best;
    best.vertices = VertexSet(n);
    VertexSet current(n);
    // Every clique is reached once as an ascending chain of extensions;
    // pruning must be strict so equal-weight lex-smaller sets survive.
    auto rec = [&](auto&& self, VertexSet cand, Weight got) -> void {
        if (got > best.value ||
            (got == best.value && VertexSet::lex_less(current, best.vertices))) {
            best.value = got;
            best.vertices = current;
        }
        Weight remaining = set_weight(cand, w);
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            if (got + remaining < best.value) return;
            cand.remove(v);
            current.add(v);
            self(self, cand & g.neighbors(v), got + w[v]);
            current.remove(v);
            remaining -= w[v];
        }
    };
    rec(rec, VertexSet::full(n), 0);
    return best;
}

SolveResult mwss_bruteforce(const Graph& g, const VertexWeights& w) {
    return mwc_bruteforce(complement(g), w);
}

SolveResult mwss_gk_smallscale(const Graph& g, const VertexWeights& w, int k) {
    if (k < 0) throw std::invalid_argument("negative class parameter");
    validate_weights(g, w);
    int n = g.vertex_count();
    if (n > kSmallScaleGuard) {
        throw budget_exhausted_error("graph exceeds the small-scale stable-set solver guard");
    }
    std::unordered_map<VertexSet, Weight, VertexSetHash> memo;
    std::function<Weight(const VertexSet&)> value_on = [&](const VertexSet& s) -> Weight {
        if (s.empty()) return 0;
        auto hit = memo.find(s);
        if (hit != memo.end()) return hit->second;
        Weight result = 0;
        std::vector<VertexSet> comps = components_within(g, s);
        if (comps.size() > 1) {
            for (const VertexSet& comp : comps) result += value_on(comp);
        } else {
            // Branch on a vertex of maximum degree within the component.
            int pivot = -1;
            int best_degree = -1;
            for (int v = s.first(); v >= 0; v = s.next(v)) {
                int d = g.neighbors(v).intersection_count(s);
                if (d > best_degree) {
                    best_degree = d;
                    pivot = v;
                }
            }
            VertexSet without = s;
            without.remove(pivot);
            VertexSet rest = s - g.neighbors(pivot);
            rest.remove(pivot);
            result = std::max(value_on(without), w[pivot] + value_on(rest));
        }
        memo.emplace(s, result);
        return result;
    };
    Weight target = value_on(VertexSet::full(n));
    SolveResult out;
    out.value = target;
    out.vertices = lex_least_stable_certificate(g, w, target, value_on);
    return out;
}

int alpha(const Graph& g) {
    VertexWeights unit(g.vertex_count(), 1);
    return static_cast<int>(mwss_gk_smallscale(g, unit, 0).value);
}

}  // namespace gsep
