#include "gsep/induced_minor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gsep/errors.hpp"
#include "gsep/generators.hpp"
#include "gsep/graph_ops.hpp"

namespace gsep {

bool verify_model(const Graph& g, const Graph& h, const InducedMinorModel& model) {
    int n = g.vertex_count(), hn = h.vertex_count();
    if (static_cast<int>(model.branch_sets.size()) != hn) return false;
    VertexSet used(n);
    for (const VertexSet& bs : model.branch_sets) {
        if (bs.universe() != n || bs.empty() || bs.intersects(used)) return false;
        used |= bs;
        if (component_of(g, bs, bs.first()) != bs) return false;
    }
    for (int i = 0; i < hn; ++i) {
        VertexSet reach = neighborhood_of_set(g, model.branch_sets[i]);
        for (int j = i + 1; j < hn; ++j) {
            bool touching = reach.intersects(model.branch_sets[j]);
            if (touching != h.has_edge(i, j)) return false;
        }
    }
    return true;
}

namespace {

struct MinorSearch {
    const Graph& g;
    const Graph& h;
    std::int64_t budget;
    std::int64_t nodes = 0;
    int n, hn;
    std::vector<int> assign;            // -1 pending, hn deleted, else set index
    std::vector<VertexSet> sets;
    VertexSet unassigned;

    MinorSearch(const Graph& g_, const Graph& h_, std::int64_t budget_)
        : g(g_), h(h_), budget(budget_), n(g_.vertex_count()), hn(h_.vertex_count()),
          assign(n, -1), sets(hn, VertexSet(n)), unassigned(VertexSet::full(n)) {}

    bool leaf_ok() const {
        for (int i = 0; i < hn; ++i) {
            const VertexSet& bs = sets[i];
            if (bs.empty() || component_of(g, bs, bs.first()) != bs) return false;
            VertexSet reach = neighborhood_of_set(g, bs);
            for (int j = i + 1; j < hn; ++j) {
                if (h.has_edge(i, j) && !reach.intersects(sets[j])) return false;
            }
        }
        return true;
    }

    // Every nonempty set must stay inside one component of g restricted to
    // the set plus the still-unassigned vertices.
    bool connectable() const {
        for (int i = 0; i < hn; ++i) {
            if (sets[i].empty()) continue;
            VertexSet room = sets[i] | unassigned;
            if (!sets[i].is_subset_of(component_of(g, room, sets[i].first()))) return false;
        }
        return true;
    }

    bool feasible(int v, int target) const {
        const VertexSet& nb = g.neighbors(v);
        for (int j = 0; j < hn; ++j) {
            if (j == target || sets[j].empty()) continue;
            if (nb.intersects(sets[j]) && !h.has_edge(target, j)) return false;
        }
        return true;
    }

    bool run(int v) {
        if (++nodes > budget) throw budget_exhausted_error("induced minor search exceeded budget");
        int empties = 0;
        for (const VertexSet& bs : sets) {
            if (bs.empty()) ++empties;
        }
        if (empties > n - v) return false;
        if (v == n) return leaf_ok();
        unassigned.remove(v);
        for (int target = 0; target < hn; ++target) {
            if (!feasible(v, target)) continue;
            assign[v] = target;
            sets[target].add(v);
            if (connectable() && run(v + 1)) return true;
            sets[target].remove(v);
        }
        assign[v] = hn;  // deleted
        if (connectable() && run(v + 1)) return true;
        assign[v] = -1;
        unassigned.add(v);
        return false;
    }
};

}  // namespace

std::optional<InducedMinorModel> find_induced_minor(const Graph& g, const Graph& h,
                                                    const MinorSearchOptions& opt) {
    MinorSearch search(g, h, opt.budget);
    if (!search.run(0)) return std::nullopt;
    return InducedMinorModel{std::move(search.sets)};
}

ObstructionScan g2_forbidden_minor_scan(const Graph& g, int k_max, const MinorSearchOptions& opt) {
    for (int k = 1; k <= k_max && 2 * k + 3 <= g.vertex_count(); ++k) {
        if (auto model = find_induced_minor(g, forbidden_g2_minor(k), opt)) {
            return {true, k, std::move(model)};
        }
    }
    return {false, 0, std::nullopt};
}

bool complement_subgraph_check(const Graph& g, const Graph& h) {
    Graph cg = complement(g);
    Graph ch = complement(h);
    int n = cg.vertex_count(), hn = ch.vertex_count();
    if (hn > n) return false;
    // Map complement-of-h vertices (highest degree first) into complement-of-g
    // preserving edges; non-edges are unconstrained.
    std::vector<int> order(hn);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return ch.degree(a) > ch.degree(b); });
    std::vector<int> image(hn, -1);
    VertexSet taken(n);
    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == hn) return true;
        int hv = order[idx];
        for (int gv = 0; gv < n; ++gv) {
            if (taken.contains(gv) || cg.degree(gv) < ch.degree(hv)) continue;
            bool ok = true;
            const VertexSet& nb = ch.neighbors(hv);
            for (int hu = nb.first(); hu >= 0; hu = nb.next(hu)) {
                if (image[hu] >= 0 && !cg.has_edge(gv, image[hu])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[hv] = gv;
            taken.add(gv);
            if (self(self, idx + 1)) return true;
            image[hv] = -1;
            taken.remove(gv);
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace gsep
