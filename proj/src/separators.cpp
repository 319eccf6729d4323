#include "gsep/separators.hpp"

#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gsep/errors.hpp"
#include "gsep/graph_ops.hpp"

namespace gsep {

namespace {

void check_pair(const Graph& g, const VertexSet& s, int a, int b) {
    int n = g.vertex_count();
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) throw std::invalid_argument("bad vertex pair");
    if (g.has_edge(a, b)) throw std::invalid_argument("pair is adjacent, no separator exists");
    if (s.contains(a) || s.contains(b)) throw std::invalid_argument("separator contains an endpoint");
}

// Full components of g minus s: components whose neighborhood is all of s.
std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> out;
    for (const VertexSet& comp : components_within(g, VertexSet::full(g.vertex_count()) - s)) {
        if (neighborhood_of_set(g, comp) == s) out.push_back(comp);
    }
    return out;
}

SeparatorRecord make_record(const Graph& g, const VertexSet& s) {
    SeparatorRecord rec;
    rec.separator = s;
    std::vector<VertexSet> fulls = full_components(g, s);
    rec.side_a = fulls.at(0);
    rec.side_b = fulls.at(1);
    rec.witness_a = rec.side_a.first();
    rec.witness_b = rec.side_b.first();
    return rec;
}

// Candidate separators derived from one emitted separator: N(C) for each
// component C of g minus (s union N[x]), x in s.
void successors(const Graph& g, const VertexSet& s, std::vector<VertexSet>& out) {
    VertexSet all = VertexSet::full(g.vertex_count());
    for (int x = s.first(); x >= 0; x = s.next(x)) {
        VertexSet removed = s | g.closed_neighborhood(x);
        for (const VertexSet& comp : components_within(g, all - removed)) {
            out.push_back(neighborhood_of_set(g, comp));
        }
    }
}

// Seed separators: N(C) for components C of g minus N[v]; always minimal.
std::vector<VertexSet> close_separators(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet all = VertexSet::full(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (const VertexSet& comp : components_within(g, all - g.closed_neighborhood(v))) {
            out.push_back(neighborhood_of_set(g, comp));
        }
    }
    return out;
}

}  // namespace

bool is_separator(const Graph& g, const VertexSet& s, int a, int b) {
    check_pair(g, s, a, b);
    return !component_of(g, VertexSet::full(g.vertex_count()) - s, a).contains(b);
}

bool is_minimal_ab_separator(const Graph& g, const VertexSet& s, int a, int b) {
    check_pair(g, s, a, b);
    VertexSet rest = VertexSet::full(g.vertex_count()) - s;
    VertexSet ca = component_of(g, rest, a);
    if (ca.contains(b)) return false;
    VertexSet cb = component_of(g, rest, b);
    for (int x = s.first(); x >= 0; x = s.next(x)) {
        if (!g.neighbors(x).intersects(ca) || !g.neighbors(x).intersects(cb)) return false;
    }
    return true;
}

VertexSet minimalize_separator(const Graph& g, const VertexSet& s, int a, int b) {
    check_pair(g, s, a, b);
    VertexSet rest = VertexSet::full(g.vertex_count()) - s;
    VertexSet ca = component_of(g, rest, a);
    if (ca.contains(b)) throw std::invalid_argument("set does not separate the pair");
    // Keep vertices seeing the a-side, then of those the ones seeing the
    // refreshed b-side; both passes preserve separation.
    VertexSet s1(g.vertex_count());
    for (int x = s.first(); x >= 0; x = s.next(x)) {
        if (g.neighbors(x).intersects(ca)) s1.add(x);
    }
    VertexSet cb = component_of(g, VertexSet::full(g.vertex_count()) - s1, b);
    VertexSet s2(g.vertex_count());
    for (int x = s1.first(); x >= 0; x = s1.next(x)) {
        if (g.neighbors(x).intersects(cb)) s2.add(x);
    }
    return s2;
}

bool is_minimal_separator(const Graph& g, const VertexSet& s) {
    return full_components(g, s).size() >= 2;
}

void for_each_minimal_separator(const Graph& g, const EnumerationOptions& opt,
                                const std::function<bool(const SeparatorRecord&)>& visit) {
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::vector<VertexSet> frontier;
    std::int64_t emitted = 0;

    auto emit = [&](const VertexSet& s) -> bool {  // returns false to stop
        if (!seen.insert(s).second) return true;
        if (++emitted > opt.cap) {
            throw budget_exhausted_error("minimal separator enumeration exceeded cap");
        }
        frontier.push_back(s);
        return visit(make_record(g, s));
    };

    for (const VertexSet& s : close_separators(g)) {
        if (!emit(s)) return;
    }

    // Saturation proceeds level by level; each level's candidates are merged
    // in deterministic (item, successor) order, so the serial and OpenMP
    // paths emit identical sequences.
    while (!frontier.empty()) {
        std::vector<VertexSet> level = std::move(frontier);
        frontier.clear();
        std::vector<std::vector<VertexSet>> raw(level.size());
        if (opt.threads > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(opt.threads)
#endif
            for (std::size_t i = 0; i < level.size(); ++i) {
                successors(g, level[i], raw[i]);
            }
        } else {
            for (std::size_t i = 0; i < level.size(); ++i) {
                successors(g, level[i], raw[i]);
            }
        }
        for (const std::vector<VertexSet>& cands : raw) {
            for (const VertexSet& s : cands) {
                if (seen.contains(s) || !is_minimal_separator(g, s)) continue;
                if (!emit(s)) return;
            }
        }
    }
}

std::vector<SeparatorRecord> all_minimal_separators(const Graph& g, const EnumerationOptions& opt) {
    std::vector<SeparatorRecord> out;
    for_each_minimal_separator(g, opt, [&](const SeparatorRecord& rec) {
        out.push_back(rec);
        return true;
    });
    return out;
}

std::vector<SeparatorRecord> minimal_ab_separators(const Graph& g, int a, int b,
                                                   const EnumerationOptions& opt) {
    check_pair(g, VertexSet(g.vertex_count()), a, b);
    std::vector<SeparatorRecord> out;
    for_each_minimal_separator(g, opt, [&](const SeparatorRecord& rec) {
        if (!rec.separator.contains(a) && !rec.separator.contains(b) &&
            is_minimal_ab_separator(g, rec.separator, a, b)) {
            SeparatorRecord r = rec;
            VertexSet rest = VertexSet::full(g.vertex_count()) - rec.separator;
            r.witness_a = a;
            r.witness_b = b;
            r.side_a = component_of(g, rest, a);
            r.side_b = component_of(g, rest, b);
            out.push_back(std::move(r));
        }
        return true;
    });
    return out;
}

std::vector<VertexSet> minimal_cutsets(const Graph& g, const EnumerationOptions& opt) {
    std::vector<VertexSet> out;
    for_each_minimal_separator(g, opt, [&](const SeparatorRecord& rec) {
        std::vector<VertexSet> comps =
            components_within(g, VertexSet::full(g.vertex_count()) - rec.separator);
        bool all_full = true;
        for (const VertexSet& comp : comps) {
            if (neighborhood_of_set(g, comp) != rec.separator) {
                all_full = false;
                break;
            }
        }
        if (all_full && comps.size() >= 2) out.push_back(rec.separator);
        return true;
    });
    return out;
}

CutPartition cut_partition_for(const Graph& g, const VertexSet& c) {
    VertexSet rest = VertexSet::full(g.vertex_count()) - c;
    std::vector<VertexSet> comps = components_within(g, rest);
    if (comps.size() < 2) throw std::invalid_argument("set is not a cutset");
    CutPartition part;
    part.c = c;
    part.a = comps[0];
    part.b = rest - comps[0];
    return part;
}

}  // namespace gsep
