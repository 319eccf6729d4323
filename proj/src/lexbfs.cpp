#include "gsep/lexbfs.hpp"

#include <list>
#include <stdexcept>

namespace gsep {

Ordering lexbfs(const Graph& g, int start) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("lexbfs needs a nonempty graph");
    if (start < 0 || start >= n) throw std::invalid_argument("start vertex out of range");

    // Ordered list of classes; the head holds the lexicographically largest
    // labels. Classes are vertex sets; splitting preserves list order.
    std::list<VertexSet> classes;
    VertexSet rest = VertexSet::full(n);
    rest.remove(start);
    classes.push_back(VertexSet(n, {start}));
    if (!rest.empty()) classes.push_back(rest);

    Ordering out;
    out.start = start;
    out.seq.reserve(n);
    while (!classes.empty()) {
        int v = classes.front().first();
        classes.front().remove(v);
        if (classes.front().empty()) classes.pop_front();
        out.seq.push_back(v);
        const VertexSet& nb = g.neighbors(v);
        for (auto it = classes.begin(); it != classes.end(); ++it) {
            VertexSet hit = *it & nb;
            if (hit.empty() || hit == *it) continue;
            *it -= hit;
            classes.insert(it, std::move(hit));
        }
    }
    return out;
}

EliminationCheck is_k_simplicial_elimination_ordering(const Graph& g, const std::vector<int>& seq,
                                                      int k) {
    int n = g.vertex_count();
    if (static_cast<int>(seq.size()) != n) throw std::invalid_argument("ordering length mismatch");
    VertexSet prefix(n);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        int v = seq[i];
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("ordering is not a permutation");
        seen[v] = true;
        VertexSet nb = g.neighbors(v) & prefix;
        if (!k_simplicial_cover(g, nb, k)) return {false, i};
        prefix.add(v);
    }
    return {true, -1};
}

bool is_chordal(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return is_k_simplicial_elimination_ordering(g, lexbfs(g, 0).seq, 1).ok;
}

std::optional<std::pair<int, CliqueCover>> find_k_simplicial_vertex(const Graph& g, int k) {
    if (g.vertex_count() == 0) return std::nullopt;
    int last = lexbfs(g, 0).seq.back();
    if (auto cover = k_simplicial_cover(g, g.neighbors(last), k)) {
        return std::make_pair(last, std::move(*cover));
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == last) continue;
        if (auto cover = k_simplicial_cover(g, g.neighbors(v), k)) {
            return std::make_pair(v, std::move(*cover));
        }
    }
    return std::nullopt;
}

}  // namespace gsep
