#include "gsep/graph_ops.hpp"

#include <stdexcept>
#include <string>

namespace gsep {

MappedGraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    int n = g.vertex_count();
    if (keep.universe() != n) throw std::invalid_argument("keep-set universe mismatch");
    std::vector<int> to_new(n, -1);
    std::vector<int> to_old;
    to_old.reserve(keep.count());
    for (int v = keep.first(); v >= 0; v = keep.next(v)) {
        to_new[v] = static_cast<int>(to_old.size());
        to_old.push_back(v);
    }
    int m = static_cast<int>(to_old.size());
    std::vector<VertexSet> adj(m, VertexSet(m));
    for (int i = 0; i < m; ++i) {
        VertexSet nb = g.neighbors(to_old[i]) & keep;
        for (int v = nb.first(); v >= 0; v = nb.next(v)) adj[i].add(to_new[v]);
    }
    return {Graph::from_adjacency(std::move(adj)), std::move(to_new), std::move(to_old)};
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> adj(n, VertexSet(n));
    VertexSet all = VertexSet::full(n);
    for (int v = 0; v < n; ++v) {
        adj[v] = all - g.neighbors(v);
        adj[v].remove(v);
    }
    return Graph::from_adjacency(std::move(adj));
}

MappedGraph contract_edge(const Graph& g, int u, int v) {
    int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n || u == v || !g.has_edge(u, v)) {
        throw std::invalid_argument("contract_edge requires an existing edge");
    }
    int keep = std::min(u, v), drop = std::max(u, v);
    std::vector<int> to_new(n, -1);
    std::vector<int> to_old;
    to_old.reserve(n - 1);
    for (int x = 0; x < n; ++x) {
        if (x == drop) continue;
        to_new[x] = static_cast<int>(to_old.size());
        to_old.push_back(x);
    }
    to_new[drop] = to_new[keep];
    std::vector<VertexSet> adj(n - 1, VertexSet(n - 1));
    for (auto [a, b] : g.edges()) {
        int x = to_new[a], y = to_new[b];
        if (x == y) continue;
        adj[x].add(y);
        adj[y].add(x);
    }
    return {Graph::from_adjacency(std::move(adj)), std::move(to_new), std::move(to_old)};
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (auto [a, b] : g.edges()) {
        adj[perm[a]].add(perm[b]);
        adj[perm[b]].add(perm[a]);
    }
    return Graph::from_adjacency(std::move(adj));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int na = a.vertex_count(), nb = b.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + na, v + na);
    return Graph::from_edges(na + nb, edges);
}

Graph complete_join(const Graph& a, const Graph& b) {
    int na = a.vertex_count(), nb = b.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + na, v + na);
    for (int u = 0; u < na; ++u) {
        for (int v = 0; v < nb; ++v) edges.emplace_back(u, v + na);
    }
    return Graph::from_edges(na + nb, edges);
}

GlueResult glue_along_clique(const Graph& g1, const Graph& g2,
                             const std::vector<std::pair<int, int>>& pairing) {
    int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    VertexSet c1(n1), c2(n2);
    std::vector<int> map2(n2, -1);
    for (auto [a, b] : pairing) {
        if (a < 0 || a >= n1 || b < 0 || b >= n2) throw std::invalid_argument("glue pairing out of range");
        if (c1.contains(a) || c2.contains(b)) throw std::invalid_argument("glue pairing repeats a vertex");
        c1.add(a);
        c2.add(b);
        map2[b] = a;
    }
    if (!is_clique(g1, c1) || !is_clique(g2, c2)) {
        throw std::invalid_argument("glue sets must be cliques on both sides");
    }
    int next = n1;
    for (int v = 0; v < n2; ++v) {
        if (map2[v] < 0) map2[v] = next++;
    }
    std::vector<std::pair<int, int>> edges = g1.edges();
    for (auto [u, v] : g2.edges()) {
        int x = map2[u], y = map2[v];
        if (x < n1 && y < n1 && g1.has_edge(x, y)) continue;
        edges.emplace_back(x, y);
    }
    return {Graph::from_edges(next, edges), std::move(map2)};
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& sub) {
    std::vector<VertexSet> out;
    VertexSet unseen = sub;
    std::vector<int> stack;
    for (int s = unseen.first(); s >= 0; s = unseen.first()) {
        VertexSet comp(g.vertex_count());
        comp.add(s);
        unseen.remove(s);
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            VertexSet fresh = g.neighbors(v) & unseen;
            for (int u = fresh.first(); u >= 0; u = fresh.next(u)) {
                comp.add(u);
                unseen.remove(u);
                stack.push_back(u);
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    return components_within(g, VertexSet::full(g.vertex_count()));
}

VertexSet component_of(const Graph& g, const VertexSet& sub, int v) {
    VertexSet comp(g.vertex_count());
    comp.add(v);
    VertexSet unseen = sub;
    unseen.remove(v);
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        VertexSet fresh = g.neighbors(x) & unseen;
        for (int u = fresh.first(); u >= 0; u = fresh.next(u)) {
            comp.add(u);
            unseen.remove(u);
            stack.push_back(u);
        }
    }
    return comp;
}

std::vector<VertexSet> anticomponents(const Graph& g) { return components(complement(g)); }

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return component_of(g, VertexSet::full(g.vertex_count()), 0).count() == g.vertex_count();
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        VertexSet rest = s;
        rest.remove(v);
        if (!rest.is_subset_of(g.neighbors(v))) return false;
    }
    return true;
}

bool is_stable_set(const Graph& g, const VertexSet& s) {
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        if (g.neighbors(v).intersects(s)) return false;
    }
    return true;
}

bool is_diamond_free(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (const VertexSet& comp : components_within(g, g.neighbors(v))) {
            if (!is_clique(g, comp)) return false;
        }
    }
    return true;
}

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s) {
    VertexSet out(g.vertex_count());
    for (int v = s.first(); v >= 0; v = s.next(v)) out |= g.neighbors(v);
    out -= s;
    return out;
}

}  // namespace gsep
