#include "gsep/decomposition.hpp"

#include <stdexcept>

#include "gsep/graph_ops.hpp"

namespace gsep {

std::vector<int> DecompositionTree::atom_indices() const {
    std::vector<int> out;
    if (root < 0) return out;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int idx = stack.back();
        stack.pop_back();
        const Node& node = nodes[idx];
        if (node.is_atom) {
            out.push_back(idx);
        } else {
            stack.push_back(node.right);  // left before right, depth first
            stack.push_back(node.left);
        }
    }
    return out;
}

std::vector<VertexSet> DecompositionTree::atoms() const {
    std::vector<VertexSet> out;
    for (int idx : atom_indices()) out.push_back(nodes[idx].vertices);
    return out;
}

MinimalOrdering mcs_m(const Graph& g, const VertexSet& sub) {
    int n = g.vertex_count();
    MinimalOrdering out;
    out.fill_adjacency.assign(n, VertexSet(n));
    for (int v = sub.first(); v >= 0; v = sub.next(v)) {
        out.fill_adjacency[v] = g.neighbors(v) & sub;
    }
    int count = sub.count();
    std::vector<int> weight(n, 0);
    std::vector<int> key(n, 0);
    VertexSet unvisited = sub;
    std::vector<int> visit_order;
    visit_order.reserve(count);
    std::vector<std::vector<int>> buckets(count + 2);
    const int kInf = count + 1;

    for (int step = 0; step < count; ++step) {
        int x = -1;
        for (int v = unvisited.first(); v >= 0; v = unvisited.next(v)) {
            if (x < 0 || weight[v] > weight[x]) x = v;
        }
        unvisited.remove(x);
        visit_order.push_back(x);

        // Minimax reachability from x through unvisited vertices: key[y] is
        // the smallest over x-y paths of the largest intermediate weight
        // (-1 for a direct edge). Bucket Dijkstra with keys shifted by one.
        for (int y = unvisited.first(); y >= 0; y = unvisited.next(y)) key[y] = kInf;
        for (auto& b : buckets) b.clear();
        VertexSet direct = g.neighbors(x) & unvisited;
        for (int y = direct.first(); y >= 0; y = direct.next(y)) {
            key[y] = -1;
            buckets[0].push_back(y);
        }
        for (int kb = 0; kb + 1 < kInf + 1; ++kb) {
            for (std::size_t qi = 0; qi < buckets[kb].size(); ++qi) {
                int y = buckets[kb][qi];
                if (key[y] != kb - 1) continue;
                int through = std::max(kb - 1, weight[y]);
                VertexSet nb = g.neighbors(y) & unvisited;
                for (int z = nb.first(); z >= 0; z = nb.next(z)) {
                    if (through < key[z]) {
                        key[z] = through;
                        buckets[through + 1].push_back(z);
                    }
                }
            }
        }
        // A vertex reachable below its own weight gains weight and a fill
        // edge to x.
        for (int y = unvisited.first(); y >= 0; y = unvisited.next(y)) {
            if (key[y] < weight[y]) {
                weight[y] += 1;
                out.fill_adjacency[x].add(y);
                out.fill_adjacency[y].add(x);
            }
        }
    }
    out.elimination.assign(visit_order.rbegin(), visit_order.rend());
    return out;
}

namespace {

// Minimalize a separating set of g[alive] between a and b: keep vertices
// seeing a's side, then of those the ones seeing the refreshed b side.
VertexSet shrink_separator(const Graph& g, const VertexSet& alive, const VertexSet& sep, int a,
                           int b) {
    VertexSet ca = component_of(g, alive - sep, a);
    VertexSet s1(g.vertex_count());
    for (int x = sep.first(); x >= 0; x = sep.next(x)) {
        if (g.neighbors(x).intersects(ca)) s1.add(x);
    }
    VertexSet cb = component_of(g, alive - s1, b);
    VertexSet s2(g.vertex_count());
    for (int x = s1.first(); x >= 0; x = s1.next(x)) {
        if (g.neighbors(x).intersects(cb)) s2.add(x);
    }
    return s2;
}

// One pass over a minimal elimination ordering of g[span] (which must be
// connected): each vertex whose not-yet-eliminated fill neighborhood is a
// clique in g and separates the alive part cuts off its component. Returns
// the (cutset, cut-off side) pairs in the order applied.
std::vector<std::pair<VertexSet, VertexSet>> cutset_scan(const Graph& g, const VertexSet& span,
                                                         bool first_only) {
    std::vector<std::pair<VertexSet, VertexSet>> splits;
    MinimalOrdering mo = mcs_m(g, span);
    VertexSet alive = span;
    VertexSet eliminated(g.vertex_count());
    for (int x : mo.elimination) {
        eliminated.add(x);
        if (!alive.contains(x)) continue;
        VertexSet madj = (mo.fill_adjacency[x] - eliminated) & alive;
        if (!is_clique(g, madj)) continue;
        VertexSet rest = alive - madj;
        VertexSet comp_x = component_of(g, rest, x);
        if ((comp_x | madj) == alive) continue;  // does not separate
        int b = (rest - comp_x).first();
        VertexSet cut = shrink_separator(g, alive, madj, x, b);
        VertexSet side = component_of(g, alive - cut, x);
        splits.emplace_back(cut, side);
        if (first_only) break;
        alive -= side;
    }
    return splits;
}

struct Builder {
    const Graph& g;
    DecompositionTree tree;

    int add_atom(const VertexSet& span) {
        DecompositionTree::Node node;
        node.is_atom = true;
        node.vertices = span;
        node.cutset = VertexSet(g.vertex_count());
        node.side_a = VertexSet(g.vertex_count());
        for (int u = span.first(); u >= 0; u = span.next(u)) {
            VertexSet nb = g.neighbors(u) & span;
            for (int v = nb.next(u); v >= 0; v = nb.next(v)) node.atom_edges.emplace_back(u, v);
        }
        tree.nodes.push_back(std::move(node));
        return static_cast<int>(tree.nodes.size()) - 1;
    }

    int add_split(const VertexSet& span, const VertexSet& cut, const VertexSet& side_a, int left,
                  int right) {
        DecompositionTree::Node node;
        node.is_atom = false;
        node.vertices = span;
        node.cutset = cut;
        node.side_a = side_a;
        node.left = left;
        node.right = right;
        tree.nodes.push_back(std::move(node));
        return static_cast<int>(tree.nodes.size()) - 1;
    }

    int build(const VertexSet& span) {
        std::vector<VertexSet> comps = components_within(g, span);
        if (comps.size() >= 2) {
            // The empty set is the (unique minimal) clique cutset here.
            VertexSet rest = span - comps[0];
            int left = build(comps[0]);
            int right = build(rest);
            return add_split(span, VertexSet(g.vertex_count()), comps[0], left, right);
        }
        std::vector<std::pair<VertexSet, VertexSet>> splits = cutset_scan(g, span, false);
        if (splits.empty()) return add_atom(span);
        VertexSet core = span;
        for (const auto& [cut, side] : splits) core -= side;
        int right = build(core);  // fresh scan; emitted leaves admit no cutset
        for (auto it = splits.rbegin(); it != splits.rend(); ++it) {
            const auto& [cut, side] = *it;
            int left = build(side | cut);
            VertexSet span_here = tree.nodes[right].vertices | side | cut;
            right = add_split(span_here, cut, side, left, right);
        }
        return right;
    }
};

}  // namespace

std::optional<CutPartition> find_clique_cutset(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return std::nullopt;
    std::vector<VertexSet> comps = components(g);
    if (comps.size() >= 2) {
        CutPartition part;
        part.c = VertexSet(n);
        part.a = comps[0];
        part.b = VertexSet::full(n) - comps[0];
        return part;
    }
    std::vector<std::pair<VertexSet, VertexSet>> splits = cutset_scan(g, VertexSet::full(n), true);
    if (splits.empty()) return std::nullopt;
    CutPartition part;
    part.c = splits.front().first;
    part.a = splits.front().second;
    part.b = VertexSet::full(n) - part.c - part.a;
    return part;
}

DecompositionTree decompose(const Graph& g) {
    Builder builder{g, {}};
    builder.tree.root = builder.build(VertexSet::full(g.vertex_count()));
    return builder.tree;
}

namespace {

// Local graph plus map back to original labels.
struct Piece {
    Graph graph;
    std::vector<int> to_old;
};

Piece reglue_rec(const DecompositionTree& tree, int idx) {
    const DecompositionTree::Node& node = tree.nodes[idx];
    if (node.is_atom) {
        std::vector<int> to_old = node.vertices.to_vector();
        std::vector<int> to_new(node.vertices.universe(), -1);
        for (std::size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        edges.reserve(node.atom_edges.size());
        for (auto [u, v] : node.atom_edges) edges.emplace_back(to_new[u], to_new[v]);
        return {Graph::from_edges(static_cast<int>(to_old.size()), edges), std::move(to_old)};
    }
    Piece left = reglue_rec(tree, node.left);
    Piece right = reglue_rec(tree, node.right);
    std::vector<int> left_pos(node.vertices.universe(), -1);
    for (std::size_t i = 0; i < left.to_old.size(); ++i) left_pos[left.to_old[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> pairing;
    for (std::size_t j = 0; j < right.to_old.size(); ++j) {
        if (node.cutset.contains(right.to_old[j])) {
            pairing.emplace_back(left_pos[right.to_old[j]], static_cast<int>(j));
        }
    }
    GlueResult glued = glue_along_clique(left.graph, right.graph, pairing);
    std::vector<int> to_old(glued.graph.vertex_count(), -1);
    for (std::size_t i = 0; i < left.to_old.size(); ++i) to_old[i] = left.to_old[i];
    for (std::size_t j = 0; j < right.to_old.size(); ++j) to_old[glued.map2[j]] = right.to_old[j];
    return {std::move(glued.graph), std::move(to_old)};
}

}  // namespace

Graph reglue(const DecompositionTree& tree) {
    if (tree.root < 0 || tree.nodes.empty()) throw std::invalid_argument("empty decomposition tree");
    const DecompositionTree::Node& root = tree.nodes[tree.root];
    int n = root.vertices.universe();
    Piece piece = reglue_rec(tree, tree.root);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : piece.graph.edges()) {
        edges.emplace_back(piece.to_old[u], piece.to_old[v]);
    }
    return Graph::from_edges(n, edges);
}

}  // namespace gsep
