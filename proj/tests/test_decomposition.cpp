#include <cstdint>
#include <vector>

#include "doctest.h"
#include "gsep/decomposition.hpp"
#include "gsep/generators.hpp"
#include "gsep/graph_ops.hpp"
#include "gsep/lexbfs.hpp"
#include "gsep/separators.hpp"
#include "oracles.hpp"

using namespace gsep;

namespace {

// Brute clique-cutset detection: some clique whose removal disconnects the
// rest (or the graph is already disconnected).
bool has_clique_cutset_oracle(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    if (!is_connected(g)) return true;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        VertexSet c(n);
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1) c.add(v);
        }
        if (static_cast<int>(c.count()) >= n - 1) continue;  // must leave >= 2 vertices
        if (!is_clique(g, c)) continue;
        if (components_within(g, g.vertices() - c).size() >= 2) return true;
    }
    return false;
}

void check_tree_invariants(const Graph& g, const DecompositionTree& tree) {
    REQUIRE(tree.root >= 0);
    REQUIRE(tree.root < static_cast<int>(tree.nodes.size()));
    CHECK(tree.nodes[tree.root].vertices == g.vertices());
    for (const DecompositionTree::Node& node : tree.nodes) {
        if (node.is_atom) {
            MappedGraph sub = induced_subgraph(g, node.vertices);
            CHECK_FALSE(has_clique_cutset_oracle(sub.graph));
            continue;
        }
        REQUIRE(node.left >= 0);
        REQUIRE(node.right >= 0);
        const DecompositionTree::Node& l = tree.nodes[node.left];
        const DecompositionTree::Node& r = tree.nodes[node.right];
        CHECK(is_clique(g, node.cutset));
        CHECK(node.cutset.is_subset_of(node.vertices));
        // Children partition the span, overlapping exactly on the cutset.
        CHECK((l.vertices | r.vertices) == node.vertices);
        CHECK((l.vertices & r.vertices) == node.cutset);
        CHECK(l.vertices == (node.side_a | node.cutset));
        // No edges run between the two sides outside the cutset.
        VertexSet side_b = node.vertices - l.vertices;
        for (int v = node.side_a.first(); v >= 0; v = node.side_a.next(v)) {
            CHECK_FALSE(g.neighbors(v).intersects(side_b));
        }
        if (!node.cutset.empty()) {
            // The cutset is a minimal separator of the span.
            MappedGraph sub = induced_subgraph(g, node.vertices);
            VertexSet cut_local(sub.graph.vertex_count());
            for (int v = node.cutset.first(); v >= 0; v = node.cutset.next(v)) {
                cut_local.add(sub.to_new[v]);
            }
            CHECK(is_minimal_separator(sub.graph, cut_local));
        }
    }
}

}  // namespace

TEST_CASE("clique cutset finder agrees with the oracle exhaustively") {
    for (int n = 1; n <= 5; ++n) {
        testsupport::for_each_labeled_graph(n, [&](const Graph& g) {
            std::optional<CutPartition> cut = find_clique_cutset(g);
            CHECK(cut.has_value() == has_clique_cutset_oracle(g));
            if (cut) {
                CHECK(is_clique(g, cut->c));
                CHECK_FALSE(cut->a.empty());
                CHECK_FALSE(cut->b.empty());
                for (int v = cut->a.first(); v >= 0; v = cut->a.next(v)) {
                    CHECK_FALSE(g.neighbors(v).intersects(cut->b));
                }
            }
        });
    }
}

TEST_CASE("clique cutset finder on random graphs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = random_graph(9, 0.2 + 0.05 * static_cast<double>(seed % 7), seed);
        CAPTURE(seed);
        CHECK(find_clique_cutset(g).has_value() == has_clique_cutset_oracle(g));
    }
}

TEST_CASE("atoms admit no clique cutset and the tree is consistent") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Graph g = random_graph(10, 0.25, 60 + seed);
        check_tree_invariants(g, decompose(g));
    }
    for (int n = 1; n <= 5; ++n) {
        testsupport::for_each_labeled_graph(n, [&](const Graph& g) {
            check_tree_invariants(g, decompose(g));
        });
    }
}

TEST_CASE("known decompositions") {
    // Atoms of a chordal graph are cliques.
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = random_chordal(10, seed);
        for (const VertexSet& span : decompose(g).atoms()) {
            CHECK(is_clique(g, span));
        }
    }
    // A clique decomposes into itself.
    DecompositionTree k5 = decompose(complete_graph(5));
    CHECK(k5.nodes.size() == 1);
    CHECK(k5.nodes[0].is_atom);
    // A cycle of length >= 4 has no clique cutset at all.
    DecompositionTree c7 = decompose(cycle_graph(7));
    CHECK(c7.nodes.size() == 1);
    // Two triangles glued on an edge split once.
    Graph glued = glue_along_clique(complete_graph(3), complete_graph(3), {{0, 0}, {1, 1}}).graph;
    DecompositionTree t = decompose(glued);
    std::vector<VertexSet> atoms = t.atoms();
    REQUIRE(atoms.size() == 2);
    CHECK(atoms[0].count() == 3);
    CHECK(atoms[1].count() == 3);
}

TEST_CASE("reglue inverts decompose") {
    for (int n = 0; n <= 5; ++n) {
        testsupport::for_each_labeled_graph(n, [&](const Graph& g) {
            CHECK(reglue(decompose(g)) == g);
        });
    }
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = random_graph(11, 0.15 + 0.05 * static_cast<double>(seed % 6), 300 + seed);
        CAPTURE(seed);
        CHECK(reglue(decompose(g)) == g);
    }
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = random_chordal(12, 700 + seed);
        CHECK(reglue(decompose(g)) == g);
    }
}

TEST_CASE("minimal elimination ordering produces a chordal fill") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g = random_graph(9, 0.3, 40 + seed);
        MinimalOrdering mo = mcs_m(g, g.vertices());
        REQUIRE(mo.elimination.size() == 9);
        // Filled graph contains g and is chordal.
        std::vector<std::pair<int, int>> edges = g.edges();
        for (int u = 0; u < 9; ++u) {
            for (int v = mo.fill_adjacency[u].first(); v >= 0; v = mo.fill_adjacency[u].next(v)) {
                CHECK(mo.fill_adjacency[v].contains(u));
                if (u < v) edges.emplace_back(u, v);
            }
        }
        for (auto [u, v] : g.edges()) CHECK(mo.fill_adjacency[u].contains(v));
        Graph filled = Graph::from_edges(9, edges);
        CHECK(is_chordal(filled));
        // Minimality: dropping any single fill edge breaks chordality.
        for (int u = 0; u < 9; ++u) {
            for (int v = mo.fill_adjacency[u].next(u); v >= 0; v = mo.fill_adjacency[u].next(v)) {
                if (g.has_edge(u, v)) continue;
                std::vector<std::pair<int, int>> fewer;
                for (auto [x, y] : filled.edges()) {
                    if (!(x == u && y == v)) fewer.emplace_back(x, y);
                }
                CHECK_FALSE(is_chordal(Graph::from_edges(9, fewer)));
            }
        }
    }
}

TEST_CASE("decomposition of a disconnected graph splits on the empty cutset") {
    Graph g = disjoint_union(complete_graph(3), cycle_graph(4));
    DecompositionTree tree = decompose(g);
    REQUIRE_FALSE(tree.nodes[tree.root].is_atom);
    CHECK(tree.nodes[tree.root].cutset.empty());
    CHECK(reglue(tree) == g);
    std::vector<VertexSet> atoms = tree.atoms();
    REQUIRE(atoms.size() == 2);
    CHECK(atoms[0] == VertexSet(7, {0, 1, 2}));
    CHECK(atoms[1] == VertexSet(7, {3, 4, 5, 6}));
}

TEST_CASE("atom order is left before right") {
    Graph g = glue_along_clique(path_graph(3), complete_graph(3), {{2, 0}}).graph;
    DecompositionTree tree = decompose(g);
    std::vector<int> idx = tree.atom_indices();
    std::vector<VertexSet> spans = tree.atoms();
    REQUIRE(idx.size() == spans.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        CHECK(tree.nodes[idx[i]].vertices == spans[i]);
        CHECK(tree.nodes[idx[i]].is_atom);
    }
}
