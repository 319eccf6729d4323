#include <cstdint>
#include <vector>

#include "doctest.h"
#include "gsep/errors.hpp"
#include "gsep/generators.hpp"
#include "gsep/graph_ops.hpp"
#include "gsep/lexbfs.hpp"
#include "gsep/rng.hpp"
#include "gsep/solvers.hpp"
#include "oracles.hpp"

using namespace gsep;

namespace {

VertexWeights draw_weights(int n, std::uint64_t seed, Weight lo, Weight hi) {
    SplitMix64 rng(seed);
    VertexWeights w(n);
    for (int i = 0; i < n; ++i) {
        w[i] = lo + static_cast<Weight>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    return w;
}

}  // namespace

TEST_CASE("bipartite stable sets: duality and exactness") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        // Built bipartite by construction: sides 0..a-1 and a..a+b-1.
        SplitMix64 rng(7919 * seed);
        int a = 2 + static_cast<int>(rng.next_below(4));
        int b = 2 + static_cast<int>(rng.next_below(4));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < a; ++u) {
            for (int v = 0; v < b; ++v) {
                if (rng.next_double() < 0.45) edges.emplace_back(u, a + v);
            }
        }
        Graph g = Graph::from_edges(a + b, edges);
        REQUIRE(two_coloring(g).has_value());
        ++checked;
        VertexWeights w = draw_weights(a + b, 1000 + seed, 0, 12);
        SolveResult mwis = bipartite_mwis(g, w);
        SolveResult cover = bipartite_min_vertex_cover(g, w);
        CHECK(is_stable_set(g, mwis.vertices));
        Weight total = 0;
        for (Weight x : w) total += x;
        // Complementary slackness: stable set + vertex cover = everything.
        CHECK(mwis.value + cover.value == total);
        CHECK((mwis.vertices | cover.vertices) == g.vertices());
        CHECK_FALSE(mwis.vertices.intersects(cover.vertices));
        for (auto [u, v] : g.edges()) {
            CHECK((cover.vertices.contains(u) || cover.vertices.contains(v)));
        }
        auto [want_value, want_set] = testsupport::mwss_oracle(g, w);
        CHECK(mwis.value == want_value);
        CHECK(mwis.vertices == want_set);
    }
    CHECK(checked == 40);
    CHECK_THROWS_AS(bipartite_mwis(cycle_graph(5), VertexWeights(5, 1)), std::invalid_argument);
}

TEST_CASE("bipartite stable sets on complete bipartite and even cycles") {
    // K_{3,4}, unit weights: take the bigger side.
    Graph b = complete_bipartite(3, 4);
    SolveResult r = bipartite_mwis(b, VertexWeights(7, 1));
    CHECK(r.value == 4);
    CHECK(r.vertices == VertexSet(7, {3, 4, 5, 6}));
    // C6 unit: alternate vertices, lexicographically least is {0,2,4}.
    SolveResult c = bipartite_mwis(cycle_graph(6), VertexWeights(6, 1));
    CHECK(c.value == 3);
    CHECK(c.vertices == VertexSet(6, {0, 2, 4}));
    // Zero weights force the empty certificate.
    SolveResult z = bipartite_mwis(cycle_graph(4), VertexWeights(4, 0));
    CHECK(z.value == 0);
    CHECK(z.vertices.empty());
}

TEST_CASE("brute-force clique solver matches the subset oracle") {
    for (int n = 1; n <= 4; ++n) {
        testsupport::for_each_labeled_graph(n, [&](const Graph& g) {
            VertexWeights unit(n, 1);
            auto [value, set] = testsupport::mwc_oracle(g, unit);
            SolveResult got = mwc_bruteforce(g, unit);
            CHECK(got.value == value);
            CHECK(got.vertices == set);
        });
    }
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = random_graph(11, 0.45, seed);
        VertexWeights w = draw_weights(11, 2000 + seed, 0, 9);  // zeros included
        CAPTURE(seed);
        auto [value, set] = testsupport::mwc_oracle(g, w);
        SolveResult got = mwc_bruteforce(g, w);
        CHECK(got.value == value);
        CHECK(got.vertices == set);
        SolveResult stable = mwss_bruteforce(g, w);
        auto [svalue, sset] = testsupport::mwss_oracle(g, w);
        CHECK(stable.value == svalue);
        CHECK(stable.vertices == sset);
    }
    CHECK_THROWS_AS(mwc_bruteforce(edgeless_graph(kBruteForceGuard + 1),
                                   VertexWeights(kBruteForceGuard + 1, 1)),
                    budget_exhausted_error);
}

TEST_CASE("sweep solver is exact whenever its elimination check passes") {
    int passed = 0;
    for (int n = 1; n <= 5; ++n) {
        testsupport::for_each_labeled_graph(n, [&](const Graph& g) {
            Ordering ord = lexbfs(g, 0);
            if (!is_k_simplicial_elimination_ordering(g, ord.seq, 2).ok) return;
            ++passed;
            for (std::uint64_t seed : {1ull, 2ull}) {
                VertexWeights w = draw_weights(n, 31 * seed + static_cast<std::uint64_t>(n), 0, 7);
                auto [value, set] = testsupport::mwc_oracle(g, w);
                SolveResult got = mwc_g2(g, w, {});
                CHECK(got.value == value);
                CHECK(got.vertices == set);
            }
        });
    }
    CHECK(passed > 100);
}

TEST_CASE("sweep solver on certified members") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = random_chordal(14, seed);
        VertexWeights w = draw_weights(14, 3000 + seed, 0, 1000000);
        SolveResult got = mwc_g2(g, w, {});
        auto [value, set] = testsupport::mwc_oracle(g, w);
        CHECK(got.value == value);
        CHECK(got.vertices == set);
    }
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        std::optional<Graph> sample = random_g2_sample(9, 0.35, 4000 + seed, 50);
        if (!sample) continue;
        VertexWeights w = draw_weights(9, 5000 + seed, 0, 50);
        SolveResult got = mwc_g2(*sample, w, {});
        auto [value, set] = testsupport::mwc_oracle(*sample, w);
        CHECK(got.value == value);
        CHECK(got.vertices == set);
    }
}

TEST_CASE("strict mode rejects graphs failing the elimination check") {
    // Find a small graph whose sweep order fails at level two.
    bool found = false;
    for (int n = 5; n <= 6 && !found; ++n) {
        testsupport::for_each_labeled_graph(n, [&](const Graph& g) {
            if (found) return;
            Ordering ord = lexbfs(g, 0);
            if (is_k_simplicial_elimination_ordering(g, ord.seq, 2).ok) return;
            found = true;
            SolveOptions strict;
            strict.strict = true;
            CHECK_THROWS_AS(mwc_g2(g, VertexWeights(n, 1), strict), strict_mode_error);
            // Non-strict mode answers with some valid clique instead.
            SolveOptions loose;
            loose.strict = false;
            SolveResult r = mwc_g2(g, VertexWeights(n, 1), loose);
            CHECK(is_clique(g, r.vertices));
            CHECK(r.value == r.vertices.count());
        });
    }
    CHECK(found);
}

TEST_CASE("parallel sweep equals serial sweep") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = random_chordal(16, 600 + seed);
        VertexWeights w = draw_weights(16, 6000 + seed, 0, 100);
        SolveOptions par;
        par.threads = 4;
        SolveResult serial = mwc_g2(g, w, {});
        SolveResult parallel = mwc_g2(g, w, par);
        CHECK(serial.value == parallel.value);
        CHECK(serial.vertices == parallel.vertices);
    }
}

TEST_CASE("small-scale stable set solver matches the oracle") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = random_graph(12, 0.3, 70 + seed);
        VertexWeights w = draw_weights(12, 7000 + seed, 0, 20);
        CAPTURE(seed);
        SolveResult got = mwss_gk_smallscale(g, w, 2);
        auto [value, set] = testsupport::mwss_oracle(g, w);
        CHECK(got.value == value);
        CHECK(got.vertices == set);
    }
    // Component splitting: answers add up across disjoint parts.
    Graph two = disjoint_union(cycle_graph(5), complete_graph(4));
    SolveResult r = mwss_gk_smallscale(two, VertexWeights(9, 1), 2);
    CHECK(r.value == 3);
    CHECK_THROWS_AS(mwss_gk_smallscale(edgeless_graph(kSmallScaleGuard + 1),
                                       VertexWeights(kSmallScaleGuard + 1, 1), 2),
                    budget_exhausted_error);
    CHECK_THROWS_AS(mwss_gk_smallscale(cycle_graph(4), VertexWeights(4, 1), -1),
                    std::invalid_argument);
}

TEST_CASE("stable set numbers of named graphs") {
    CHECK(alpha(cycle_graph(9)) == 4);
    CHECK(alpha(cycle_graph(5)) == 2);
    CHECK(alpha(complete_graph(7)) == 1);
    CHECK(alpha(complete_bipartite(3, 4)) == 4);
    CHECK(alpha(testsupport::petersen()) == 4);
    CHECK(alpha(poljak_double_subdivision(complete_graph(3))) == 4);  // C9 again
}

TEST_CASE("certificates are lexicographically least among optima") {
    // Two disjoint edges with equal weights: {0, 2} beats {0, 3}, {1, 2}, ...
    Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    SolveResult r = mwss_bruteforce(g, VertexWeights(4, 5));
    CHECK(r.vertices == VertexSet(4, {0, 2}));
    // Zero weights at the edges of the optimum change nothing here.
    VertexWeights w{0, 5, 5, 0};
    SolveResult z = mwss_bruteforce(g, w);
    CHECK(z.value == 10);
    CHECK(z.vertices == VertexSet(4, {1, 2}));
    // Isolated zero-weight vertex 0 must be included: {0, 1} < {1}.
    Graph iso = Graph::from_edges(2, {});
    SolveResult i = mwss_bruteforce(iso, VertexWeights{0, 5});
    CHECK(i.vertices == VertexSet(2, {0, 1}));
}
