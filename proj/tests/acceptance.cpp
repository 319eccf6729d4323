// Release gate for the library: every advertised guarantee exercised in one
// binary, one [PASS]/[FAIL] line per criterion, exit code = number of
// failures. Expected values come from the brute-force oracles in
// tests/support, which are kept structurally independent of the library.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsep/cover.hpp"
#include "gsep/decomposition.hpp"
#include "gsep/dfg2.hpp"
#include "gsep/errors.hpp"
#include "gsep/generators.hpp"
#include "gsep/graph.hpp"
#include "gsep/graph_ops.hpp"
#include "gsep/induced_minor.hpp"
#include "gsep/lexbfs.hpp"
#include "gsep/membership.hpp"
#include "gsep/rng.hpp"
#include "gsep/solvers.hpp"
#include "oracles.hpp"

using namespace gsep;

namespace {

int g_failures = 0;

// (host, pattern) pairs for every induced-minor model found while running the
// earlier criteria; criterion 14 re-checks them all.
std::vector<std::pair<Graph, Graph>> g_found_models;

struct criterion_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& message) {
    if (!cond) throw criterion_failure(message);
}

void run_criterion(int index, const char* title, const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        detail = body();
        ok = true;
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %02d: %s (%s; %.1fs)\n", ok ? "PASS" : "FAIL", index, title,
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

VertexWeights draw_weights(int n, SplitMix64& rng, Weight lo, Weight hi) {
    VertexWeights w(n);
    for (int i = 0; i < n; ++i) {
        w[i] = lo + static_cast<Weight>(rng.next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    return w;
}

Weight weight_of(const VertexWeights& w, const VertexSet& s) {
    Weight total = 0;
    for (int v = s.first(); v >= 0; v = s.next(v)) total += w[v];
    return total;
}

std::vector<int> random_permutation(int n, SplitMix64& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i + 1)));
        std::swap(p[i], p[j]);
    }
    return p;
}

// Random graphs certified into the level-two class; chordal and
// rejection-sampled sources keep the mix diverse while guaranteeing progress.
std::vector<Graph> certified_g2_corpus(int want, int max_n, std::uint64_t seed) {
    std::vector<Graph> out;
    SplitMix64 rng(seed);
    while (static_cast<int>(out.size()) < want) {
        int n = 4 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_n - 3)));
        std::uint64_t s = rng.next();
        Graph g;
        switch (rng.next() % 3) {
            case 0:
                g = random_chordal(n, s);
                break;
            case 1:
                g = random_graph(n, 0.35 + 0.15 * static_cast<double>(rng.next() % 4), s);
                break;
            default: {
                std::optional<Graph> r = random_g2_sample(n, 0.45, s, 50);
                if (!r) continue;
                g = *r;
                break;
            }
        }
        if (gk_membership(g, 2).in_class) out.push_back(std::move(g));
    }
    return out;
}

std::vector<int> random_clique(const Graph& g, SplitMix64& rng, int max_size) {
    int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.vertex_count())));
    std::vector<int> c{v};
    VertexSet cand = g.neighbors(v);
    while (static_cast<int>(c.size()) < max_size) {
        int m = cand.count();
        if (m == 0) break;
        int idx = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m)));
        int u = cand.first();
        while (idx-- > 0) u = cand.next(u);
        c.push_back(u);
        cand &= g.neighbors(u);
    }
    return c;
}

// Members of the diamond-free level-two class built by gluing complete
// graphs, cycles, and complete prisms along shared vertices; an edge gluing
// is taken only when the incoming piece keeps the shared edge triangle-free.
Graph glued_instance(std::uint64_t seed, int pieces, int max_param) {
    SplitMix64 rng(seed);
    auto draw = [&](bool& edge_safe) -> Graph {
        switch (rng.next() % 3) {
            case 0: {
                int n = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_param - 1)));
                edge_safe = n == 2;
                return complete_graph(n);
            }
            case 1:
                edge_safe = true;
                return cycle_graph(4 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_param))));
            default:
                edge_safe = false;
                return short_n_prism(3 + static_cast<int>(rng.next_below(2)));
        }
    };
    bool edge_safe = false;
    Graph g = draw(edge_safe);
    for (int i = 1; i < pieces; ++i) {
        Graph h = draw(edge_safe);
        int a = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.vertex_count())));
        std::vector<std::pair<int, int>> pairing{{a, 0}};
        int b = g.neighbors(a).first();
        if (b >= 0 && edge_safe && h.has_edge(0, 1) && rng.next_bool()) pairing.emplace_back(b, 1);
        g = glue_along_clique(g, h, pairing).graph;
    }
    return g;
}

// Long chain of pieces glued at shared vertices; every atom stays a complete
// graph, a cycle, or a complete prism, so recognition accepts at any size.
Graph big_glued_instance(std::uint64_t seed, int target) {
    SplitMix64 rng(seed);
    Graph g = cycle_graph(6);
    while (g.vertex_count() < target) {
        Graph h;
        switch (rng.next() % 3) {
            case 0:
                h = complete_graph(3 + static_cast<int>(rng.next_below(3)));
                break;
            case 1:
                h = cycle_graph(4 + static_cast<int>(rng.next_below(5)));
                break;
            default:
                h = short_n_prism(3 + static_cast<int>(rng.next_below(2)));
                break;
        }
        int a = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.vertex_count())));
        g = glue_along_clique(g, h, {{a, 0}}).graph;
    }
    return g;
}

bool proper_coloring(const Graph& g, const Coloring& c) {
    int n = g.vertex_count();
    if (static_cast<int>(c.assignment.size()) != n) return false;
    int used = 0;
    for (int v = 0; v < n; ++v) {
        if (c.assignment[v] < 0 || c.assignment[v] >= c.colors) return false;
        used = std::max(used, c.assignment[v] + 1);
    }
    if (n > 0 && used != c.colors) return false;
    for (auto [u, v] : g.edges()) {
        if (c.assignment[u] == c.assignment[v]) return false;
    }
    return true;
}

long long sweep_all_lexbfs(const Graph& g, int k, SplitMix64& rng) {
    long long checks = 0;
    auto sweep = [&](const Graph& h) {
        for (int s = 0; s < h.vertex_count(); ++s) {
            Ordering ord = lexbfs(h, s);
            require(is_k_simplicial_elimination_ordering(h, ord.seq, k).ok,
                    "a LexBFS order failed the " + std::to_string(k) + "-simplicial check");
            ++checks;
        }
    };
    sweep(g);
    for (int r = 0; r < 10; ++r) sweep(relabel(g, random_permutation(g.vertex_count(), rng)));
    return checks;
}

void check_recognizer(const Graph& g) {
    Recognition rec = recognize_dfg2(g);
    bool definition = is_diamond_free(g) && gk_membership(g, 2).in_class;
    require(rec.accepted == definition, "recognizer disagreed with the class definition");
    require(rec.diamond_free == is_diamond_free(g), "diamond-free flag wrong");
    if (rec.accepted) {
        for (const AtomClass& cls : rec.atom_classes) {
            require(cls.kind != AtomClass::Kind::Other, "accepted graph had an unclassified atom");
        }
    }
}

void criterion_1() {
    run_criterion(1,
                  "level-0 membership is exactly P3-freeness and level-1 exactly chordality "
                  "(all labeled graphs, n <= 6)",
                  [] {
                      long long graphs = 0;
                      for (int n = 0; n <= 6; ++n) {
                          testsupport::for_each_labeled_graph(n, [&](const Graph& g) {
                              require(gk_membership(g, 0).in_class == testsupport::is_p3_free_oracle(g),
                                      "level-0 mismatch at n=" + std::to_string(n));
                              require(gk_membership(g, 1).in_class == testsupport::is_chordal_oracle(g),
                                      "level-1 mismatch at n=" + std::to_string(n));
                              ++graphs;
                          });
                      }
                      return std::to_string(graphs) + " graphs agreed";
                  });
}

void criterion_2() {
    run_criterion(2,
                  "level-2 membership coincides with absence of the obstruction family as an "
                  "induced minor (exhaustive n <= 6 + 1000 random n in {7,8})",
                  [] {
                      long long agreed = 0;
                      auto check_one = [&](const Graph& g, int k_max) {
                          ObstructionScan scan = g2_forbidden_minor_scan(g, k_max);
                          bool member = gk_membership(g, 2).in_class;
                          require(scan.found == !member, "scan and membership disagreed");
                          if (scan.found) {
                              Graph pattern = forbidden_g2_minor(scan.level);
                              require(scan.model.has_value() && verify_model(g, pattern, *scan.model),
                                      "scan returned an invalid model");
                              if (g.vertex_count() <= 8) g_found_models.emplace_back(g, pattern);
                          }
                          ++agreed;
                      };
                      for (int n = 0; n <= 6; ++n) {
                          testsupport::for_each_labeled_graph(n, [&](const Graph& g) { check_one(g, 3); });
                      }
                      SplitMix64 rng(20260823);
                      for (int i = 0; i < 1000; ++i) {
                          int n = 7 + i % 2;
                          double p = 0.15 + 0.10 * static_cast<double>(i % 7);
                          check_one(random_graph(n, p, rng.next()), 2);
                      }
                      return std::to_string(agreed) + " graphs agreed";
                  });
}

void criterion_3() {
    run_criterion(3,
                  "K(2,k+1) leaves the class at level k, joins at level k+1, and its separator "
                  "profile is k+1 (k = 1..4)",
                  [] {
                      for (int k = 1; k <= 4; ++k) {
                          Graph g = complete_bipartite(2, k + 1);
                          require(!gk_membership(g, k).in_class,
                                  "K(2," + std::to_string(k + 1) + ") accepted at level " + std::to_string(k));
                          require(gk_membership(g, k + 1).in_class,
                                  "K(2," + std::to_string(k + 1) + ") rejected at level " + std::to_string(k + 1));
                          require(separator_profile(g) == k + 1, "separator profile wrong");
                      }
                      return "k = 1..4 as predicted";
                  });
}

void criterion_4() {
    run_criterion(4,
                  "every LexBFS order of a certified level-2 graph, from every start and under "
                  "random relabelings, is a 2-simplicial elimination order",
                  [] {
                      std::vector<Graph> corpus = certified_g2_corpus(500, 10, 777001);
                      SplitMix64 rng(777002);
                      long long checks = 0;
                      for (const Graph& g : corpus) checks += sweep_all_lexbfs(g, 2, rng);
                      for (int i = 0; i < 100; ++i) {
                          checks += sweep_all_lexbfs(random_chordal(4 + i % 7, 777100 + i), 1, rng);
                      }
                      return std::to_string(corpus.size()) + " level-2 graphs + 100 chordal graphs, " +
                             std::to_string(checks) + " orderings passed";
                  });
}

void criterion_5() {
    run_criterion(5,
                  "sweep solver for maximum-weight clique matches brute force on certified "
                  "level-2 graphs (n <= 12, 5 weight draws each)",
                  [] {
                      std::vector<Graph> corpus = certified_g2_corpus(120, 12, 555001);
                      SplitMix64 rng(555002);
                      long long cases = 0;
                      for (const Graph& g : corpus) {
                          for (int d = 0; d < 5; ++d) {
                              VertexWeights w = draw_weights(g.vertex_count(), rng, 0, 1000000);
                              SolveResult fast = mwc_g2(g, w);
                              SolveResult ref = mwc_bruteforce(g, w);
                              require(fast.value == ref.value && fast.vertices == ref.vertices,
                                      "clique solver mismatch");
                              ++cases;
                          }
                      }
                      return std::to_string(cases) + " weighted instances, certificates identical";
                  });
}

void criterion_6() {
    run_criterion(6, "gluing two certified level-2 graphs along a shared clique stays level-2",
                  [] {
                      std::vector<Graph> corpus = certified_g2_corpus(60, 12, 666001);
                      SplitMix64 rng(666002);
                      for (int i = 0; i < 300; ++i) {
                          const Graph& g1 = corpus[rng.next_below(corpus.size())];
                          const Graph& g2 = corpus[rng.next_below(corpus.size())];
                          std::vector<int> c1 = random_clique(g1, rng, 3);
                          std::vector<int> c2 = random_clique(g2, rng, 3);
                          std::size_t shared = std::min(c1.size(), c2.size());
                          std::vector<std::pair<int, int>> pairing;
                          for (std::size_t j = 0; j < shared; ++j) pairing.emplace_back(c1[j], c2[j]);
                          Graph glued = glue_along_clique(g1, g2, pairing).graph;
                          require(gk_membership(glued, 2).in_class,
                                  "gluing " + std::to_string(i) + " left the class");
                      }
                      return "300 gluings stayed in the class";
                  });
}

void criterion_7() {
    run_criterion(7,
                  "every vertex deletion and edge contraction of a certified level-2 graph "
                  "stays level-2 (200 graphs, n <= 9)",
                  [] {
                      std::vector<Graph> corpus = certified_g2_corpus(200, 9, 888001);
                      long long ops = 0;
                      for (const Graph& g : corpus) {
                          int n = g.vertex_count();
                          for (int v = 0; v < n; ++v) {
                              VertexSet keep = VertexSet::full(n);
                              keep.remove(v);
                              require(gk_membership(induced_subgraph(g, keep).graph, 2).in_class,
                                      "a vertex deletion left the class");
                              ++ops;
                          }
                          for (auto [u, v] : g.edges()) {
                              require(gk_membership(contract_edge(g, u, v).graph, 2).in_class,
                                      "an edge contraction left the class");
                              ++ops;
                          }
                      }
                      return "200 graphs, " + std::to_string(ops) + " deletions/contractions stayed in";
                  });
}

void criterion_8() {
    run_criterion(8,
                  "two nonadjacent apexes over G: level-k membership holds exactly when the "
                  "complement of G is k-colorable (200 graphs, k = 2,3)",
                  [] {
                      SplitMix64 rng(999001);
                      for (int i = 0; i < 200; ++i) {
                          int n = 3 + i % 6;
                          double p = 0.25 + 0.25 * static_cast<double>(i % 3);
                          Graph g = random_graph(n, p, rng.next());
                          int chi = testsupport::chromatic_number_oracle(complement(g));
                          Graph ap = apex_pair(g);
                          for (int k = 2; k <= 3; ++k) {
                              require((chi <= k) == gk_membership(ap, k).in_class,
                                      "biconditional failed at graph " + std::to_string(i) +
                                          ", k=" + std::to_string(k));
                          }
                      }
                      return "200 graphs, both levels agree";
                  });
}

void criterion_9() {
    run_criterion(9,
                  "double subdivision raises the stable-set number by exactly the edge count "
                  "(200 graphs)",
                  [] {
                      SplitMix64 rng(111001);
                      int done = 0;
                      while (done < 200) {
                          int n = 3 + static_cast<int>(rng.next_below(6));
                          double p = 0.15 + 0.1 * static_cast<double>(rng.next_below(3));
                          Graph g = random_graph(n, p, rng.next());
                          Graph sub = poljak_double_subdivision(g);
                          if (sub.vertex_count() > kSmallScaleGuard) continue;
                          VertexWeights unit_g(g.vertex_count(), 1);
                          VertexWeights unit_s(sub.vertex_count(), 1);
                          Weight a = testsupport::mwss_oracle(g, unit_g).first;
                          SolveResult as = mwss_gk_smallscale(sub, unit_s, 2);
                          require(as.value == a + g.edge_count(), "identity failed");
                          require(alpha(sub) == static_cast<int>(as.value),
                                  "stable-set number helper disagreed");
                          ++done;
                      }
                      return "200 graphs satisfied alpha(subdivision) = alpha + |E|";
                  });
}

void criterion_10() {
    run_criterion(10,
                  "every theta, pyramid, long prism, and broken wheel on <= 12 vertices "
                  "contains K(2,3) as an induced minor (full parameter sweep)",
                  [] {
                      Graph k23 = complete_bipartite(2, 3);
                      long long hosts = 0;
                      auto check_host = [&](const Graph& host) {
                          std::optional<InducedMinorModel> m = find_induced_minor(host, k23);
                          require(m.has_value() && verify_model(host, k23, *m),
                                  "no model in a host of size " + std::to_string(host.vertex_count()));
                          if (host.vertex_count() <= 8) g_found_models.emplace_back(host, k23);
                          ++hosts;
                      };
                      for (int l1 = 2; 3 * l1 <= 13; ++l1) {
                          for (int l2 = l1; l1 + 2 * l2 <= 13; ++l2) {
                              for (int l3 = l2; l1 + l2 + l3 <= 13; ++l3) {
                                  check_host(theta_graph(l1, l2, l3));
                              }
                          }
                      }
                      for (int l1 = 1; l1 <= 9; ++l1) {
                          for (int l2 = std::max(l1, 2); l1 + 2 * l2 <= 11; ++l2) {
                              for (int l3 = l2; l1 + l2 + l3 <= 11; ++l3) {
                                  check_host(pyramid_graph(l1, l2, l3));
                              }
                          }
                      }
                      for (int l1 = 1; l1 <= 7; ++l1) {
                          for (int l2 = l1; l1 + 2 * l2 <= 9; ++l2) {
                              for (int l3 = std::max(l2, 2); l1 + l2 + l3 <= 9; ++l3) {
                                  check_host(prism_graph(l1, l2, l3));
                              }
                          }
                      }
                      for (int hole = 4; hole + 1 <= 12; ++hole) {
                          for (std::uint32_t mask = 0; mask < (1u << hole); ++mask) {
                              if (__builtin_popcount(mask) < 3) continue;
                              std::vector<int> spokes;
                              for (int i = 0; i < hole; ++i) {
                                  if (mask & (1u << i)) spokes.push_back(i);
                              }
                              if (!is_broken_wheel_params(hole, spokes)) continue;
                              check_host(wheel_graph(hole, spokes));
                          }
                      }
                      return std::to_string(hosts) + " hosts, all contained the obstruction";
                  });
}

void criterion_11() {
    run_criterion(11,
                  "diamond-free level-2 recognizer agrees with the definition and classifies "
                  "every atom (exhaustive n <= 6 + 500 random n <= 10)",
                  [] {
                      long long agreed = 0;
                      for (int n = 0; n <= 6; ++n) {
                          testsupport::for_each_labeled_graph(n, [&](const Graph& g) {
                              check_recognizer(g);
                              ++agreed;
                          });
                      }
                      SplitMix64 rng(131001);
                      for (int i = 0; i < 500; ++i) {
                          int n = 5 + i % 6;
                          double p = 0.15 + 0.07 * static_cast<double>(i % 5);
                          check_recognizer(random_graph(n, p, rng.next()));
                          ++agreed;
                      }
                      return std::to_string(agreed) + " graphs agreed";
                  });
}

void criterion_12() {
    run_criterion(12,
                  "decomposition solvers (clique, stable set, coloring) match oracles on glued "
                  "instances (n <= 18) and certify a feasible optimum profile at n = 2000 in "
                  "under 60 s",
                  [] {
                      SplitMix64 rng(151001);
                      int done = 0;
                      std::uint64_t seed = 0;
                      while (done < 200) {
                          ++seed;
                          Graph g = glued_instance(151000 + seed, 3 + static_cast<int>(seed % 2), 4);
                          if (g.vertex_count() > 18) continue;
                          VertexWeights w = draw_weights(g.vertex_count(), rng, 0, 14);
                          Dfg2Solution mwc = solve_dfg2(g, w, Dfg2Problem::mwc);
                          auto [cv, cs] = testsupport::mwc_oracle(g, w);
                          require(mwc.best.value == cv && mwc.best.vertices == cs,
                                  "clique solver mismatch at seed " + std::to_string(seed));
                          Dfg2Solution mwss = solve_dfg2(g, w, Dfg2Problem::mwss);
                          auto [sv, ss] = testsupport::mwss_oracle(g, w);
                          require(mwss.best.value == sv && mwss.best.vertices == ss,
                                  "stable-set solver mismatch at seed " + std::to_string(seed));
                          Dfg2Solution col = solve_dfg2(g, w, Dfg2Problem::color);
                          require(static_cast<int>(col.best.value) == col.coloring.colors,
                                  "color count mismatch");
                          require(col.coloring.colors == testsupport::chromatic_number_oracle(g),
                                  "coloring not optimal at seed " + std::to_string(seed));
                          require(proper_coloring(g, col.coloring), "coloring not proper");
                          ++done;
                      }
                      auto t0 = std::chrono::steady_clock::now();
                      Graph big = big_glued_instance(424242, 2000);
                      VertexWeights wb = draw_weights(big.vertex_count(), rng, 0, 1000);
                      require(recognize_dfg2(big).accepted, "large glued instance not recognized");
                      Dfg2Solution bc = solve_dfg2(big, wb, Dfg2Problem::mwc);
                      require(is_clique(big, bc.best.vertices) &&
                                  weight_of(wb, bc.best.vertices) == bc.best.value,
                              "large clique certificate infeasible");
                      Dfg2Solution bs = solve_dfg2(big, wb, Dfg2Problem::mwss);
                      require(is_stable_set(big, bs.best.vertices) &&
                                  weight_of(wb, bs.best.vertices) == bs.best.value,
                              "large stable-set certificate infeasible");
                      Dfg2Solution bcol = solve_dfg2(big, wb, Dfg2Problem::color);
                      require(proper_coloring(big, bcol.coloring),
                              "large coloring certificate infeasible");
                      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                        .count();
                      require(secs < 60.0, "large instance exceeded 60 s");
                      char buf[160];
                      std::snprintf(buf, sizeof(buf),
                                    "200 oracle matches; n=%d solved three ways in %.1fs",
                                    big.vertex_count(), secs);
                      return std::string(buf);
                  });
}

void criterion_13() {
    run_criterion(13,
                  "bipartite stable set / vertex cover duality: weights of the two certificates "
                  "always sum to the total (1000 instances)",
                  [] {
                      SplitMix64 rng(171001);
                      for (int i = 0; i < 1000; ++i) {
                          int a = 1 + static_cast<int>(rng.next_below(8));
                          int b = 1 + static_cast<int>(rng.next_below(8));
                          double p = 0.2 + 0.2 * static_cast<double>(rng.next_below(4));
                          std::vector<std::pair<int, int>> edges;
                          for (int u = 0; u < a; ++u) {
                              for (int v = 0; v < b; ++v) {
                                  if (rng.next_double() < p) edges.emplace_back(u, a + v);
                              }
                          }
                          Graph g = Graph::from_edges(a + b, edges);
                          VertexWeights w = draw_weights(a + b, rng, 0, 100);
                          SolveResult is = bipartite_mwis(g, w);
                          SolveResult vc = bipartite_min_vertex_cover(g, w);
                          Weight total = 0;
                          for (Weight x : w) total += x;
                          require(is.value + vc.value == total,
                                  "duality gap at instance " + std::to_string(i));
                          require(is_stable_set(g, is.vertices) &&
                                      weight_of(w, is.vertices) == is.value,
                                  "stable-set certificate infeasible");
                          require(weight_of(w, vc.vertices) == vc.value,
                                  "cover certificate weight mismatch");
                          for (auto [u, v] : g.edges()) {
                              require(vc.vertices.contains(u) || vc.vertices.contains(v),
                                      "cover misses an edge");
                          }
                      }
                      return "1000 instances satisfied the duality exactly";
                  });
}

void criterion_14() {
    run_criterion(14,
                  "for every induced-minor model found above (hosts n <= 8), the complement of "
                  "the pattern embeds as a subgraph of the complement of the host",
                  [] {
                      require(!g_found_models.empty(), "no models were collected");
                      for (const auto& [host, pattern] : g_found_models) {
                          require(complement_subgraph_check(host, pattern),
                                  "complement embedding missing");
                      }
                      return std::to_string(g_found_models.size()) + " (host, pattern) pairs checked";
                  });
}

}  // namespace

int main() {
    std::printf("acceptance suite: separator structure, recognition, and exact solvers\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    criterion_14();
    std::printf("%d/14 criteria passed\n", 14 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
