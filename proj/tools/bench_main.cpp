// Benchmark harness: times the serial reference path against the
// OpenMP-parallel kernels on the same inputs and verifies the results are
// identical. Exits nonzero if any parallel result diverges from serial.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gsep/generators.hpp"
#include "gsep/graph.hpp"
#include "gsep/rng.hpp"
#include "gsep/separators.hpp"
#include "gsep/solvers.hpp"

namespace {

using namespace gsep;
using clock_type = std::chrono::steady_clock;

double run_ms(const std::function<void()>& fn) {
    auto t0 = clock_type::now();
    fn();
    auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool same_records(const std::vector<SeparatorRecord>& a, const std::vector<SeparatorRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i].separator == b[i].separator)) return false;
    }
    return true;
}

VertexWeights bench_weights(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    VertexWeights w(n);
    for (int i = 0; i < n; ++i) w[i] = static_cast<Weight>(rng.next() % 1000);
    return w;
}

}  // namespace

int main() {
    const int threads = 4;
    bool ok = true;

    struct Case {
        std::string name;
        Graph g;
    };
    std::vector<Case> cases;
    cases.push_back({"random(40,0.20)", random_graph(40, 0.20, 11)});
    cases.push_back({"random(36,0.22)", random_graph(36, 0.22, 12)});
    cases.push_back({"chordal(80)", random_chordal(80, 13)});
    cases.push_back({"bipartite(8,9)", complete_bipartite(8, 9)});

    std::printf("%-22s %-26s %10s %10s %8s  %s\n", "graph", "kernel", "serial", "parallel",
                "speedup", "match");
    for (const Case& c : cases) {
        {
            EnumerationOptions serial_opt;
            EnumerationOptions par_opt;
            par_opt.threads = threads;
            std::vector<SeparatorRecord> serial_out;
            std::vector<SeparatorRecord> par_out;
            double ts = run_ms([&] { serial_out = all_minimal_separators(c.g, serial_opt); });
            double tp = run_ms([&] { par_out = all_minimal_separators(c.g, par_opt); });
            bool match = same_records(serial_out, par_out);
            ok = ok && match;
            std::printf("%-22s %-26s %8.2fms %8.2fms %7.2fx  %s\n", c.name.c_str(),
                        "all_minimal_separators", ts, tp, tp > 0 ? ts / tp : 0.0,
                        match ? "yes" : "NO");
        }
    }

    std::vector<Case> solver_cases;
    solver_cases.push_back({"chordal(120)", random_chordal(120, 21)});
    solver_cases.push_back({"chordal(200)", random_chordal(200, 22)});
    for (const Case& c : solver_cases) {
        VertexWeights w = bench_weights(c.g.vertex_count(), 99);
        SolveOptions serial_opt;
        serial_opt.strict = false;
        SolveOptions par_opt;
        par_opt.strict = false;
        par_opt.threads = threads;
        SolveResult serial_out;
        SolveResult par_out;
        double ts = run_ms([&] { serial_out = mwc_g2(c.g, w, serial_opt); });
        double tp = run_ms([&] { par_out = mwc_g2(c.g, w, par_opt); });
        bool match =
            serial_out.value == par_out.value && serial_out.vertices == par_out.vertices;
        ok = ok && match;
        std::printf("%-22s %-26s %8.2fms %8.2fms %7.2fx  %s\n", c.name.c_str(), "mwc_g2", ts, tp,
                    tp > 0 ? ts / tp : 0.0, match ? "yes" : "NO");
    }

    if (!ok) {
        std::printf("FAIL: parallel output diverged from serial\n");
        return 1;
    }
    std::printf("all kernels matched\n");
    return 0;
}
