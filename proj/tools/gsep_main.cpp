// Command-line front end: graph generation, separator enumeration, class
// membership, LexBFS, clique-cutset decomposition, induced-minor search,
// diamond-free recognition, and the exact solvers, over the text format of
// dimacs.hpp. Exit codes: 0 decided/solved, 1 property false, 2 usage or
// parse error, 3 budget exhausted (indeterminate).
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsep/cover.hpp"
#include "gsep/decomposition.hpp"
#include "gsep/dfg2.hpp"
#include "gsep/dimacs.hpp"
#include "gsep/errors.hpp"
#include "gsep/generators.hpp"
#include "gsep/graph_ops.hpp"
#include "gsep/induced_minor.hpp"
#include "gsep/lexbfs.hpp"
#include "gsep/membership.hpp"
#include "gsep/separators.hpp"
#include "gsep/solvers.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace gsep;

struct GlobalOpts {
    bool json = false;
    std::uint64_t seed = 1;
    std::int64_t budget = 1'000'000;
    bool strict = false;
    int threads = 1;
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

GraphDocument load_document(const std::string& path) { return parse_graph(read_input(path)); }

std::vector<int> one_based(const VertexSet& s) {
    std::vector<int> out;
    for (int v = s.first(); v >= 0; v = s.next(v)) out.push_back(v + 1);
    return out;
}

std::string join(const std::vector<int>& vs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out << ' ';
        out << vs[i];
    }
    return out.str();
}

void emit(const GlobalOpts& opts, const json& doc, const std::string& plain) {
    if (opts.json) {
        std::cout << doc.dump() << "\n";
    } else if (!plain.empty()) {
        std::cout << plain << "\n";
    }
}

int require_int(const std::vector<std::string>& args, std::size_t i, const char* what) {
    if (i >= args.size()) throw std::invalid_argument(std::string("missing ") + what);
    return std::stoi(args[i]);
}

double require_double(const std::vector<std::string>& args, std::size_t i, const char* what) {
    if (i >= args.size()) throw std::invalid_argument(std::string("missing ") + what);
    return std::stod(args[i]);
}

int cmd_gen(const GlobalOpts& opts, const std::string& family,
            const std::vector<std::string>& args, int short_prism, int tries) {
    GraphDocument doc;
    std::ostringstream label;
    if (family == "complete" || family == "cycle" || family == "path" || family == "edgeless") {
        int n = require_int(args, 0, "vertex count");
        if (family == "complete") doc.graph = complete_graph(n);
        if (family == "cycle") doc.graph = cycle_graph(n);
        if (family == "path") doc.graph = path_graph(n);
        if (family == "edgeless") doc.graph = edgeless_graph(n);
        label << family << "(" << n << ")";
    } else if (family == "bipartite") {
        int p = require_int(args, 0, "first part size");
        int q = require_int(args, 1, "second part size");
        doc.graph = complete_bipartite(p, q);
        label << "bipartite(" << p << "," << q << ")";
    } else if (family == "theta" || family == "pyramid") {
        int a = require_int(args, 0, "first length");
        int b = require_int(args, 1, "second length");
        int c = require_int(args, 2, "third length");
        doc.graph = family == "theta" ? theta_graph(a, b, c) : pyramid_graph(a, b, c);
        label << family << "(" << a << "," << b << "," << c << ")";
    } else if (family == "prism") {
        if (short_prism > 0) {
            doc.graph = short_n_prism(short_prism);
            label << "short-prism(" << short_prism << ")";
        } else {
            int a = require_int(args, 0, "first length");
            int b = require_int(args, 1, "second length");
            int c = require_int(args, 2, "third length");
            doc.graph = prism_graph(a, b, c);
            label << "prism(" << a << "," << b << "," << c << ")";
        }
    } else if (family == "wheel") {
        int len = require_int(args, 0, "hole length");
        std::vector<int> spokes;
        for (std::size_t i = 1; i < args.size(); ++i) {
            spokes.push_back(require_int(args, i, "spoke position") - 1);
        }
        doc.graph = wheel_graph(len, spokes);
        label << "wheel(" << len << ")";
    } else if (family == "forbidden") {
        int k = require_int(args, 0, "level");
        doc.graph = forbidden_g2_minor(k);
        label << "forbidden(" << k << ")";
    } else if (family == "petersen") {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        doc.graph = Graph::from_edges(10, edges);
        label << "petersen";
    } else if (family == "poljak" || family == "apex") {
        if (args.empty()) throw std::invalid_argument("missing input graph");
        GraphDocument base = load_document(args[0]);
        doc.graph = family == "poljak" ? poljak_double_subdivision(base.graph)
                                       : apex_pair(base.graph);
        label << family;
        if (base.name) label << "(" << *base.name << ")";
    } else if (family == "random") {
        int n = require_int(args, 0, "vertex count");
        double p = require_double(args, 1, "edge probability");
        doc.graph = random_graph(n, p, opts.seed);
        label << "random(" << n << "," << p << ",seed=" << opts.seed << ")";
    } else if (family == "chordal") {
        int n = require_int(args, 0, "vertex count");
        doc.graph = random_chordal(n, opts.seed);
        label << "chordal(" << n << ",seed=" << opts.seed << ")";
    } else if (family == "g2") {
        int n = require_int(args, 0, "vertex count");
        double p = require_double(args, 1, "edge probability");
        std::optional<Graph> sample = random_g2_sample(n, p, opts.seed, tries);
        if (!sample) throw budget_exhausted_error("no sample found within the try budget");
        doc.graph = *sample;
        label << "g2(" << n << "," << p << ",seed=" << opts.seed << ")";
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }
    doc.weights.assign(doc.graph.vertex_count(), 1);
    doc.name = label.str();
    std::cout << serialize_graph(doc);
    return 0;
}

int cmd_membership(const GlobalOpts& opts, const std::string& file, int k) {
    GraphDocument doc = load_document(file);
    MembershipOptions mo;
    mo.enumeration.cap = opts.budget;
    mo.enumeration.threads = opts.threads;
    MembershipVerdict v = gk_membership(doc.graph, k, mo);
    if (v.in_class) {
        emit(opts, {{"ok", true}, {"k", k}}, "member: every minimal separator splits into " +
                                                 std::to_string(k) + " cliques");
        return 0;
    }
    std::vector<int> witness = one_based(v.witness->separator);
    emit(opts, {{"ok", false}, {"k", k}, {"witness", witness}},
         "not a member\nwitness " + join(witness));
    return 1;
}

int cmd_separators(const GlobalOpts& opts, const std::string& file, const std::vector<int>& pair) {
    GraphDocument doc = load_document(file);
    EnumerationOptions eo;
    eo.cap = opts.budget;
    eo.threads = opts.threads;
    std::vector<SeparatorRecord> records;
    if (!pair.empty()) {
        records = minimal_ab_separators(doc.graph, pair[0] - 1, pair[1] - 1, eo);
    } else {
        records = all_minimal_separators(doc.graph, eo);
    }
    json sets = json::array();
    std::ostringstream plain;
    for (const SeparatorRecord& r : records) {
        std::vector<int> s = one_based(r.separator);
        sets.push_back(s);
        plain << join(s) << "\n";
    }
    plain << "count " << records.size();
    emit(opts, {{"ok", true}, {"count", records.size()}, {"separators", sets}}, plain.str());
    return 0;
}

int cmd_lexbfs(const GlobalOpts& opts, const std::string& file, int start, int k) {
    GraphDocument doc = load_document(file);
    if (start < 1 || start > doc.graph.vertex_count()) {
        throw std::invalid_argument("start vertex out of range");
    }
    Ordering ord = lexbfs(doc.graph, start - 1);
    std::vector<int> seq;
    for (int v : ord.seq) seq.push_back(v + 1);
    if (k < 0) {
        emit(opts, {{"ok", true}, {"order", seq}}, join(seq));
        return 0;
    }
    EliminationCheck check = is_k_simplicial_elimination_ordering(doc.graph, ord.seq, k);
    if (check.ok) {
        emit(opts, {{"ok", true}, {"order", seq}, {"k", k}},
             join(seq) + "\nelimination ok k=" + std::to_string(k));
        return 0;
    }
    emit(opts,
         {{"ok", false}, {"order", seq}, {"k", k}, {"bad_position", check.bad_index + 1}},
         join(seq) + "\nelimination fails at position " + std::to_string(check.bad_index + 1));
    return 1;
}

int cmd_decompose(const GlobalOpts& opts, const std::string& file) {
    GraphDocument doc = load_document(file);
    DecompositionTree tree = decompose(doc.graph);
    json atoms = json::array();
    json cuts = json::array();
    std::ostringstream plain;
    std::vector<VertexSet> spans = tree.atoms();
    plain << "atoms " << spans.size();
    for (const VertexSet& span : spans) {
        std::vector<int> s = one_based(span);
        atoms.push_back(s);
        plain << "\natom " << join(s);
    }
    for (const DecompositionTree::Node& node : tree.nodes) {
        if (!node.is_atom) {
            cuts.push_back(one_based(node.cutset));
        }
    }
    emit(opts, {{"ok", true}, {"atoms", atoms}, {"cutsets", cuts}}, plain.str());
    return 0;
}

int cmd_minor(const GlobalOpts& opts, const std::string& gfile, const std::string& hfile,
              int scan_max) {
    GraphDocument gdoc = load_document(gfile);
    MinorSearchOptions mo;
    mo.budget = opts.budget > 0 ? opts.budget : mo.budget;
    std::optional<InducedMinorModel> model;
    int level = 0;
    if (!hfile.empty()) {
        GraphDocument hdoc = load_document(hfile);
        model = find_induced_minor(gdoc.graph, hdoc.graph, mo);
    } else {
        ObstructionScan scan = g2_forbidden_minor_scan(gdoc.graph, scan_max, mo);
        if (scan.found) {
            model = scan.model;
            level = scan.level;
        }
    }
    if (!model) {
        emit(opts, {{"ok", false}}, "no model");
        return 1;
    }
    json sets = json::array();
    std::ostringstream plain;
    plain << "model";
    if (level > 0) plain << " level " << level;
    for (std::size_t i = 0; i < model->branch_sets.size(); ++i) {
        std::vector<int> s = one_based(model->branch_sets[i]);
        sets.push_back(s);
        plain << "\nbranch " << i + 1 << ": " << join(s);
    }
    json out = {{"ok", true}, {"model", sets}};
    if (level > 0) out["level"] = level;
    emit(opts, out, plain.str());
    return 0;
}

const char* kind_name(AtomClass::Kind kind) {
    switch (kind) {
        case AtomClass::Kind::Complete:
            return "complete";
        case AtomClass::Kind::Cycle:
            return "cycle";
        case AtomClass::Kind::CompletePrism:
            return "prism";
        case AtomClass::Kind::Other:
            return "other";
    }
    return "other";
}

int cmd_recognize(const GlobalOpts& opts, const std::string& file) {
    GraphDocument doc = load_document(file);
    Recognition rec = recognize_dfg2(doc.graph);
    json atoms = json::array();
    std::ostringstream plain;
    plain << (rec.accepted ? "accepted" : "rejected");
    if (!rec.diamond_free) plain << "\nnot diamond-free";
    for (std::size_t i = 0; i < rec.atom_classes.size(); ++i) {
        const AtomClass& cls = rec.atom_classes[i];
        std::vector<int> span = one_based(rec.tree.nodes[rec.atom_nodes[i]].vertices);
        atoms.push_back({{"kind", kind_name(cls.kind)}, {"param", cls.param}, {"vertices", span}});
        plain << "\natom " << kind_name(cls.kind) << "(" << cls.param << "): " << join(span);
    }
    emit(opts, {{"ok", rec.accepted}, {"diamond_free", rec.diamond_free}, {"atoms", atoms}},
         plain.str());
    return rec.accepted ? 0 : 1;
}

int solve_exit(const GlobalOpts& opts, const SolveResult& res) {
    std::vector<int> cert = one_based(res.vertices);
    emit(opts, {{"ok", true}, {"value", res.value}, {"certificate", cert}},
         "value " + std::to_string(res.value) + "\ncertificate " + join(cert));
    return 0;
}

int color_exit(const GlobalOpts& opts, const Coloring& coloring) {
    json out = {{"ok", true}, {"value", coloring.colors}, {"coloring", coloring.assignment}};
    std::ostringstream plain;
    plain << "colors " << coloring.colors << "\ncoloring " << join(coloring.assignment);
    emit(opts, out, plain.str());
    return 0;
}

Coloring guarded_chromatic(const Graph& g) {
    if (g.vertex_count() > kExactColoringGuard) {
        throw budget_exhausted_error("graph exceeds the exact coloring guard");
    }
    return chromatic_number(g);
}

int cmd_solve(const GlobalOpts& opts, const std::string& problem, const std::string& file,
              const std::string& method) {
    GraphDocument doc = load_document(file);
    const Graph& g = doc.graph;
    const VertexWeights& w = doc.weights;
    if (problem != "mwc" && problem != "mwss" && problem != "color") {
        throw std::invalid_argument("unknown problem '" + problem + "'");
    }
    if (method == "g2" && problem != "mwc") {
        throw std::invalid_argument("--method g2 only solves mwc");
    }

    if (problem == "color") {
        if (method == "dfg2") {
            return color_exit(opts, solve_dfg2(g, w, Dfg2Problem::color).coloring);
        }
        if (method == "brute") return color_exit(opts, guarded_chromatic(g));
        // auto: decomposition solver when recognized, exact search otherwise
        if (recognize_dfg2(g).accepted) {
            return color_exit(opts, solve_dfg2(g, w, Dfg2Problem::color).coloring);
        }
        return color_exit(opts, guarded_chromatic(g));
    }

    Dfg2Problem dp = problem == "mwc" ? Dfg2Problem::mwc : Dfg2Problem::mwss;
    if (method == "dfg2") return solve_exit(opts, solve_dfg2(g, w, dp).best);
    if (method == "brute") {
        return solve_exit(opts, problem == "mwc" ? mwc_bruteforce(g, w) : mwss_bruteforce(g, w));
    }
    if (method == "g2") {
        SolveOptions so;
        so.strict = opts.strict;
        so.threads = opts.threads;
        return solve_exit(opts, mwc_g2(g, w, so));
    }
    // auto
    if (recognize_dfg2(g).accepted) return solve_exit(opts, solve_dfg2(g, w, dp).best);
    if (problem == "mwc") {
        try {
            SolveOptions so;
            so.strict = true;
            so.threads = opts.threads;
            return solve_exit(opts, mwc_g2(g, w, so));
        } catch (const strict_mode_error&) {
            return solve_exit(opts, mwc_bruteforce(g, w));
        }
    }
    return solve_exit(opts, mwss_gk_smallscale(g, w, 2));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph separators, class membership, and exact solvers"};
    app.require_subcommand(1);
    GlobalOpts opts;
    app.add_flag("--json", opts.json, "structured JSON output");
    app.add_option("--seed", opts.seed, "generator seed");
    app.add_option("--budget", opts.budget, "separator / search budget");
    app.add_flag("--strict", opts.strict, "verify solver preconditions");
    app.add_option("--threads", opts.threads, "worker threads (default 1, deterministic)");

    auto* gen = app.add_subcommand("gen", "write a generated graph to stdout");
    std::string family;
    std::vector<std::string> gen_args;
    int short_prism = 0;
    int tries = 1000;
    gen->add_option("family", family, "graph family")->required();
    gen->add_option("params", gen_args, "family parameters");
    gen->add_option("--short", short_prism, "short prism clique size");
    gen->add_option("--tries", tries, "rejection sampling attempts");

    auto* membership = app.add_subcommand("membership", "test the separator clique-cover class");
    std::string member_file;
    int member_k = 2;
    membership->add_option("file", member_file, "input graph ('-' = stdin)")->required();
    membership->add_option("-k", member_k, "class level");

    auto* separators = app.add_subcommand("separators", "enumerate minimal separators");
    std::string sep_file;
    std::vector<int> sep_pair;
    separators->add_option("file", sep_file, "input graph ('-' = stdin)")->required();
    separators->add_option("--pair", sep_pair, "restrict to a vertex pair (1-based)")
        ->expected(2);

    auto* lexbfs_cmd = app.add_subcommand("lexbfs", "lexicographic BFS order");
    std::string lex_file;
    int lex_start = 1;
    int lex_k = -1;
    lexbfs_cmd->add_option("file", lex_file, "input graph ('-' = stdin)")->required();
    lexbfs_cmd->add_option("--start", lex_start, "start vertex (1-based)");
    lexbfs_cmd->add_option("-k", lex_k, "verify a k-clique simplicial elimination ordering");

    auto* decompose_cmd = app.add_subcommand("decompose", "clique-cutset decomposition");
    std::string dec_file;
    decompose_cmd->add_option("file", dec_file, "input graph ('-' = stdin)")->required();

    auto* minor = app.add_subcommand("minor", "induced minor search");
    std::string minor_g;
    std::string minor_h;
    int scan_max = 3;
    minor->add_option("graph", minor_g, "host graph ('-' = stdin)")->required();
    minor->add_option("pattern", minor_h, "pattern graph; omit to scan obstructions");
    minor->add_option("--scan", scan_max, "max obstruction level for the scan");

    auto* recognize = app.add_subcommand("recognize", "diamond-free class recognition");
    std::string rec_type;
    std::string rec_file;
    recognize->add_option("type", rec_type, "recognition type (dfg2)")->required();
    recognize->add_option("file", rec_file, "input graph ('-' = stdin)")->required();

    auto* solve = app.add_subcommand("solve", "exact optimization");
    std::string solve_problem;
    std::string solve_file;
    std::string solve_method = "auto";
    solve->add_option("problem", solve_problem, "mwc | mwss | color")->required();
    solve->add_option("file", solve_file, "input graph ('-' = stdin)")->required();
    solve->add_option("--method", solve_method, "auto | g2 | dfg2 | brute")
        ->check(CLI::IsMember({"auto", "g2", "dfg2", "brute"}));

    // Let global options (--json, --seed, ...) appear after the subcommand.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(opts, family, gen_args, short_prism, tries);
        if (membership->parsed()) return cmd_membership(opts, member_file, member_k);
        if (separators->parsed()) return cmd_separators(opts, sep_file, sep_pair);
        if (lexbfs_cmd->parsed()) return cmd_lexbfs(opts, lex_file, lex_start, lex_k);
        if (decompose_cmd->parsed()) return cmd_decompose(opts, dec_file);
        if (minor->parsed()) return cmd_minor(opts, minor_g, minor_h, scan_max);
        if (recognize->parsed()) {
            if (rec_type != "dfg2") throw std::invalid_argument("unknown recognition type");
            return cmd_recognize(opts, rec_file);
        }
        if (solve->parsed()) return cmd_solve(opts, solve_problem, solve_file, solve_method);
    } catch (const budget_exhausted_error& e) {
        if (opts.json) {
            std::cout << json({{"ok", false}, {"indeterminate", true}, {"error", e.what()}}).dump()
                      << "\n";
        } else {
            std::cerr << "budget exhausted: " << e.what() << "\n";
        }
        return 3;
    } catch (const strict_mode_error& e) {
        if (opts.json) {
            std::cout << json({{"ok", false}, {"error", e.what()}}).dump() << "\n";
        } else {
            std::cerr << e.what() << "\n";
        }
        return 1;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
