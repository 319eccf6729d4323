#include "gsep/dimacs.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace gsep {
namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
};

// One physical line without its terminator; returns false at end of input.
bool next_line(Cursor& cur, std::string& out, int& line_no) {
    if (cur.pos >= cur.text.size()) return false;
    line_no = cur.line;
    std::size_t end = cur.text.find('\n', cur.pos);
    if (end == std::string::npos) end = cur.text.size();
    out.assign(cur.text, cur.pos, end - cur.pos);
    if (!out.empty() && out.back() == '\r') out.pop_back();
    cur.pos = end < cur.text.size() ? end + 1 : end;
    cur.line += 1;
    return true;
}

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

std::vector<Token> split_tokens(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

long long parse_number(const Token& tok, int line_no, const char* what) {
    long long value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw parse_error(line_no, tok.column, std::string("expected ") + what);
    }
    return value;
}

}  // namespace

GraphDocument parse_graph(const std::string& text) {
    Cursor cur{text};
    std::string line;
    int line_no = 0;

    bool have_p = false;
    int n = 0;
    long long declared_m = 0;
    std::optional<std::string> name;
    std::vector<std::pair<int, int>> edges;
    std::vector<VertexSet> seen;
    VertexWeights weights;
    std::vector<char> weight_given;

    auto vertex_index = [&](const Token& tok, int at_line) {
        long long v = parse_number(tok, at_line, "a vertex index");
        if (v < 1 || v > n) throw parse_error(at_line, tok.column, "vertex index out of range");
        return static_cast<int>(v - 1);
    };

    while (next_line(cur, line, line_no)) {
        std::vector<Token> toks = split_tokens(line);
        if (toks.empty()) continue;
        const std::string& kind = toks[0].text;
        if (kind == "c") {
            if (toks.size() >= 2 && toks[1].text == "name") {
                std::size_t at = line.find("name");
                std::size_t rest = at + 4;
                while (rest < line.size() && line[rest] == ' ') ++rest;
                name = line.substr(rest);
            }
            continue;
        }
        if (kind == "p") {
            if (have_p) throw parse_error(line_no, toks[0].column, "repeated p line");
            if (toks.size() != 4) {
                throw parse_error(line_no, toks[0].column, "expected: p edge <n> <m>");
            }
            if (toks[1].text != "edge") {
                throw parse_error(line_no, toks[1].column, "expected the literal 'edge'");
            }
            long long vn = parse_number(toks[2], line_no, "a vertex count");
            declared_m = parse_number(toks[3], line_no, "an edge count");
            if (vn < 0) throw parse_error(line_no, toks[2].column, "negative vertex count");
            if (declared_m < 0) throw parse_error(line_no, toks[3].column, "negative edge count");
            n = static_cast<int>(vn);
            weights.assign(n, 1);
            weight_given.assign(n, 0);
            seen.assign(n, VertexSet(n));
            have_p = true;
            continue;
        }
        if (!have_p) throw parse_error(line_no, toks[0].column, "p line must come first");
        if (kind == "n") {
            if (toks.size() != 3) throw parse_error(line_no, toks[0].column, "expected: n <v> <w>");
            int v = vertex_index(toks[1], line_no);
            long long w = parse_number(toks[2], line_no, "a weight");
            if (w < 0) throw parse_error(line_no, toks[2].column, "negative weight");
            if (weight_given[v]) throw parse_error(line_no, toks[1].column, "duplicate weight line");
            weight_given[v] = 1;
            weights[v] = w;
            continue;
        }
        if (kind == "e") {
            if (toks.size() != 3) throw parse_error(line_no, toks[0].column, "expected: e <u> <v>");
            int u = vertex_index(toks[1], line_no);
            int v = vertex_index(toks[2], line_no);
            if (u == v) throw parse_error(line_no, toks[1].column, "self-loop");
            if (seen[u].contains(v)) throw parse_error(line_no, toks[1].column, "duplicate edge");
            seen[u].add(v);
            seen[v].add(u);
            edges.emplace_back(std::min(u, v), std::max(u, v));
            continue;
        }
        throw parse_error(line_no, toks[0].column, "unknown line type '" + kind + "'");
    }
    if (!have_p) throw parse_error(cur.line, 1, "missing p line");
    if (static_cast<long long>(edges.size()) != declared_m) {
        throw parse_error(cur.line, 1, "edge count does not match the p line");
    }
    GraphDocument doc;
    doc.graph = Graph::from_edges(n, edges);
    doc.weights = std::move(weights);
    doc.name = std::move(name);
    return doc;
}

std::string serialize_graph(const GraphDocument& doc) {
    std::ostringstream out;
    if (doc.name) out << "c name " << *doc.name << "\n";
    int n = doc.graph.vertex_count();
    std::vector<std::pair<int, int>> edges = doc.graph.edges();
    std::sort(edges.begin(), edges.end());
    out << "p edge " << n << " " << edges.size() << "\n";
    for (int v = 0; v < n; ++v) {
        if (doc.weights[v] != 1) out << "n " << v + 1 << " " << doc.weights[v] << "\n";
    }
    for (const auto& [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

}  // namespace gsep
