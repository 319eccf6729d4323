#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "gsep/graph.hpp"

namespace gsep {

// Graph plus per-vertex weights and an optional label, as read from or
// written to the text format:
//   c <comment>            (dropped on parse; "c name <label>" sets name)
//   p edge <n> <m>         (exactly once, before weight or edge lines)
//   n <v> <w>              (1-based vertex, nonnegative weight; default 1)
//   e <u> <v>              (1-based endpoints, u != v, each pair once)
struct GraphDocument {
    Graph graph;
    VertexWeights weights;
    std::optional<std::string> name;
};

// Parse failure with 1-based location; what() includes the position.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Hard errors (with location) on malformed syntax, duplicate edges, loops,
// out-of-range indices, negative or duplicate weights, and edge-count
// mismatches against the p line.
GraphDocument parse_graph(const std::string& text);

// Canonical form: the name comment first, the p line, weight lines for
// weights other than 1 in ascending vertex order, then edges sorted with
// the smaller endpoint first. parse(serialize(d)) reproduces d exactly.
std::string serialize_graph(const GraphDocument& doc);

}  // namespace gsep
