#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

#include "morsegraph/graph.hpp"

namespace morsegraph {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
          line(line_no) {}
};

// DIMACS-flavored graph text: "c ..." comments, one "p edge <n> <m>" header
// (first non-comment line), then "e <u> <v>" with 1-based ids.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph load_graph_file(const std::string& path);

// Canonical emission: header, then edges ascending with u < v, 1-based.
// Comment lines, if any, go first. emit ∘ parse is the identity on canonical
// output, byte for byte.
void emit_graph(std::ostream& out, const Graph& g, std::span<const std::string> comments = {});
std::string graph_to_string(const Graph& g);
void save_graph_file(const std::string& path, const Graph& g,
                     std::span<const std::string> comments = {});

}  // namespace morsegraph
