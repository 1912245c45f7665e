#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "morsegraph/graph_io.hpp"
#include "morsegraph/morse.hpp"
#include "morsegraph/rational.hpp"

namespace morsegraph {

// Morse value file: "c ..." comments and "f <vertex-id> <value>" lines with
// 1-based ids matching the graph file. Every vertex must get exactly one
// value; values may be integers or decimals and are parsed exactly.
std::vector<Rational> parse_morse_values(std::istream& in, VertexId order);
std::vector<Rational> load_morse_file(const std::string& path, VertexId order);

// Emits a rank-canonical function as integer values.
void emit_morse(std::ostream& out, const MorseFunction& f,
                std::span<const std::string> comments = {});
void save_morse_file(const std::string& path, const MorseFunction& f,
                     std::span<const std::string> comments = {});

// "vertex,index,critical,j_times_2" with 1-based vertex ids.
void emit_index_csv(std::ostream& out, const IndexReport& report);

}  // namespace morsegraph
