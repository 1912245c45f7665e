#include "morsegraph/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace morsegraph {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) fields.push_back(tok);
    return fields;
}

long parse_long(const std::string& tok, int line_no, const char* what) {
    try {
        std::size_t pos = 0;
        long value = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("expected integer ") + what + ", got \"" + tok + "\"");
    }
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long order = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto fields = split_ws(line);
        if (fields.empty()) continue;
        if (fields[0] == "c") continue;
        if (fields[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate \"p\" line");
            if (fields.size() != 4 || fields[1] != "edge") {
                throw ParseError(line_no, "expected \"p edge <n> <m>\"");
            }
            order = parse_long(fields[2], line_no, "<n>");
            parse_long(fields[3], line_no, "<m>");
            if (order < 0) throw ParseError(line_no, "negative vertex count");
            have_header = true;
        } else if (fields[0] == "e") {
            if (!have_header) throw ParseError(line_no, "\"e\" line before \"p edge\" header");
            if (fields.size() != 3) throw ParseError(line_no, "expected \"e <u> <v>\"");
            long u = parse_long(fields[1], line_no, "<u>");
            long v = parse_long(fields[2], line_no, "<v>");
            if (u < 1 || u > order || v < 1 || v > order) {
                throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(order));
            }
            if (u == v) throw ParseError(line_no, "self-loop rejected");
            edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
        } else {
            throw ParseError(line_no, "unknown line type \"" + fields[0] + "\"");
        }
    }
    if (!have_header) throw ParseError(line_no, "missing \"p edge\" header");
    return Graph::build(static_cast<VertexId>(order), edges);
}

Graph parse_graph(const std::string& text) {
    std::istringstream iss(text);
    return parse_graph(iss);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_graph(in);
}

void emit_graph(std::ostream& out, const Graph& g, std::span<const std::string> comments) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p edge " << g.order() << " " << g.size() << "\n";
    for (const auto& [u, v] : g.edge_list()) {
        out << "e " << u + 1 << " " << v + 1 << "\n";
    }
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream oss;
    emit_graph(oss, g);
    return oss.str();
}

void save_graph_file(const std::string& path, const Graph& g,
                     std::span<const std::string> comments) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    emit_graph(out, g, comments);
}

}  // namespace morsegraph
