#include "morsegraph/morse_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace morsegraph {

std::vector<Rational> parse_morse_values(std::istream& in, VertexId order) {
    std::vector<Rational> values(static_cast<std::size_t>(order));
    std::vector<bool> assigned(static_cast<std::size_t>(order), false);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream iss(line);
        std::string tag;
        if (!(iss >> tag)) continue;
        if (tag == "c") continue;
        if (tag != "f") throw ParseError(line_no, "unknown line type \"" + tag + "\"");
        long id;
        std::string value_text;
        if (!(iss >> id >> value_text)) throw ParseError(line_no, "expected \"f <vertex-id> <value>\"");
        std::string extra;
        if (iss >> extra) throw ParseError(line_no, "trailing token \"" + extra + "\"");
        if (id < 1 || id > order) {
            throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(order));
        }
        if (assigned[static_cast<std::size_t>(id - 1)]) {
            throw ParseError(line_no, "duplicate value for vertex " + std::to_string(id));
        }
        try {
            values[static_cast<std::size_t>(id - 1)] = rational_from_decimal(value_text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        assigned[static_cast<std::size_t>(id - 1)] = true;
    }
    for (VertexId v = 0; v < order; ++v) {
        if (!assigned[static_cast<std::size_t>(v)]) {
            throw MorseError("missing value for vertex " + std::to_string(v + 1));
        }
    }
    return values;
}

std::vector<Rational> load_morse_file(const std::string& path, VertexId order) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open morse file: " + path);
    return parse_morse_values(in, order);
}

void emit_morse(std::ostream& out, const MorseFunction& f,
                std::span<const std::string> comments) {
    for (const auto& c : comments) out << "c " << c << "\n";
    for (VertexId v = 0; v < f.size(); ++v) {
        out << "f " << v + 1 << " " << f.rank(v) << "\n";
    }
}

void save_morse_file(const std::string& path, const MorseFunction& f,
                     std::span<const std::string> comments) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write morse file: " + path);
    emit_morse(out, f, comments);
}

void emit_index_csv(std::ostream& out, const IndexReport& report) {
    out << "vertex,index,critical,j_times_2\n";
    for (std::size_t v = 0; v < report.index.size(); ++v) {
        out << v + 1 << "," << report.index[v] << "," << (report.critical[v] ? 1 : 0)
            << "," << report.j_times_2[v] << "\n";
    }
}

}  // namespace morsegraph
