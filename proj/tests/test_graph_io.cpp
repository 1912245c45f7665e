#include <sstream>

#include "doctest.h"
#include "morsegraph/generators.hpp"
#include "morsegraph/graph_io.hpp"
#include "morsegraph/morse_io.hpp"

using namespace morsegraph;

TEST_CASE("parse a simple graph file") {
    const std::string text =
        "c a triangle\n"
        "p edge 3 3\n"
        "e 1 2\n"
        "e 2 3\n"
        "e 1 3\n";
    Graph g = parse_graph(text);
    CHECK(g.order() == 3);
    CHECK(g.size() == 3);
    CHECK(g.has_edge(0, 1));  // ids shift to 0-based internally
    CHECK(g.has_edge(0, 2));
}

TEST_CASE("emit is canonical and round-trips byte for byte") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = erdos_renyi(11, 0.4, seed);
        std::string once = graph_to_string(g);
        std::string twice = graph_to_string(parse_graph(once));
        CHECK(once == twice);
    }
    CHECK(graph_to_string(edgeless_graph(2)) == "p edge 2 0\n");
    CHECK(graph_to_string(path_graph(3)) == "p edge 3 2\ne 1 2\ne 2 3\n");
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_error = [](const std::string& text, int line) {
        try {
            parse_graph(text);
            FAIL("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_error("e 1 2\n", 1);                           // edge before header
    expect_error("p edge 2 1\np edge 2 1\n", 2);          // duplicate header
    expect_error("p edge 2 1\ne 1 5\n", 2);               // id out of range
    expect_error("p edge 2 1\ne 1 1\n", 2);               // self-loop
    expect_error("c ok\nq 1 2\n", 2);                     // unknown line type
    expect_error("p edge x 1\n", 1);                      // malformed count
    expect_error("p edge 2 1\ne 1\n", 2);                 // short edge line
}

TEST_CASE("comments are emitted before the header") {
    std::ostringstream oss;
    std::vector<std::string> notes{"family=cycle n=3"};
    emit_graph(oss, cycle_graph(3), notes);
    CHECK(oss.str() ==
          "c family=cycle n=3\n"
          "p edge 3 3\n"
          "e 1 2\n"
          "e 1 3\n"
          "e 2 3\n");
}

TEST_CASE("morse value files parse exactly") {
    std::istringstream in(
        "c values\n"
        "f 1 0.50\n"
        "f 2 0.5\n"
        "f 3 -2\n");
    auto values = parse_morse_values(in, 3);
    CHECK(values[0] == values[1]);  // 0.50 and 0.5 are the same rational
    CHECK(values[2] == Rational(-2));
}

TEST_CASE("morse file errors") {
    std::istringstream missing("f 1 1\n");
    CHECK_THROWS_AS(parse_morse_values(missing, 2), MorseError);

    std::istringstream dup("f 1 1\nf 1 2\n");
    CHECK_THROWS_AS(parse_morse_values(dup, 2), ParseError);

    std::istringstream bad_id("f 9 1\n");
    CHECK_THROWS_AS(parse_morse_values(bad_id, 2), ParseError);

    std::istringstream bad_value("f 1 abc\nf 2 1\n");
    CHECK_THROWS_AS(parse_morse_values(bad_value, 2), ParseError);
}

TEST_CASE("morse emission uses ranks and 1-based ids") {
    auto f = MorseFunction::from_vertex_order(std::vector<VertexId>{2, 0, 1});
    std::ostringstream oss;
    emit_morse(oss, f);
    CHECK(oss.str() == "f 1 1\nf 2 2\nf 3 0\n");
}

TEST_CASE("rational decimal parsing") {
    CHECK(rational_from_decimal("3.25") == Rational(13, 4));
    CHECK(rational_from_decimal("-0.1") == Rational(-1, 10));
    CHECK(rational_from_decimal("1e-3") == Rational(1, 1000));
    CHECK(rational_from_decimal("2.5E2") == Rational(250));
    CHECK_THROWS_AS(rational_from_decimal("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_decimal("e3"), std::invalid_argument);
}

TEST_CASE("index CSV shape") {
    Graph p3 = path_graph(3);
    std::vector<Rational> values{Rational(1), Rational(3), Rational(2)};
    auto report = index_report(p3, morse_from_values(p3, values));
    std::ostringstream oss;
    emit_index_csv(oss, report);
    CHECK(oss.str() ==
          "vertex,index,critical,j_times_2\n"
          "1,1,1,1\n"
          "2,-1,1,0\n"
          "3,1,1,1\n");
}
