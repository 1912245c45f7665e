#include <vector>

#include "doctest.h"
#include "morsegraph/generators.hpp"
#include "morsegraph/graph.hpp"
#include "test_support.hpp"

using namespace morsegraph;
using testsupport::disjoint_union;
using testsupport::subset_census;

TEST_CASE("build_graph basics") {
    Graph triangle = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(triangle.order() == 3);
    CHECK(triangle.size() == 3);
    CHECK(triangle.has_edge(0, 2));

    Graph isolated = Graph::build(2, {});
    CHECK(isolated.order() == 2);
    CHECK(isolated.size() == 0);

    Graph octa = octahedron();
    CHECK(octa.order() == 6);
    CHECK(octa.size() == 12);
}

TEST_CASE("build_graph rejects bad edges") {
    CHECK_THROWS_WITH_AS(Graph::build(3, {{0, 3}}), doctest::Contains("(0,3)"), GraphError);
    CHECK_THROWS_WITH_AS(Graph::build(3, {{1, 1}}), doctest::Contains("(1,1)"), GraphError);
}

TEST_CASE("duplicate edges collapse") {
    Graph g = Graph::build(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.size() == 1);
}

TEST_CASE("induced subgraph") {
    Graph k4 = complete_graph(4);
    auto sub = induced_subgraph(k4, std::vector<VertexId>{0, 1, 2});
    CHECK(sub.graph == complete_graph(3));
    CHECK(sub.vertex_map == std::vector<VertexId>{0, 1, 2});

    auto empty = induced_subgraph(k4, std::vector<VertexId>{});
    CHECK(empty.graph.order() == 0);

    // C_5 on {0,1,3}: just the edge (0,1) and an isolated vertex
    auto c5sub = induced_subgraph(cycle_graph(5), std::vector<VertexId>{0, 1, 3});
    CHECK(c5sub.graph.order() == 3);
    CHECK(c5sub.graph.size() == 1);
    CHECK(c5sub.graph.has_edge(0, 1));
    CHECK(c5sub.graph.degree(2) == 0);

    CHECK_THROWS_AS(induced_subgraph(k4, std::vector<VertexId>{7}), GraphError);
}

TEST_CASE("induced subgraph on the full vertex set is the identity") {
    Graph g = erdos_renyi(9, 0.4, 5);
    std::vector<VertexId> all(9);
    for (int v = 0; v < 9; ++v) all[static_cast<std::size_t>(v)] = v;
    CHECK(induced_subgraph(g, all).graph == g);
}

TEST_CASE("unit spheres") {
    Graph octa = octahedron();
    for (VertexId v = 0; v < octa.order(); ++v) {
        auto sphere = unit_sphere(octa, v).graph;
        CHECK(sphere.order() == 4);
        CHECK(sphere.size() == 4);  // the 4-cycle
        for (VertexId w = 0; w < 4; ++w) CHECK(sphere.degree(w) == 2);
    }

    Graph k5 = complete_graph(5);
    CHECK(unit_sphere(k5, 2).graph == complete_graph(4));

    Graph torus = triangulated_torus(5, 5);
    for (VertexId v = 0; v < torus.order(); ++v) {
        auto sphere = unit_sphere(torus, v).graph;
        CHECK(sphere.order() == 6);
        CHECK(sphere.size() == 6);
        CHECK(connected_components(sphere).size() == 1);
    }
}

TEST_CASE("sphere order equals degree") {
    Graph g = erdos_renyi(12, 0.35, 9);
    for (VertexId v = 0; v < g.order(); ++v) {
        CHECK(unit_sphere(g, v).graph.order() == g.degree(v));
    }
}

TEST_CASE("clique census worked values") {
    CHECK(clique_census(complete_graph(3)).counts == std::vector<long long>{3, 3, 1});
    CHECK(clique_census(octahedron()).counts == std::vector<long long>{6, 12, 8});
    CHECK(clique_census(cycle_graph(5)).counts == std::vector<long long>{5, 5});
    CHECK(clique_census(Graph{}).counts.empty());
}

TEST_CASE("census matches the subset oracle") {
    auto check = [](const Graph& g) {
        CAPTURE(g.order());
        CHECK(clique_census(g) == subset_census(g));
    };
    check(complete_graph(7));
    check(octahedron());
    check(cycle_graph(8));
    check(wheel_graph(7));
    check(star_graph(8));
    for (std::uint64_t s = 0; s < 12; ++s) check(erdos_renyi(8, 0.5, s));
    for (std::uint64_t s = 0; s < 6; ++s) check(erdos_renyi(7, 0.8, 100 + s));
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(complete_graph(3)) == 1);
    CHECK(euler_characteristic(octahedron()) == 2);
    CHECK(euler_characteristic(triangulated_torus(4, 4)) == 0);
    CHECK(euler_characteristic(triangulated_torus(5, 5)) == 0);
    CHECK(euler_characteristic(Graph{}) == 0);
    for (int n = 1; n <= 8; ++n) CHECK(euler_characteristic(complete_graph(n)) == 1);
}

TEST_CASE("chi is additive over disjoint unions") {
    Graph a = erdos_renyi(7, 0.5, 3);
    Graph b = cycle_graph(6);
    Graph c = complete_graph(4);
    CHECK(euler_characteristic(disjoint_union(a, b)) ==
          euler_characteristic(a) + euler_characteristic(b));
    CHECK(euler_characteristic(disjoint_union(disjoint_union(a, b), c)) ==
          euler_characteristic(a) + euler_characteristic(b) + euler_characteristic(c));
}

TEST_CASE("connected components") {
    CHECK(connected_components(edgeless_graph(2)).size() == 2);
    CHECK(connected_components(cycle_graph(6)).size() == 1);
    auto parts = connected_components(disjoint_union(complete_graph(3), complete_graph(2)));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::vector<VertexId>{0, 1, 2});
    CHECK(parts[1] == std::vector<VertexId>{3, 4});
}

TEST_CASE("budgeted census") {
    Graph g = complete_graph(8);
    CHECK(clique_census_budgeted(g, 10) == std::nullopt);
    auto full = clique_census_budgeted(g, 1'000'000);
    REQUIRE(full.has_value());
    CHECK(*full == clique_census(g));
}

TEST_CASE("graph certificates distinguish labeled graphs") {
    CHECK(graph_certificate(cycle_graph(5)) == graph_certificate(cycle_graph(5)));
    CHECK(graph_certificate(cycle_graph(5)) != graph_certificate(path_graph(5)));
    CHECK(graph_certificate(edgeless_graph(3)) != graph_certificate(edgeless_graph(4)));
}
