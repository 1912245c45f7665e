#include <numeric>
#include <string>
#include <vector>

#include "doctest.h"
#include "morsegraph/generators.hpp"
#include "morsegraph/morse_spectrum.hpp"

using namespace morsegraph;

namespace {

MorseFunction identity_order(int n) {
    std::vector<VertexId> listing(static_cast<std::size_t>(n));
    std::iota(listing.begin(), listing.end(), 0);
    return MorseFunction::from_vertex_order(listing);
}

}  // namespace

TEST_CASE("critical counts") {
    // monotone around the cycle: one minimum, one maximum
    CHECK(critical_count(cycle_graph(6), identity_order(6)) == 2);

    for (int n = 3; n <= 6; ++n) {
        for (std::uint64_t s = 0; s < 4; ++s) {
            CHECK(critical_count(complete_graph(n), MorseFunction::random(n, s)) == 1);
        }
    }

    for (int n = 2; n <= 5; ++n) {
        CHECK(critical_count(edgeless_graph(n), MorseFunction::random(n, 1)) == n);
    }
}

TEST_CASE("m_exact on small families") {
    CHECK(m_exact(cycle_graph(5)).upper == 2);
    CHECK(m_exact(cycle_graph(5)).exact);
    CHECK(m_exact(complete_graph(5)).upper == 1);
    CHECK(m_exact(octahedron()).upper == 2);
    for (int n = 2; n <= 5; ++n) {
        auto r = m_exact(edgeless_graph(n));
        CHECK(r.upper == n);
        CHECK(r.exact);
    }

    // the witness achieves the bound
    auto r = m_exact(cycle_graph(6));
    CHECK(critical_count(cycle_graph(6), r.witness) == r.upper);
}

TEST_CASE("m_exact refuses big graphs") {
    CHECK_THROWS_WITH_AS(m_exact(icosahedron()), doctest::Contains("m_search"),
                         std::invalid_argument);
    // a raised cap lifts the refusal
    CHECK_NOTHROW(m_exact(cycle_graph(9), 9));
}

TEST_CASE("m_search certifies the icosahedron") {
    SearchParams params;
    params.seed = 1;
    auto r = m_search(icosahedron(), params);
    CHECK(r.lower == 2);  // chi = 2 != 1
    CHECK(r.upper == 2);
    CHECK(r.exact);
    CHECK(critical_count(icosahedron(), r.witness) == 2);
}

TEST_CASE("m_search finds the three-critical-point torus order") {
    SearchParams params;
    params.seed = 1;
    auto r = m_search(triangulated_torus(4, 4), params);
    CHECK(r.lower == 2);
    CHECK(r.upper == 3);
    CHECK_FALSE(r.exact);
    CHECK(critical_count(triangulated_torus(4, 4), r.witness) == 3);
}

TEST_CASE("m_search reaches the wheel hub order") {
    SearchParams params;
    params.seed = 2;
    auto r = m_search(wheel_graph(7), params);
    CHECK(r.upper == 1);  // hub minimum, rim ascending
    CHECK(r.exact);
}

TEST_CASE("m_search upper bound is monotone in the restart budget") {
    Graph g = triangulated_torus(4, 4);
    int previous = g.order() + 1;
    for (int restarts : {1, 5, 20, 60}) {
        SearchParams params;
        params.restarts = restarts;
        params.seed = 9;
        int upper = m_search(g, params).upper;
        CHECK(upper <= previous);
        previous = upper;
    }
}

TEST_CASE("every morse function has at least m critical points") {
    for (std::uint64_t s = 0; s < 6; ++s) {
        Graph g = erdos_renyi(7, 0.5, 50 + s);
        auto m = m_exact(g);
        for (std::uint64_t t = 0; t < 10; ++t) {
            CHECK(critical_count(g, MorseFunction::random(7, t)) >= m.upper);
        }
    }
}

TEST_CASE("graphs with an edge always have a critical vertex") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        Graph g = erdos_renyi(9, 0.3, 70 + s);
        if (g.size() == 0) continue;
        for (std::uint64_t t = 0; t < 5; ++t) {
            CHECK(critical_count(g, MorseFunction::random(9, t)) >= 1);
        }
    }
}

TEST_CASE("chi away from 1 forces two critical points") {
    for (const Graph& g : {cycle_graph(7), octahedron(), edgeless_graph(4)}) {
        REQUIRE(euler_characteristic(g) != 1);
        for (std::uint64_t t = 0; t < 8; ++t) {
            CHECK(critical_count(g, MorseFunction::random(g.order(), t)) >= 2);
        }
    }
}

TEST_CASE("sphere type verdicts") {
    CHECK(is_sphere_type(Graph{}).verdict == SphereVerdict::Yes);
    CHECK(is_sphere_type(edgeless_graph(2)).verdict == SphereVerdict::Yes);
    CHECK(is_sphere_type(octahedron()).verdict == SphereVerdict::Yes);
    CHECK(is_sphere_type(cycle_graph(4)).verdict == SphereVerdict::Yes);
    for (int n = 5; n <= 8; ++n) {
        CHECK(is_sphere_type(cycle_graph(n)).verdict == SphereVerdict::Yes);
    }
    CHECK(is_sphere_type(complete_graph(3)).verdict == SphereVerdict::No);
    CHECK(is_sphere_type(edgeless_graph(3)).verdict == SphereVerdict::No);
    CHECK(is_sphere_type(path_graph(5)).verdict == SphereVerdict::No);

    SphereTypeParams params;
    params.search.seed = 1;
    CHECK(is_sphere_type(icosahedron(), params).verdict == SphereVerdict::Yes);
}

TEST_CASE("sphere type is unknown when m cannot be certified") {
    // the best known order on the torus has 3 critical points, so m = 2 can
    // be neither witnessed nor refuted within budget
    SphereTypeParams params;
    params.search.seed = 1;
    auto verdict = is_sphere_type(triangulated_torus(4, 4), params);
    CHECK(verdict.verdict == SphereVerdict::Unknown);
    bool explained = false;
    for (const auto& line : verdict.trace) {
        if (line.find("not certified") != std::string::npos) explained = true;
    }
    CHECK(explained);
}

TEST_CASE("sphere type traces explain the verdict") {
    auto no = is_sphere_type(complete_graph(3));
    REQUIRE_FALSE(no.trace.empty());
    bool mentions_m = false;
    for (const auto& line : no.trace) {
        if (line.find("m=1") != std::string::npos) mentions_m = true;
    }
    CHECK(mentions_m);

    auto yes = is_sphere_type(octahedron());
    REQUIRE_FALSE(yes.trace.empty());
    CHECK(yes.trace.back().find("Yes") != std::string::npos);
}
