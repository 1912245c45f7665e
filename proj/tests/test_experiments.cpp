#include "doctest.h"
#include "morsegraph/experiments.hpp"
#include "morsegraph/generators.hpp"

using namespace morsegraph;

TEST_CASE("mc-critical is deterministic and logs every trial") {
    auto a = mc_critical(8, 0.5, 50, 123);
    auto b = mc_critical(8, 0.5, 50, 123);
    CHECK(a.total_critical == b.total_critical);
    CHECK(a.log.size() == 50);
    CHECK(a.critical_fraction == Rational(a.total_critical, a.total_vertices));
}

TEST_CASE("mc-critical on K_2 is exactly one half") {
    // p=1 forces K_2; the minimum is critical, the maximum is not
    auto r = mc_critical(2, 1.0, 64, 7);
    CHECK(r.critical_fraction == Rational(1, 2));
}

TEST_CASE("mc-critical with p=0 makes every vertex critical") {
    auto r = mc_critical(5, 0.0, 32, 3);
    CHECK(r.critical_fraction == Rational(1));
}

TEST_CASE("critical fraction stays near one half across orders") {
    for (int n : {6, 10, 14}) {
        auto r = mc_critical(n, 0.5, 2000, 11);
        double fraction = static_cast<double>(r.total_critical) /
                          static_cast<double>(r.total_vertices);
        CAPTURE(n);
        CHECK(fraction > 0.40);
        CHECK(fraction < 0.60);
    }
}

TEST_CASE("verification sweep") {
    auto icosa = verify_poincare_hopf(icosahedron(), 50, 9);
    CHECK(icosa.all_ok());
    CHECK(icosa.passed == 50);
    CHECK(icosa.chi == 2);

    for (std::uint64_t s = 0; s < 5; ++s) {
        auto er = verify_poincare_hopf(erdos_renyi(12, 0.5, 800 + s), 20, s);
        CHECK(er.all_ok());
    }

    auto edgeless = verify_poincare_hopf(edgeless_graph(5), 5, 2);
    CHECK(edgeless.all_ok());
    CHECK(edgeless.chi == 5);
}

TEST_CASE("edgeless graphs make every vertex a critical minimum") {
    Graph g = edgeless_graph(5);
    auto report = index_report(g, MorseFunction::random(5, 4));
    CHECK(report.index == std::vector<long long>{1, 1, 1, 1, 1});
    CHECK(report.critical_count() == 5);
}
