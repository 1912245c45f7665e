#include "morsegraph/curvature.hpp"

#include <ostream>

namespace morsegraph {

Rational local_curvature(const Graph& g, VertexId v) {
    auto sphere_census = clique_census(unit_sphere(g, v).graph);
    Rational k(1);  // the V_{-1} term
    int sign = -1;
    for (std::size_t j = 0; j < sphere_census.counts.size(); ++j) {
        k += Rational(sign * sphere_census.counts[j], static_cast<long long>(j) + 2);
        sign = -sign;
    }
    return k;
}

CurvatureReport gauss_bonnet_report(const Graph& g) {
    CurvatureReport report;
    report.curvature.reserve(static_cast<std::size_t>(g.order()));
    report.total = 0;
    for (VertexId v = 0; v < g.order(); ++v) {
        report.curvature.push_back(local_curvature(g, v));
        report.total += report.curvature.back();
    }
    return report;
}

void emit_curvature_csv(std::ostream& out, const CurvatureReport& report) {
    out << "vertex,curvature_num,curvature_den\n";
    for (std::size_t v = 0; v < report.curvature.size(); ++v) {
        out << v + 1 << "," << numerator(report.curvature[v]).str() << ","
            << denominator(report.curvature[v]).str() << "\n";
    }
}

}  // namespace morsegraph
