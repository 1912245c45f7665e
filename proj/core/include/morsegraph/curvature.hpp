#pragma once

#include <iosfwd>
#include <vector>

#include "morsegraph/graph.hpp"
#include "morsegraph/rational.hpp"

namespace morsegraph {

// K(v) = sum_{k>=0} (-1)^k V_{k-1}(v)/(k+1), with V_{-1}(v) = 1 and V_k(v)
// the number of K_{k+1} subgraphs of the unit sphere S(v). An isolated
// vertex has curvature 1. Exact rationals throughout; the vertex sum equals
// the clique-census Euler characteristic with zero tolerance.
Rational local_curvature(const Graph& g, VertexId v);

struct CurvatureReport {
    std::vector<Rational> curvature;
    Rational total;
};

CurvatureReport gauss_bonnet_report(const Graph& g);

// "vertex,curvature_num,curvature_den" with 1-based vertex ids.
void emit_curvature_csv(std::ostream& out, const CurvatureReport& report);

}  // namespace morsegraph
