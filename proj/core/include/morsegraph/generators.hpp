#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "morsegraph/graph.hpp"

namespace morsegraph {

struct GeneratorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One named family instance. Integer parameters in `params`; `p` and `seed`
// only matter for the random families.
struct FamilySpec {
    std::string family;
    std::vector<long long> params;
    double p = 0.0;
    std::uint64_t seed = 0;

    std::string param_string() const;
};

// Families: complete(n>=1), cycle(n>=3), path(n>=1), star(n>=2),
// wheel(n>=4: hub 0 + rim cycle), edgeless(n>=1), tree(n, seed),
// octahedron, icosahedron, cross_polytope(d>=1), triangulated_torus(n,m>=4),
// grid_torus(n,m>=3), erdos_renyi(n, p, seed).
// Runs self_check before returning; deterministic given the spec.
Graph generate(const FamilySpec& spec);

// Family-specific structural invariants; throws GeneratorError naming the
// offending vertex and property.
void self_check(const Graph& g, const FamilySpec& spec);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);
Graph wheel_graph(int n);
Graph edgeless_graph(int n);
Graph random_tree(int n, std::uint64_t seed);
Graph octahedron();
Graph icosahedron();
Graph cross_polytope(int d);
Graph triangulated_torus(int n, int m);
Graph grid_torus(int n, int m);
Graph erdos_renyi(int n, double p, std::uint64_t seed);

}  // namespace morsegraph
