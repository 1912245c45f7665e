#include "morsegraph/generators.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include "morsegraph/rng.hpp"

namespace morsegraph {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw GeneratorError(message);
}

int int_param(const FamilySpec& spec, std::size_t i, const char* name) {
    require(i < spec.params.size(),
            "family " + spec.family + ": missing parameter <" + name + ">");
    return static_cast<int>(spec.params[i]);
}

// single cycle <=> connected and 2-regular
bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3) return false;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 2) return false;
    }
    return connected_components(g).size() == 1;
}

}  // namespace

std::string FamilySpec::param_string() const {
    if (family == "erdos_renyi") {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%g", p);
        return buf;
    }
    std::string s;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ";";
        s += std::to_string(params[i]);
    }
    return s;
}

Graph complete_graph(int n) {
    require(n >= 1, "complete: n must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::build(n, edges);
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle: n must be >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::build(n, edges);
}

Graph path_graph(int n) {
    require(n >= 1, "path: n must be >= 1");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::build(n, edges);
}

Graph star_graph(int n) {
    require(n >= 2, "star: n must be >= 2");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::build(n, edges);
}

Graph wheel_graph(int n) {
    require(n >= 4, "wheel: n must be >= 4");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        edges.emplace_back(0, v);  // hub
        edges.emplace_back(v, v + 1 < n ? v + 1 : 1);  // rim cycle
    }
    return Graph::build(n, edges);
}

Graph edgeless_graph(int n) {
    require(n >= 1, "edgeless: n must be >= 1");
    return Graph::build(n, std::span<const Edge>{});
}

Graph random_tree(int n, std::uint64_t seed) {
    require(n >= 1, "tree: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        edges.emplace_back(static_cast<VertexId>(uniform_below(rng, static_cast<std::uint64_t>(v))), v);
    }
    return Graph::build(n, edges);
}

Graph cross_polytope(int d) {
    require(d >= 1, "cross_polytope: d must be >= 1");
    // vertices 2i and 2i+1 are the antipodal pair i; all other edges present
    std::vector<Edge> edges;
    const int n = 2 * d;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (u / 2 != v / 2) edges.emplace_back(u, v);
        }
    }
    return Graph::build(n, edges);
}

Graph octahedron() { return cross_polytope(3); }

Graph icosahedron() {
    // fixed literal: 0 apex, 1..5 upper ring, 6..10 lower ring, 11 apex
    static constexpr Edge table[30] = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
        {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
        {1, 6}, {1, 7}, {2, 7}, {2, 8}, {3, 8},
        {3, 9}, {4, 9}, {4, 10}, {5, 10}, {5, 6},
        {6, 7}, {7, 8}, {8, 9}, {9, 10}, {6, 10},
        {6, 11}, {7, 11}, {8, 11}, {9, 11}, {10, 11},
    };
    return Graph::build(12, std::span<const Edge>(table, 30));
}

Graph triangulated_torus(int n, int m) {
    require(n >= 4 && m >= 4, "triangulated_torus: n and m must be >= 4");
    std::vector<Edge> edges;
    auto id = [m](int i, int j) { return i * m + j; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            edges.emplace_back(id(i, j), id((i + 1) % n, j));
            edges.emplace_back(id(i, j), id(i, (j + 1) % m));
            edges.emplace_back(id(i, j), id((i + 1) % n, (j + 1) % m));
        }
    }
    return Graph::build(n * m, edges);
}

Graph grid_torus(int n, int m) {
    require(n >= 3 && m >= 3, "grid_torus: n and m must be >= 3");
    std::vector<Edge> edges;
    auto id = [m](int i, int j) { return i * m + j; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            edges.emplace_back(id(i, j), id((i + 1) % n, j));
            edges.emplace_back(id(i, j), id(i, (j + 1) % m));
        }
    }
    return Graph::build(n * m, edges);
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    require(n >= 1, "erdos_renyi: n must be >= 1");
    require(p >= 0.0 && p <= 1.0, "erdos_renyi: p must lie in [0,1]");
    // one RNG stream, pairs drawn in lexicographic order
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (unit_interval(rng) < p) edges.emplace_back(u, v);
        }
    }
    return Graph::build(n, edges);
}

void self_check(const Graph& g, const FamilySpec& spec) {
    const auto& fam = spec.family;
    if (fam == "cycle") {
        require(is_cycle_graph(g), "cycle: graph is not a single cycle");
    } else if (fam == "tree") {
        require(connected_components(g).size() == 1, "tree: graph is not connected");
        require(g.size() == g.order() - 1, "tree: edge count differs from order-1");
    } else if (fam == "triangulated_torus") {
        for (VertexId v = 0; v < g.order(); ++v) {
            auto sphere = unit_sphere(g, v).graph;
            if (sphere.order() != 6 || !is_cycle_graph(sphere)) {
                throw GeneratorError("triangulated_torus: sphere of vertex " +
                                     std::to_string(v) + " is not a 6-cycle");
            }
        }
    } else if (fam == "cross_polytope" || fam == "octahedron") {
        int d = (fam == "octahedron") ? 3 : int_param(spec, 0, "d");
        for (VertexId v = 0; v < g.order(); ++v) {
            auto sphere = unit_sphere(g, v).graph;
            if (sphere.order() != 2 * (d - 1)) {
                throw GeneratorError(fam + ": sphere of vertex " + std::to_string(v) +
                                     " has order " + std::to_string(sphere.order()) +
                                     ", expected " + std::to_string(2 * (d - 1)));
            }
            for (VertexId w = 0; w < sphere.order(); ++w) {
                if (sphere.degree(w) != std::max(0, 2 * (d - 1) - 2)) {
                    throw GeneratorError(fam + ": sphere of vertex " + std::to_string(v) +
                                         " is not a cross polytope of dimension " +
                                         std::to_string(d - 1));
                }
            }
        }
    } else if (fam == "icosahedron") {
        for (VertexId v = 0; v < g.order(); ++v) {
            auto sphere = unit_sphere(g, v).graph;
            if (sphere.order() != 5 || !is_cycle_graph(sphere)) {
                throw GeneratorError("icosahedron: sphere of vertex " + std::to_string(v) +
                                     " is not a 5-cycle");
            }
        }
    }
    // remaining families carry no structural invariant beyond construction
}

Graph generate(const FamilySpec& spec) {
    const auto& fam = spec.family;
    Graph g;
    if (fam == "complete") {
        g = complete_graph(int_param(spec, 0, "n"));
    } else if (fam == "cycle") {
        g = cycle_graph(int_param(spec, 0, "n"));
    } else if (fam == "path") {
        g = path_graph(int_param(spec, 0, "n"));
    } else if (fam == "star") {
        g = star_graph(int_param(spec, 0, "n"));
    } else if (fam == "wheel") {
        g = wheel_graph(int_param(spec, 0, "n"));
    } else if (fam == "edgeless") {
        g = edgeless_graph(int_param(spec, 0, "n"));
    } else if (fam == "tree") {
        g = random_tree(int_param(spec, 0, "n"), spec.seed);
    } else if (fam == "octahedron") {
        g = octahedron();
    } else if (fam == "icosahedron") {
        g = icosahedron();
    } else if (fam == "cross_polytope") {
        g = cross_polytope(int_param(spec, 0, "d"));
    } else if (fam == "triangulated_torus") {
        g = triangulated_torus(int_param(spec, 0, "n"), int_param(spec, 1, "m"));
    } else if (fam == "grid_torus") {
        g = grid_torus(int_param(spec, 0, "n"), int_param(spec, 1, "m"));
    } else if (fam == "erdos_renyi") {
        g = erdos_renyi(int_param(spec, 0, "n"), spec.p, spec.seed);
    } else {
        throw GeneratorError("unknown family \"" + fam + "\"");
    }
    self_check(g, spec);
    return g;
}

}  // namespace morsegraph
