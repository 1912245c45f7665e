#include "morsegraph/graph.hpp"

#include <algorithm>
#include <iterator>

namespace morsegraph {

Graph Graph::build(VertexId order, std::span<const Edge> edges) {
    if (order < 0) throw GraphError("graph order must be nonnegative");
    Graph g;
    g.adj_.resize(static_cast<std::size_t>(order));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= order || v < 0 || v >= order) {
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for order " + std::to_string(order));
        }
        if (u == v) {
            throw GraphError("self-loop rejected: (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
        }
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.edge_count_ += static_cast<long long>(nb.size());
    }
    g.edge_count_ /= 2;
    return g;
}

Graph Graph::build(VertexId order, std::initializer_list<Edge> edges) {
    return build(order, std::span<const Edge>(edges.begin(), edges.size()));
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u < 0 || u >= order() || v < 0 || v >= order()) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(edge_count_));
    for (VertexId u = 0; u < order(); ++u) {
        for (VertexId v : adj_[u]) {
            if (v > u) edges.emplace_back(u, v);
        }
    }
    return edges;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
    std::vector<VertexId> keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    std::vector<VertexId> new_id(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        VertexId v = keep[i];
        if (v < 0 || v >= g.order()) {
            throw GraphError("induced subgraph: vertex " + std::to_string(v) + " out of range");
        }
        new_id[static_cast<std::size_t>(v)] = static_cast<VertexId>(i);
    }

    std::vector<Edge> edges;
    for (VertexId v : keep) {
        for (VertexId w : g.neighbors(v)) {
            if (w > v && new_id[static_cast<std::size_t>(w)] >= 0) {
                edges.emplace_back(new_id[static_cast<std::size_t>(v)],
                                   new_id[static_cast<std::size_t>(w)]);
            }
        }
    }
    InducedSubgraph result;
    result.graph = Graph::build(static_cast<VertexId>(keep.size()), edges);
    result.vertex_map = std::move(keep);
    return result;
}

InducedSubgraph unit_sphere(const Graph& g, VertexId v) {
    if (v < 0 || v >= g.order()) {
        throw GraphError("unit sphere: vertex " + std::to_string(v) + " out of range");
    }
    return induced_subgraph(g, g.neighbors(v));
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    std::vector<std::vector<VertexId>> components;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    std::vector<VertexId> stack;
    for (VertexId root = 0; root < g.order(); ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        std::vector<VertexId> comp;
        stack.push_back(root);
        seen[static_cast<std::size_t>(root)] = true;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (VertexId w : g.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

namespace {

// Ordered extension: a clique is grown only by neighbors with larger id, so
// every complete subgraph is visited exactly once. `cand` holds vertices
// adjacent to every clique member and larger than all of them. The pool is
// pre-sized so slot references stay valid across recursion. Returns false
// once `steps` exceeds `budget` (budget < 0 means unlimited).
bool extend_cliques(const Graph& g, std::vector<std::vector<VertexId>>& pool,
                    int depth, std::vector<long long>& counts,
                    long long& steps, long long budget) {
    const auto& cand = pool[static_cast<std::size_t>(depth)];
    if (static_cast<int>(counts.size()) <= depth) counts.push_back(0);
    for (std::size_t i = 0; i < cand.size(); ++i) {
        VertexId u = cand[i];
        if (budget >= 0 && ++steps > budget) return false;
        ++counts[static_cast<std::size_t>(depth)];
        auto& next = pool[static_cast<std::size_t>(depth + 1)];
        next.clear();
        auto nb = g.neighbors(u);
        std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end(),
                              nb.begin(), nb.end(), std::back_inserter(next));
        if (!next.empty()) {
            if (!extend_cliques(g, pool, depth + 1, counts, steps, budget)) return false;
        }
    }
    return true;
}

std::optional<CliqueCensus> census_impl(const Graph& g, long long budget) {
    CliqueCensus census;
    if (g.order() == 0) return census;
    census.counts.push_back(0);
    long long steps = 0;
    std::vector<std::vector<VertexId>> pool(static_cast<std::size_t>(g.order()) + 2);
    for (VertexId v = 0; v < g.order(); ++v) {
        if (budget >= 0 && ++steps > budget) return std::nullopt;
        ++census.counts[0];
        auto nb = g.neighbors(v);
        auto& cand = pool[1];
        cand.assign(std::upper_bound(nb.begin(), nb.end(), v), nb.end());
        if (!cand.empty()) {
            if (!extend_cliques(g, pool, 1, census.counts, steps, budget)) return std::nullopt;
        }
    }
    while (!census.counts.empty() && census.counts.back() == 0) census.counts.pop_back();
    return census;
}

}  // namespace

CliqueCensus clique_census(const Graph& g) {
    return *census_impl(g, -1);
}

std::optional<CliqueCensus> clique_census_budgeted(const Graph& g, long long max_steps) {
    return census_impl(g, max_steps);
}

long long euler_characteristic(const CliqueCensus& census) {
    long long chi = 0;
    int sign = 1;
    for (long long c : census.counts) {
        chi += sign * c;
        sign = -sign;
    }
    return chi;
}

long long euler_characteristic(const Graph& g) {
    return euler_characteristic(clique_census(g));
}

std::string graph_certificate(const Graph& g) {
    std::string key;
    auto push = [&key](VertexId x) {
        key.append(reinterpret_cast<const char*>(&x), sizeof(x));
    };
    push(g.order());
    for (const auto& [u, v] : g.edge_list()) {
        push(u);
        push(v);
    }
    return key;
}

}  // namespace morsegraph
