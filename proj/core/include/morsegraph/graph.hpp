#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace morsegraph {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph on dense vertex ids 0..order-1.
// Neighbor lists are sorted ascending; the structure never changes after
// build(), so concurrent reads are safe.
class Graph {
public:
    Graph() = default;

    // Validates: ids in range, no self-loops. Duplicate edges collapse.
    // Throws GraphError naming the offending pair.
    static Graph build(VertexId order, std::span<const Edge> edges);
    static Graph build(VertexId order, std::initializer_list<Edge> edges);

    VertexId order() const { return static_cast<VertexId>(adj_.size()); }
    long long size() const { return edge_count_; }

    std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(VertexId u, VertexId v) const;

    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edge_list() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<VertexId>> adj_;
    long long edge_count_ = 0;
};

// Subgraph induced on a vertex set, with new dense ids. vertex_map[new] = old,
// ascending in the original ids.
struct InducedSubgraph {
    Graph graph;
    std::vector<VertexId> vertex_map;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

// S(v): subgraph induced on the neighbors of v.
InducedSubgraph unit_sphere(const Graph& g, VertexId v);

// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

// counts[k] = number of complete subgraphs on k+1 vertices. Trimmed: the last
// entry is nonzero, and the empty graph has an empty vector.
struct CliqueCensus {
    std::vector<long long> counts;

    int dimension() const { return static_cast<int>(counts.size()) - 1; }
    long long operator[](std::size_t k) const { return k < counts.size() ? counts[k] : 0; }
    bool operator==(const CliqueCensus&) const = default;
};

CliqueCensus clique_census(const Graph& g);

// Census with a cap on clique-extension steps (one step per clique visited).
// Returns nullopt once the cap is exceeded.
std::optional<CliqueCensus> clique_census_budgeted(const Graph& g, long long max_steps);

// Alternating sum over the census; 0 for the empty graph.
long long euler_characteristic(const CliqueCensus& census);
long long euler_characteristic(const Graph& g);

// Byte string identifying the labeled graph (order + sorted edge list).
// Identical graphs collide; isomorphic relabelings do not. Used as a memo key
// where repeated substructures recur with identical labels.
std::string graph_certificate(const Graph& g);

}  // namespace morsegraph
