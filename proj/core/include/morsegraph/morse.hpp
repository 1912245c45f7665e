#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "morsegraph/graph.hpp"
#include "morsegraph/rational.hpp"

namespace morsegraph {

struct MorseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A Morse function reduced to its canonical form: a total order on the
// vertices, stored as rank per vertex (a permutation of 0..n-1). Every
// operation downstream depends only on the sign of f(w)-f(v) across edges,
// and a graph Morse function has no ties there, so the rank form is lossless.
class MorseFunction {
public:
    MorseFunction() = default;

    // order[k] is the vertex with the k-th smallest value.
    static MorseFunction from_vertex_order(std::span<const VertexId> order);

    // ranks[v] = rank of vertex v; must be a permutation of 0..n-1.
    static MorseFunction from_ranks(std::vector<int> ranks);

    // Uniformly random total order; identical output for identical seeds.
    static MorseFunction random(VertexId order, std::uint64_t seed);

    // Reduce real (rational) values to ranks; ties broken by vertex id.
    // Caller is responsible for Morse validation against a graph first.
    static MorseFunction from_values(std::span<const Rational> values);

    VertexId size() const { return static_cast<VertexId>(rank_.size()); }
    int rank(VertexId v) const { return rank_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& ranks() const { return rank_; }
    bool below(VertexId u, VertexId v) const { return rank(u) < rank(v); }

    // Listing of vertices by ascending rank.
    std::vector<VertexId> vertex_order() const;

    // The function -f: ranks reversed.
    MorseFunction negated() const;

    bool operator==(const MorseFunction&) const = default;

private:
    std::vector<int> rank_;
};

// Pairs at graph distance <= 2 whose values coincide (u < v, sorted, unique).
// Empty result means the values are a Morse function for g.
std::vector<std::pair<VertexId, VertexId>> morse_violations(
    const Graph& g, std::span<const Rational> values);

bool is_morse(const Graph& g, std::span<const Rational> values);

// Validates and canonicalizes in one step; throws MorseError listing the
// violating pairs if the values are not Morse for g.
MorseFunction morse_from_values(const Graph& g, std::span<const Rational> values);

// The split of S(v) by the sign of f(w)-f(v), plus the mixed-simplex counts:
// mixed_counts[k] = W_k(v) = number of K_{k+1} subgraphs of S(v) containing
// vertices on both sides. mixed_counts[0] == 0 always.
struct SphereSplit {
    VertexId vertex = 0;
    std::vector<VertexId> minus;  // original ids, ascending
    std::vector<VertexId> plus;
    std::vector<long long> mixed_counts;
};

SphereSplit sphere_split(const Graph& g, const MorseFunction& f, VertexId v);

// i(v) = 1 - chi(S^-(v)) and the S^+ counterpart.
long long vertex_index(const Graph& g, const MorseFunction& f, VertexId v);
long long vertex_index_plus(const Graph& g, const MorseFunction& f, VertexId v);

// Critical iff chi(S^-(v)) != 1, i.e. iff the index is nonzero.
bool is_critical(const Graph& g, const MorseFunction& f, VertexId v);

// Per-vertex indices and the symmetric index j(v) = 1 - chi(S^-)/2 - chi(S^+)/2,
// stored doubled so everything stays integral.
struct IndexReport {
    std::vector<long long> index;
    std::vector<long long> j_times_2;
    std::vector<bool> critical;
    long long index_sum = 0;

    long long critical_count() const;
};

IndexReport index_report(const Graph& g, const MorseFunction& f);

// V_k(v) = number of K_{k+1} subgraphs of the unit sphere S(v).
long long count_Vk(const Graph& g, VertexId v, int k);

// sum_v V_k(v) == (k+2) * v_{k+1} for every k up to the census dimension.
bool verify_transfer(const Graph& g);

// sum_v W_k(v) == k * v_{k+1} for every k up to the census dimension.
bool verify_intermediate(const Graph& g, const MorseFunction& f);

// Clique counts of one unit sphere classified by side; the building block
// shared by the index, the split, and the lemma checks. counts are per k
// (K_{k+1} subgraphs), all four vectors the same length.
struct SphereCliqueProfile {
    std::vector<long long> all;
    std::vector<long long> all_minus;
    std::vector<long long> all_plus;
    std::vector<long long> mixed;

    long long chi_minus() const;
    long long chi_plus() const;
};

SphereCliqueProfile sphere_clique_profile(const Graph& g, const MorseFunction& f, VertexId v);

}  // namespace morsegraph
