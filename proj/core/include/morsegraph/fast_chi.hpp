#pragma once

#include <cstdint>
#include <vector>

#include "morsegraph/graph.hpp"

namespace morsegraph {

// Recursive Euler characteristic: pick a Morse ordering, then
// chi(G) = sum_v (1 - chi(S^-(v))), recursing into the exit sets instead of
// counting cliques. Graphs at or below base_order_threshold fall back to the
// census.
struct FastChiConfig {
    enum class Strategy {
        DegreeAscending,  // high values to high-degree vertices; ties by id
        Random,           // seeded permutation, re-derived per recursive call
        Explicit,         // caller-supplied ranks, projected into subgraphs
    };

    Strategy strategy = Strategy::DegreeAscending;
    std::uint64_t seed = 0;
    std::vector<int> explicit_ranks;
    int base_order_threshold = 6;
    bool memoize = false;
};

long long fast_euler(const Graph& g, const FastChiConfig& cfg = {});

// The four-way cross check: census, Gauss-Bonnet, index sum of one random
// Morse function, and the recursive method, with per-method wall times.
struct ChiAgreement {
    long long census_chi = 0;
    long long gauss_bonnet_chi = 0;
    long long hopf_chi = 0;
    long long fast_chi = 0;
    double census_us = 0;
    double gauss_bonnet_us = 0;
    double hopf_us = 0;
    double fast_us = 0;

    bool agree() const {
        return census_chi == gauss_bonnet_chi && census_chi == hopf_chi &&
               census_chi == fast_chi;
    }
};

ChiAgreement chi_agreement_suite(const Graph& g, std::uint64_t seed = 0);

}  // namespace morsegraph
