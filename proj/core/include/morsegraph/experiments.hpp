#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morsegraph/graph.hpp"
#include "morsegraph/morse.hpp"
#include "morsegraph/rational.hpp"

namespace morsegraph {

// Monte-Carlo estimate of the probability that a vertex of a random graph
// with a random Morse function is critical. Vertices are pooled across
// trials; per-trial rows are kept for variance analysis.
struct ExperimentResult {
    long long trials = 0;
    long long total_vertices = 0;
    long long total_critical = 0;
    Rational critical_fraction;   // exact pooled ratio
    double half_width = 0;        // 1.96 * sqrt(p(1-p)/N), normal approximation

    struct Trial {
        std::uint64_t graph_seed;
        std::uint64_t morse_seed;
        int critical;
        int vertices;
    };
    std::vector<Trial> log;
};

ExperimentResult mc_critical(int n, double p, long long trials, std::uint64_t seed);

// Draws `trials` random Morse functions on g and checks, per trial, that the
// index sum equals the census Euler characteristic and that the intermediate
// counting identity holds; the transfer identity is checked once per graph.
struct VerifyResult {
    long long trials = 0;
    long long passed = 0;
    long long chi = 0;
    bool transfer_ok = false;
    // first failing trial, if any
    std::optional<std::uint64_t> failed_seed;
    std::optional<MorseFunction> failed_function;
    std::string failure;

    bool all_ok() const { return transfer_ok && passed == trials; }
};

VerifyResult verify_poincare_hopf(const Graph& g, long long trials, std::uint64_t seed);

}  // namespace morsegraph
