#include "morsegraph/experiments.hpp"

#include <cmath>

#include "morsegraph/generators.hpp"
#include "morsegraph/rng.hpp"

namespace morsegraph {

ExperimentResult mc_critical(int n, double p, long long trials, std::uint64_t seed) {
    ExperimentResult result;
    result.trials = trials;
    result.log.reserve(static_cast<std::size_t>(trials));
    for (long long t = 0; t < trials; ++t) {
        std::uint64_t graph_seed = derive_seed(seed, static_cast<std::uint64_t>(2 * t));
        std::uint64_t morse_seed = derive_seed(seed, static_cast<std::uint64_t>(2 * t + 1));
        Graph g = erdos_renyi(n, p, graph_seed);
        auto report = index_report(g, MorseFunction::random(n, morse_seed));
        int critical = static_cast<int>(report.critical_count());
        result.total_critical += critical;
        result.total_vertices += n;
        result.log.push_back({graph_seed, morse_seed, critical, n});
    }
    if (result.total_vertices > 0) {
        result.critical_fraction = Rational(result.total_critical, result.total_vertices);
        double phat = static_cast<double>(result.total_critical) /
                      static_cast<double>(result.total_vertices);
        result.half_width =
            1.96 * std::sqrt(phat * (1.0 - phat) / static_cast<double>(result.total_vertices));
    }
    return result;
}

VerifyResult verify_poincare_hopf(const Graph& g, long long trials, std::uint64_t seed) {
    VerifyResult result;
    result.trials = trials;
    result.chi = euler_characteristic(g);
    result.transfer_ok = verify_transfer(g);
    if (!result.transfer_ok) result.failure = "transfer identity failed";
    for (long long t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        MorseFunction f = MorseFunction::random(g.order(), trial_seed);
        auto report = index_report(g, f);
        bool ok = (report.index_sum == result.chi) && verify_intermediate(g, f);
        if (ok) {
            ++result.passed;
        } else if (!result.failed_seed) {
            result.failed_seed = trial_seed;
            result.failed_function = f;
            result.failure = (report.index_sum != result.chi)
                                 ? "index sum " + std::to_string(report.index_sum) +
                                       " != chi " + std::to_string(result.chi)
                                 : "intermediate identity failed";
        }
    }
    return result;
}

}  // namespace morsegraph
