#include "morsegraph/fast_chi.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "morsegraph/curvature.hpp"
#include "morsegraph/morse.hpp"
#include "morsegraph/rng.hpp"

namespace morsegraph {

namespace {

std::vector<int> make_ranks(const Graph& g, const FastChiConfig& cfg,
                            const std::vector<int>* projected, std::uint64_t seed) {
    const auto n = static_cast<std::size_t>(g.order());
    switch (cfg.strategy) {
        case FastChiConfig::Strategy::DegreeAscending: {
            std::vector<VertexId> listing(n);
            std::iota(listing.begin(), listing.end(), 0);
            std::stable_sort(listing.begin(), listing.end(), [&](VertexId a, VertexId b) {
                if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
                return a < b;
            });
            std::vector<int> ranks(n);
            for (std::size_t k = 0; k < n; ++k) ranks[static_cast<std::size_t>(listing[k])] = static_cast<int>(k);
            return ranks;
        }
        case FastChiConfig::Strategy::Random: {
            std::vector<VertexId> listing(n);
            std::iota(listing.begin(), listing.end(), 0);
            std::mt19937_64 rng(seed);
            shuffle(listing, rng);
            std::vector<int> ranks(n);
            for (std::size_t k = 0; k < n; ++k) ranks[static_cast<std::size_t>(listing[k])] = static_cast<int>(k);
            return ranks;
        }
        case FastChiConfig::Strategy::Explicit: {
            if (projected) return *projected;
            if (cfg.explicit_ranks.size() != n) {
                throw std::invalid_argument("explicit ranks cover " +
                                            std::to_string(cfg.explicit_ranks.size()) +
                                            " vertices, graph has " + std::to_string(n));
            }
            return cfg.explicit_ranks;
        }
    }
    throw std::logic_error("unreachable");
}

// Compress a rank subset back to 0..k-1, preserving order.
std::vector<int> project_ranks(const std::vector<int>& parent_ranks,
                               const std::vector<VertexId>& vertex_map) {
    std::vector<std::pair<int, std::size_t>> keyed;
    keyed.reserve(vertex_map.size());
    for (std::size_t i = 0; i < vertex_map.size(); ++i) {
        keyed.emplace_back(parent_ranks[static_cast<std::size_t>(vertex_map[i])], i);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> ranks(vertex_map.size());
    for (std::size_t k = 0; k < keyed.size(); ++k) ranks[keyed[k].second] = static_cast<int>(k);
    return ranks;
}

long long fast_euler_impl(const Graph& g, const FastChiConfig& cfg,
                          const std::vector<int>* projected, std::uint64_t seed,
                          std::unordered_map<std::string, long long>* memo) {
    if (g.order() <= cfg.base_order_threshold) {
        return euler_characteristic(g);
    }
    std::string key;
    if (memo) {
        key = graph_certificate(g);
        auto it = memo->find(key);
        if (it != memo->end()) return it->second;
    }

    auto ranks = make_ranks(g, cfg, projected, seed);
    long long chi = 0;
    std::vector<VertexId> minus;
    for (VertexId v = 0; v < g.order(); ++v) {
        minus.clear();
        for (VertexId w : g.neighbors(v)) {
            if (ranks[static_cast<std::size_t>(w)] < ranks[static_cast<std::size_t>(v)]) {
                minus.push_back(w);
            }
        }
        auto sub = induced_subgraph(g, minus);
        long long sub_chi;
        if (cfg.strategy == FastChiConfig::Strategy::DegreeAscending) {
            sub_chi = fast_euler_impl(sub.graph, cfg, nullptr, 0, memo);
        } else if (cfg.strategy == FastChiConfig::Strategy::Random) {
            sub_chi = fast_euler_impl(sub.graph, cfg, nullptr,
                                      derive_seed(seed, static_cast<std::uint64_t>(v)), memo);
        } else {
            auto child = project_ranks(ranks, sub.vertex_map);
            sub_chi = fast_euler_impl(sub.graph, cfg, &child, 0, memo);
        }
        chi += 1 - sub_chi;
    }
    if (memo) (*memo)[key] = chi;
    return chi;
}

double elapsed_us(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

long long fast_euler(const Graph& g, const FastChiConfig& cfg) {
    if (cfg.base_order_threshold < 1) {
        throw std::invalid_argument("base_order_threshold must be >= 1");
    }
    std::unordered_map<std::string, long long> memo;
    return fast_euler_impl(g, cfg, nullptr, cfg.seed, cfg.memoize ? &memo : nullptr);
}

ChiAgreement chi_agreement_suite(const Graph& g, std::uint64_t seed) {
    ChiAgreement result;

    auto t0 = std::chrono::steady_clock::now();
    result.census_chi = euler_characteristic(clique_census(g));
    result.census_us = elapsed_us(t0);

    t0 = std::chrono::steady_clock::now();
    Rational total = gauss_bonnet_report(g).total;
    if (denominator(total) != 1) {
        throw std::logic_error("curvature total is not an integer: " + rational_to_string(total));
    }
    result.gauss_bonnet_chi = numerator(total).convert_to<long long>();
    result.gauss_bonnet_us = elapsed_us(t0);

    t0 = std::chrono::steady_clock::now();
    result.hopf_chi = index_report(g, MorseFunction::random(g.order(), seed)).index_sum;
    result.hopf_us = elapsed_us(t0);

    t0 = std::chrono::steady_clock::now();
    result.fast_chi = fast_euler(g);
    result.fast_us = elapsed_us(t0);

    return result;
}

}  // namespace morsegraph
