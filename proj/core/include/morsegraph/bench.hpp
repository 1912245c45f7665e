#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morsegraph/generators.hpp"

namespace morsegraph {

// One benchmark measurement. chi is empty when the census hit its
// clique-extension budget (recorded as "NA" in the CSV).
struct BenchRow {
    std::string family;
    int n = 0;
    std::string p_or_param;
    std::uint64_t seed = 0;
    std::string method;
    std::optional<long long> chi;
    double wall_time_us = 0;
};

inline const char* bench_csv_header() {
    return "family,n,p_or_param,seed,method,chi,wall_time_us";
}

void emit_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

// Methods: "cliques", "gaussbonnet", "hopf", "fast". The census honors
// `census_budget` (clique-extension steps, < 0 for unlimited); other methods
// always run to completion.
std::vector<BenchRow> run_bench(std::span<const FamilySpec> instances,
                                std::span<const std::string> methods,
                                std::uint64_t seed, long long census_budget);

BenchRow bench_instance(const Graph& g, const FamilySpec& spec, const std::string& method,
                        std::uint64_t seed, long long census_budget);

}  // namespace morsegraph
