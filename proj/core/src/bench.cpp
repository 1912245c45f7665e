#include "morsegraph/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "morsegraph/curvature.hpp"
#include "morsegraph/fast_chi.hpp"
#include "morsegraph/morse.hpp"

namespace morsegraph {

namespace {

double elapsed_us(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

BenchRow bench_instance(const Graph& g, const FamilySpec& spec, const std::string& method,
                        std::uint64_t seed, long long census_budget) {
    BenchRow row;
    row.family = spec.family;
    row.n = g.order();
    row.p_or_param = spec.param_string();
    row.seed = seed;
    row.method = method;

    auto t0 = std::chrono::steady_clock::now();
    if (method == "cliques") {
        auto census = clique_census_budgeted(g, census_budget);
        if (census) row.chi = euler_characteristic(*census);
    } else if (method == "gaussbonnet") {
        Rational total = gauss_bonnet_report(g).total;
        row.chi = numerator(total).convert_to<long long>();  // total is integral by the identity
    } else if (method == "hopf") {
        row.chi = index_report(g, MorseFunction::random(g.order(), seed)).index_sum;
    } else if (method == "fast") {
        row.chi = fast_euler(g);
    } else {
        throw std::invalid_argument("unknown method \"" + method + "\"");
    }
    row.wall_time_us = elapsed_us(t0);
    return row;
}

std::vector<BenchRow> run_bench(std::span<const FamilySpec> instances,
                                std::span<const std::string> methods,
                                std::uint64_t seed, long long census_budget) {
    std::vector<BenchRow> rows;
    rows.reserve(instances.size() * methods.size());
    for (const auto& spec : instances) {
        Graph g = generate(spec);
        for (const auto& method : methods) {
            // the instance seed identifies the row; the master seed only
            // derives instance seeds upstream
            std::uint64_t row_seed = spec.seed ? spec.seed : seed;
            rows.push_back(bench_instance(g, spec, method, row_seed, census_budget));
        }
    }
    return rows;
}

void emit_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
    out << bench_csv_header() << "\n";
    char time_buf[32];
    for (const auto& row : rows) {
        std::snprintf(time_buf, sizeof(time_buf), "%.3f", row.wall_time_us);
        out << row.family << "," << row.n << "," << row.p_or_param << "," << row.seed << ","
            << row.method << ",";
        if (row.chi) {
            out << *row.chi;
        } else {
            out << "NA";
        }
        out << "," << time_buf << "\n";
    }
}

}  // namespace morsegraph
