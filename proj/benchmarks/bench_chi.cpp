#include <benchmark/benchmark.h>

#include "morsegraph/curvature.hpp"
#include "morsegraph/fast_chi.hpp"
#include "morsegraph/generators.hpp"
#include "morsegraph/morse.hpp"

using namespace morsegraph;

namespace {

Graph er_instance(int n, double p) { return erdos_renyi(n, p, 0xBE7C4); }

void BM_CensusChi(benchmark::State& state) {
    Graph g = er_instance(static_cast<int>(state.range(0)), 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(euler_characteristic(g));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CensusChi)->DenseRange(10, 30, 5)->Complexity();

void BM_FastChi(benchmark::State& state) {
    Graph g = er_instance(static_cast<int>(state.range(0)), 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fast_euler(g));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FastChi)->DenseRange(10, 30, 5)->Complexity();

void BM_FastChiMemoized(benchmark::State& state) {
    Graph g = er_instance(static_cast<int>(state.range(0)), 0.5);
    FastChiConfig cfg;
    cfg.memoize = true;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fast_euler(g, cfg));
    }
}
BENCHMARK(BM_FastChiMemoized)->DenseRange(10, 30, 5);

void BM_GaussBonnet(benchmark::State& state) {
    Graph g = er_instance(static_cast<int>(state.range(0)), 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_bonnet_report(g).total);
    }
}
BENCHMARK(BM_GaussBonnet)->DenseRange(10, 30, 5);

void BM_IndexReport(benchmark::State& state) {
    Graph g = er_instance(static_cast<int>(state.range(0)), 0.5);
    MorseFunction f = MorseFunction::random(g.order(), 17);
    for (auto _ : state) {
        benchmark::DoNotOptimize(index_report(g, f).index_sum);
    }
}
BENCHMARK(BM_IndexReport)->DenseRange(10, 30, 5);

void BM_SparseFamilies(benchmark::State& state) {
    Graph g = triangulated_torus(static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fast_euler(g));
    }
}
BENCHMARK(BM_SparseFamilies)->DenseRange(4, 12, 2);

}  // namespace

BENCHMARK_MAIN();
