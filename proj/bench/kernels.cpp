// Kernel comparison: sweep algorithms against each other, and the OpenMP
// graph builder against its serial reference.

#include <benchmark/benchmark.h>

#include "trapezoid/connectivity.hpp"
#include "trapezoid/parallel.hpp"

namespace {

using namespace trapezoid;

void BM_KappaFast(benchmark::State& state) {
    const auto d = random_diagram(static_cast<Vertex>(state.range(0)), 1);
    const PointIndex index(d);
    for (auto _ : state) benchmark::DoNotOptimize(kappa_fast(d, index).kappa);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KappaFast)->RangeMultiplier(2)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_KappaQuadratic(benchmark::State& state) {
    const auto d = random_diagram(static_cast<Vertex>(state.range(0)), 1);
    const PointIndex index(d);
    for (auto _ : state) benchmark::DoNotOptimize(kappa_quadratic(d, index).kappa);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KappaQuadratic)->RangeMultiplier(2)->Range(1 << 10, 1 << 14)->Complexity(benchmark::oNSquared);

void BM_GraphSerial(benchmark::State& state) {
    const auto d = random_diagram(static_cast<Vertex>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(intersection_graph(d).edge_count());
}
BENCHMARK(BM_GraphSerial)->RangeMultiplier(2)->Range(1 << 9, 1 << 12);

void BM_GraphOpenMP(benchmark::State& state) {
    const auto d = random_diagram(static_cast<Vertex>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(parallel::intersection_graph(d).edge_count());
}
BENCHMARK(BM_GraphOpenMP)->RangeMultiplier(2)->Range(1 << 9, 1 << 12)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
