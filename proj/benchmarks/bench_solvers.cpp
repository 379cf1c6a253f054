#include <benchmark/benchmark.h>

#include "biphase/expansion.hpp"
#include "biphase/fd_solver.hpp"

using namespace biphase;

namespace {

// layer-resolving grid at 200 nodes per e-folding, as in the bench experiment
Grid bench_grid(const Parameters& p) {
    return Grid::resolving(derive_constants(p).gamma, p.eps(), 200.0);
}

Parameters params_for(const benchmark::State& state) {
    return reference_parameters(1.0 / static_cast<double>(state.range(0)));
}

void BM_CoupledSolve(benchmark::State& state) {
    const auto p = params_for(state);
    const auto g = bench_grid(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_coupled_fd(p, g));
    }
    state.counters["N"] = static_cast<double>(g.intervals());
}

void BM_DecoupledSolve(benchmark::State& state) {
    const auto p = params_for(state);
    const auto g = bench_grid(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_decoupled_fd(p, g));
    }
    state.counters["N"] = static_cast<double>(g.intervals());
}

void BM_Approximant(benchmark::State& state) {
    const auto p = params_for(state);
    const auto g = bench_grid(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(approximant_phases(build_expansion(p, 1), p, g, std::nullopt, 1e-18));
    }
    state.counters["N"] = static_cast<double>(g.intervals());
}

void BM_BuildExpansion(benchmark::State& state) {
    const auto p = reference_parameters(0.05);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_expansion(p, static_cast<int>(state.range(0))));
    }
}

}  // namespace

// argument is 1/eps
BENCHMARK(BM_CoupledSolve)->Arg(10)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DecoupledSolve)->Arg(10)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Approximant)->Arg(10)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BuildExpansion)->DenseRange(0, 6, 2);

BENCHMARK_MAIN();
