#include "voaforge/screening.hpp"

#include <benchmark/benchmark.h>

using namespace voaforge;

namespace {

std::vector<Screening> screenings(long p) {
    if (p == 1) return {make_screening("S1", 1), make_screening("S2", 1)};
    return {make_screening("Qminus", p), make_screening("QFMS", p)};
}

void BM_KernelSerial(benchmark::State& state) {
    const long p = state.range(0);
    const Rat maxConf(state.range(1));
    auto S = screenings(p);
    ModuleSpec m = pi0_module(p);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_dim_table_serial(S, m, maxConf, -6, 6));
}

void BM_KernelParallel(benchmark::State& state) {
    const long p = state.range(0);
    const Rat maxConf(state.range(1));
    auto S = screenings(p);
    ModuleSpec m = pi0_module(p);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_dim_table(S, m, maxConf, -6, 6));
}

} // namespace

BENCHMARK(BM_KernelSerial)->Args({1, 2})->Args({2, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelParallel)->Args({1, 2})->Args({2, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
