// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "fde/determinant.hpp"
#include "fde/region.hpp"

namespace {

void BM_GridSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fde::serial::min_determinant_grid(0.5, 2.45, n));
    state.SetComplexityN(n);
}

void BM_GridOpenMP(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(fde::min_determinant_grid(0.5, 2.45, n, threads));
    state.SetComplexityN(n);
}

void BM_GeneralGridSerial(benchmark::State& state) {
    const auto p_plus = fde::StepFunction({0.0, 0.3, 1.0}, {0.5, 0.1});
    const auto p_minus = fde::StepFunction({0.0, 0.6, 0.8, 1.0}, {2.0, 0.0, 4.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(fde::serial::min_determinant_grid_general(p_plus, p_minus, state.range(0)));
    }
}

void BM_GeneralGridOpenMP(benchmark::State& state) {
    const auto p_plus = fde::StepFunction({0.0, 0.3, 1.0}, {0.5, 0.1});
    const auto p_minus = fde::StepFunction({0.0, 0.6, 0.8, 1.0}, {2.0, 0.0, 4.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(fde::min_determinant_grid_general(p_plus, p_minus, state.range(0), 0));
    }
}

fde::RegionSpec bench_region() {
    fde::RegionSpec spec;
    spec.nA = 8;
    spec.nB = 8;
    spec.n_tau = 500;
    return spec;
}

void BM_RegionSerial(benchmark::State& state) {
    const auto spec = bench_region();
    for (auto _ : state) benchmark::DoNotOptimize(fde::serial::scan_region(spec));
}

void BM_RegionOpenMP(benchmark::State& state) {
    const auto spec = bench_region();
    for (auto _ : state) benchmark::DoNotOptimize(fde::scan_region(spec, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_GridSerial)->Arg(500)->Arg(1000)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_GridOpenMP)
    ->ArgsProduct({{500, 1000, 2000, 4000}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_GeneralGridSerial)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneralGridOpenMP)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RegionSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegionOpenMP)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
