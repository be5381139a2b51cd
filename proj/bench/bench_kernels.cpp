// Serial reference vs OpenMP power sum, and the full pressure-root pipeline.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "perron/dimension.hpp"
#include "perron/kernels.hpp"

namespace {

std::vector<double> log_diameters(std::size_t n) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-40.0, -0.1);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

void BM_PowerSumSerial(benchmark::State& state) {
    auto v = log_diameters(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(perron::serial::power_sum(v, 0.73));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PowerSumParallel(benchmark::State& state) {
    auto v = log_diameters(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(perron::parallel::power_sum(v, 0.73));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PressureRoot(benchmark::State& state) {
    auto kernel = state.range(0) ? perron::Kernel::Parallel : perron::Kernel::Serial;
    auto rule = perron::DigitRule::luroth();
    auto all = perron::DigitPredicate::all();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            perron::pressure_root(rule, perron::Sign::Positive, all, 2, perron::Natural(300), 1e-10, kernel));
}

}  // namespace

BENCHMARK(BM_PowerSumSerial)->RangeMultiplier(8)->Range(1 << 12, 1 << 21);
BENCHMARK(BM_PowerSumParallel)->RangeMultiplier(8)->Range(1 << 12, 1 << 21);
BENCHMARK(BM_PressureRoot)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
