// Serial-vs-OpenMP comparisons: the tableau row-elimination kernel, a full
// capacity solve, and the Monte-Carlo trial loop.
//
// Run: ./bench/hdcap_bench [--benchmark_filter=...]

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "hdcap/capacity.hpp"
#include "hdcap/experiments.hpp"
#include "hdcap/pivot_kernel.hpp"
#include "hdcap/worst_case.hpp"

namespace {

using namespace hdcap;

std::vector<double> random_tableau(long rows, long width, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> data(rows * width);
    for (auto& v : data) v = uniform01(rng) * 2.0 - 1.0;
    data[(rows / 2) * width + width / 2] = 1.0;  // normalized pivot element
    return data;
}

void BM_EliminateSerial(benchmark::State& state) {
    const long rows = state.range(0);
    const long width = state.range(1);
    auto base = random_tableau(rows, width, 42);
    std::vector<double> work(base.size());
    for (auto _ : state) {
        work = base;
        kernel::eliminate_rows_serial(work.data(), rows, width, rows / 2, width / 2);
        benchmark::DoNotOptimize(work.data());
    }
    state.SetBytesProcessed(state.iterations() * static_cast<long>(base.size()) * sizeof(double));
}

void BM_EliminateParallel(benchmark::State& state) {
    const long rows = state.range(0);
    const long width = state.range(1);
    auto base = random_tableau(rows, width, 42);
    std::vector<double> work(base.size());
    for (auto _ : state) {
        work = base;
        kernel::eliminate_rows_parallel(work.data(), rows, width, rows / 2, width / 2);
        benchmark::DoNotOptimize(work.data());
    }
    state.SetBytesProcessed(state.iterations() * static_cast<long>(base.size()) * sizeof(double));
}

void BM_CapacityEven1(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const bool parallel = state.range(1) != 0;
    const DiamondNetwork net = worst_even_type1(n);
    SimplexOptions options;
    options.parallel = parallel;
    for (auto _ : state) {
        auto result = approximate_capacity(net, ArithmeticMode::Float64, options);
        benchmark::DoNotOptimize(result.value);
    }
}

void BM_MonteCarlo(benchmark::State& state) {
    const bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        auto result = monte_carlo({5}, 32, 7, false, parallel);
        benchmark::DoNotOptimize(result.stats.front().median);
    }
}

}  // namespace

BENCHMARK(BM_EliminateSerial)->Args({512, 1024})->Args({2048, 4096})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EliminateParallel)->Args({512, 1024})->Args({2048, 4096})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CapacityEven1)
    ->Args({8, 0})
    ->Args({8, 1})
    ->Args({10, 0})
    ->Args({10, 1})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarlo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
