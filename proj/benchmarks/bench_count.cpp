#include <benchmark/benchmark.h>

#include "gridiv/board.hpp"
#include "gridiv/dpcount.hpp"
#include "gridiv/recurrence.hpp"

using namespace gridiv;

static void bm_brute_2xn(benchmark::State& state) {
    BoardShape shape{2, static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_count_all(shape));
}
BENCHMARK(bm_brute_2xn)->DenseRange(3, 7);

static void bm_dp_2xn(benchmark::State& state) {
    BoardShape shape{2, static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(dp_count(shape));
}
BENCHMARK(bm_dp_2xn)->RangeMultiplier(4)->Range(4, 1024);

static void bm_dp_rows(benchmark::State& state) {
    BoardShape shape{static_cast<int>(state.range(0)), 32};
    for (auto _ : state)
        benchmark::DoNotOptimize(dp_count(shape));
}
BENCHMARK(bm_dp_rows)->DenseRange(2, 6);

static void bm_recurrence_table(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(d_table(10, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_recurrence_table)->Arg(20)->Arg(200);

BENCHMARK_MAIN();
