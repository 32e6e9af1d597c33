#include "fixtures.hpp"

#include "pwftap/aggregator.hpp"
#include "pwftap/partition.hpp"

#include <benchmark/benchmark.h>

using namespace pwftap;

static void BM_GridScheme(benchmark::State& state) {
    const MarketModel grid = testing::knock_in_grid(Rational(3, 2));
    for (auto _ : state) benchmark::DoNotOptimize(run_partition_scheme(grid, grid.all_options()));
}
BENCHMARK(BM_GridScheme)->Unit(benchmark::kMillisecond)->Iterations(3);

static void BM_GridAggregator(benchmark::State& state) {
    const MarketModel grid = testing::knock_in_grid(Rational(3, 2));
    for (auto _ : state) benchmark::DoNotOptimize(build_aggregator(grid));
}
BENCHMARK(BM_GridAggregator)->Unit(benchmark::kMillisecond);
