#include "pwftap/convex.hpp"
#include "pwftap/hedging.hpp"
#include "pwftap/lp.hpp"
#include "pwftap/measures.hpp"
#include "pwftap/partition.hpp"
#include "pwftap/random_market.hpp"

#include <benchmark/benchmark.h>

using namespace pwftap;

namespace {

// Dense feasible LP: maximize sum x subject to random <= rows with nonnegative right-hand sides.
LinearProgram dense_lp(std::size_t vars, std::size_t rows, std::uint64_t seed) {
    SeededDraws draws(seed);
    LinearProgram lp(vars, Sense::maximize);
    for (std::size_t j = 0; j < vars; ++j) {
        lp.objective[j] = Rational(static_cast<long>(draws.integer(1, 5)));
        lp.set_bounds(j, Rational(0), Rational(10));
    }
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<Rational> row(vars);
        for (auto& v : row) v = Rational(static_cast<long>(draws.integer(-2, 4)));
        lp.add_constraint(std::move(row), Relation::less_equal, Rational(static_cast<long>(draws.integer(1, 20))));
    }
    return lp;
}

std::vector<Point> random_points(std::size_t d, std::size_t n, std::uint64_t seed) {
    SeededDraws draws(seed);
    std::vector<Point> points(n, Point(d));
    for (auto& p : points) {
        for (auto& x : p) x = Rational(static_cast<long>(draws.integer(-3, 3)));
    }
    return points;
}

}  // namespace

static void BM_LpSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const LinearProgram lp = dense_lp(n, n, 42);
    for (auto _ : state) benchmark::DoNotOptimize(lp_solve(lp));
}
BENCHMARK(BM_LpSolve)->Arg(8)->Arg(16)->Arg(32);

static void BM_MaxSupportSeparator(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto points = random_points(d, 8, 7);
    for (auto _ : state) benchmark::DoNotOptimize(max_support_separator(points));
}
BENCHMARK(BM_MaxSupportSeparator)->DenseRange(1, 3);

static void BM_CorpusScheme(benchmark::State& state) {
    std::vector<MarketModel> markets;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) markets.push_back(random_market(seed));
    for (auto _ : state) {
        for (const auto& m : markets) benchmark::DoNotOptimize(run_partition_scheme(m, m.all_options()));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(markets.size()));
}
BENCHMARK(BM_CorpusScheme)->Unit(benchmark::kMillisecond);

static void BM_CorpusDuality(benchmark::State& state) {
    std::vector<MarketModel> markets;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) markets.push_back(random_market(seed));
    for (auto _ : state) {
        for (std::size_t i = 0; i < markets.size(); ++i) {
            const auto& m = markets[i];
            benchmark::DoNotOptimize(duality_report(m, m.all_options(), random_payoff(i, m.num_scenarios())));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(markets.size()));
}
BENCHMARK(BM_CorpusDuality)->Unit(benchmark::kMillisecond);
