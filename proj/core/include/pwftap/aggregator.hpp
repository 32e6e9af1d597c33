#pragma once

#include "pwftap/convex.hpp"
#include "pwftap/filtration.hpp"
#include "pwftap/market.hpp"
#include "pwftap/strategy.hpp"

#include <memory>
#include <vector>

namespace pwftap {

/// One application of the conditional splitting lemma at time t.
struct SplitResult {
    std::size_t time = 1;
    ScenarioSet gamma;
    std::size_t beta = 0;
    /// separators[i-1][a] = H^i on atom a of F^{S,Y}_{t-1}; zero where atom a
    /// needed fewer than i rounds.
    std::vector<std::vector<Point>> separators;
    /// cells[0] = B^0, cells[i] = B^i. Disjoint with union gamma.
    std::vector<ScenarioSet> cells;
};

/// Splits gamma at time t atom by atom of F^{S,Y}_{t-1}: repeatedly peels
/// the strict set of the maximal separator until zero is in the relative
/// interior of the remaining increments. Requires 1 <= t <= T.
SplitResult conditional_split(const MarketModel& market, std::size_t t, const ScenarioSet& gamma);

struct EfficientLadder {
    /// omega_t[t] = Omega_t for t = 0..T; omega_t[T] is the input set.
    std::vector<ScenarioSet> omega_t;
    /// splits[t-1] = conditional_split(t, Omega_t).
    std::vector<SplitResult> splits;

    const ScenarioSet& efficient_set() const { return omega_t.front(); }
};

/// Backward recursion Omega_{t-1} = Omega_t minus the strict cells at t.
/// The set may be empty; the one-argument form uses the market's Omega.
EfficientLadder efficient_scenarios(const MarketModel& market, const ScenarioSet& omega);
EfficientLadder efficient_scenarios(const MarketModel& market);

struct AggregatorResult {
    EfficientLadder ladder;
    /// Dynamic strategy (no options) with (H* o S)_T >= 0 on the input set and
    /// > 0 exactly off the efficient set; zero outside the input set.
    Strategy H_star;
    std::shared_ptr<const FiltrationPartition> filtration;

    const ScenarioSet& efficient_set() const { return ladder.efficient_set(); }
};

/// Marks under which the aggregator's H_t enters the filtration from time t-1.
std::vector<Mark> aggregator_marks(const Strategy& H_star);

AggregatorResult build_aggregator(const MarketModel& market, const ScenarioSet& omega);
AggregatorResult build_aggregator(const MarketModel& market);

}  // namespace pwftap
