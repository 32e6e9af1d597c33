#pragma once

#include "pwftap/aggregator.hpp"
#include "pwftap/filtration.hpp"
#include "pwftap/market.hpp"
#include "pwftap/strategy.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace pwftap {

struct DominatingStrategy {
    std::vector<Rational> alpha;  ///< k option weights
    Strategy strategy;            ///< alpha everywhere plus H in F^{S,Y}
    Payoff payoff;                ///< alpha.Phi + (H o S)_T on every scenario
};

/// Looks for alpha outside span(span) and F^{S,Y}-predictable H with
/// alpha.Phi + (H o S)_T >= 0 on a_star, preferring payoffs that are strictly
/// positive on as many scenarios as possible. Returns nullopt when no such
/// alpha exists (including when span already has rank k).
std::optional<DominatingStrategy> find_dominating_semistatic(const MarketModel& market,
                                                             const std::vector<Payoff>& options,
                                                             const ScenarioSet& a_star,
                                                             const std::vector<std::vector<Rational>>& span);

struct SchemeResult {
    std::size_t beta = 0;
    std::vector<std::vector<Rational>> alphas;  ///< alpha^1..alpha^beta
    std::vector<Strategy> dyn_strategies;       ///< H^1..H^beta (with alpha^i set)
    std::vector<AggregatorResult> aggregators;  ///< aggregators on A_0..A_beta
    std::vector<ScenarioSet> A;                 ///< A_0 = Omega, ..., A_beta
    std::vector<ScenarioSet> A_star;            ///< A*_0, ..., A*_beta
    bool success = false;

    /// Semi-static aggregator: >= 0 on Omega, zero exactly on A*_beta.
    Strategy combined;
    Payoff combined_payoff;
    std::shared_ptr<const FiltrationPartition> filtration;

    const ScenarioSet& final_efficient_set() const { return A_star.back(); }
};

/// Runs the pathspace partition scheme for the market's Omega and the
/// selected options.
SchemeResult run_partition_scheme(const MarketModel& market, const OptionSelection& selection);
SchemeResult run_partition_scheme(const MarketModel& market, const ScenarioSet& omega,
                                  const std::vector<Payoff>& options);

/// F^{S,Y} refined by the components of every aggregator H~^i (H~^i_t from
/// time t-1) and, when beta > 0, by the sets A_i, A*_i from time 0.
FiltrationPartition scheme_filtration(const SchemeResult& result, const MarketModel& market);

}  // namespace pwftap
