#pragma once

#include "pwftap/filtration.hpp"
#include "pwftap/market.hpp"

#include <memory>
#include <vector>

namespace pwftap {

/// Semi-static strategy (alpha, H). Values are stored per scenario so that
/// strategies predictable in an enlarged filtration (whose alpha may differ
/// between atoms of the time-0 partition) share one representation.
struct Strategy {
    /// alpha[w] = static option weights used on scenario w (k entries).
    std::vector<std::vector<Rational>> alpha;
    /// H[t-1][w] = holdings in the d assets over (t-1, t] on scenario w.
    std::vector<std::vector<std::vector<Rational>>> H;
    std::shared_ptr<const FiltrationPartition> filtration;

    /// Zero strategy with k option weights.
    static Strategy zero(const MarketModel& market, std::size_t k, std::shared_ptr<const FiltrationPartition> filtration);

    std::size_t num_option_weights() const { return alpha.empty() ? 0 : alpha.front().size(); }

    void set_alpha_everywhere(const std::vector<Rational>& weights);
    /// Sets H_t on every scenario of the given atom of the filtration at t-1.
    void set_holding_on_atom(std::size_t t, std::size_t atom, const std::vector<Rational>& holding);

    /// Returns a*this + b*other scenario-wise (same filtration as *this).
    Strategy combine(const Rational& a, const Strategy& other, const Rational& b) const;
};

/// alpha.Phi(w) + sum_t H_t(w).(S_t(w) - S_{t-1}(w)). `option_payoffs` are the
/// payoffs matching the strategy's alpha entries.
Rational strategy_payoff(const MarketModel& market, const std::vector<Payoff>& option_payoffs,
                         const Strategy& strategy, ScenarioIndex w);

Payoff strategy_payoff_vector(const MarketModel& market, const std::vector<Payoff>& option_payoffs,
                              const Strategy& strategy);

/// True iff alpha is constant on the atoms at time 0 and every H_t is
/// constant on the atoms at time t-1 of `filtration`.
bool is_predictable(const MarketModel& market, const Strategy& strategy, const FiltrationPartition& filtration);

}  // namespace pwftap
