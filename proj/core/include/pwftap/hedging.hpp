#pragma once

#include "pwftap/finite_measure.hpp"
#include "pwftap/market.hpp"
#include "pwftap/strategy.hpp"

#include <optional>
#include <string>

namespace pwftap {

struct SuperhedgeResult {
    ExtendedRational value = ExtendedRational::minus_infinity();
    /// Attaining strategy (static weights constant, H in F^{S,Y}); present
    /// exactly when the value is finite.
    std::optional<Strategy> strategy;
};

/// pi_{a,Phi}(g) = inf{x : x + alpha.Phi + (H o S)_T >= g on a}. Minus
/// infinity when a is empty or the LP is unbounded.
SuperhedgeResult superhedge(const MarketModel& market, const ScenarioSet& a, const std::vector<Payoff>& options,
                            const Payoff& g);
SuperhedgeResult superhedge(const MarketModel& market, const ScenarioSet& a, const OptionSelection& selection,
                            const Payoff& g);

struct DualValueResult {
    ExtendedRational value = ExtendedRational::minus_infinity();
    std::optional<FiniteMeasure> maximiser;
};

/// sup E_Q[g] over calibrated martingale measures on omega; minus infinity
/// when there are none.
DualValueResult dual_value(const MarketModel& market, const ScenarioSet& omega, const std::vector<Payoff>& options,
                           const Payoff& g);
DualValueResult dual_value(const MarketModel& market, const OptionSelection& selection, const Payoff& g);

struct DualityReport {
    ScenarioSet efficient_set;        ///< Omega*_Phi, the hedge set of the duality
    SuperhedgeResult primal;          ///< superhedge on Omega*_Phi
    DualValueResult dual;             ///< sup over calibrated measures
    bool gap_zero = false;            ///< primal == dual (both -inf counts as equal)
    SuperhedgeResult primal_on_omega; ///< superhedge on the whole Omega
    bool gap_on_omega = false;        ///< primal_on_omega != dual
    std::string summary;
};

DualityReport duality_report(const MarketModel& market, const OptionSelection& selection, const Payoff& g);

struct VariationalIdentity {
    ExtendedRational lhs = ExtendedRational::minus_infinity();  ///< pi with options phi_1..phi_{n+1}
    ExtendedRational rhs = ExtendedRational::minus_infinity();  ///< inf_l pi with phi_1..phi_n of g - l phi_{n+1}
    bool equal = false;
};

/// Both sides on Omega*_Phi of the selected options; requires n < k.
VariationalIdentity variational_identity_check(const MarketModel& market, const OptionSelection& selection,
                                               const Payoff& g, std::size_t n);

}  // namespace pwftap
