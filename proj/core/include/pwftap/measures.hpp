#pragma once

#include "pwftap/filtration.hpp"
#include "pwftap/finite_measure.hpp"
#include "pwftap/lp.hpp"
#include "pwftap/market.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pwftap {

/// The polytope of martingale measures supported on `omega` that price every
/// option in `options` at zero: Q >= 0, sum Q = 1, Q = 0 off omega, and
/// sum_{w in atom} Q(w) Delta S_t(w) = 0 for each atom of F^{S,Y}_{t-1}.
/// LP variables are the weights of the scenarios of omega, in index order.
class CalibratedMeasureProblem {
public:
    CalibratedMeasureProblem(const MarketModel& market, const ScenarioSet& omega, std::vector<Payoff> options);
    CalibratedMeasureProblem(const MarketModel& market, const OptionSelection& selection);

    const std::vector<ScenarioIndex>& variables() const { return scenarios_; }
    /// LP index of scenario w, if w is in omega.
    std::optional<std::size_t> variable_of(ScenarioIndex w) const;

    /// The constraint system with a zero objective of the given sense.
    LinearProgram base_lp(Sense sense) const;
    FiniteMeasure to_measure(const std::vector<Rational>& primal) const;

    /// Exact re-verification of every constraint of the polytope.
    bool contains(const FiniteMeasure& q) const;

    /// Any member of the polytope, if nonempty.
    std::optional<FiniteMeasure> find_member() const;
    /// Optimum of sense E_Q[g] over the polytope (nullopt when empty).
    std::optional<std::pair<Rational, FiniteMeasure>> optimize_expectation(const Payoff& g, Sense sense) const;
    /// max Q(set) over the polytope (nullopt when empty).
    std::optional<std::pair<Rational, FiniteMeasure>> max_mass(const ScenarioSet& set) const;

    const MarketModel& market() const { return market_; }
    const ScenarioSet& omega() const { return omega_; }
    const std::vector<Payoff>& options() const { return options_; }

private:
    const MarketModel& market_;
    ScenarioSet omega_;
    std::vector<Payoff> options_;
    std::vector<ScenarioIndex> scenarios_;
    std::vector<std::size_t> variable_;
};

/// Positive conditional weights on scenarios of the time-(t-1) atom of w
/// within b0 whose increments average to zero and which charge w.
/// Throws PreconditionError if w is not in b0 or 0 is not in the relative
/// interior of the increments of b0 on that atom.
std::vector<std::pair<ScenarioIndex, Rational>> one_step_calibrating_kernel(const MarketModel& market, std::size_t t,
                                                                            ScenarioIndex w, const ScenarioSet& b0);

/// Martingale measure (no options) supported on the efficient set with
/// positive weight on omega_star, built from one-step kernels along the
/// scenario tree. Throws PreconditionError if omega_star is not efficient.
FiniteMeasure measure_charging_scenario(const MarketModel& market, const ScenarioSet& omega, ScenarioIndex omega_star);
FiniteMeasure measure_charging_scenario(const MarketModel& market, ScenarioIndex omega_star);

struct MaxWeightResult {
    std::optional<Rational> value;         ///< nullopt: the polytope is empty
    std::optional<FiniteMeasure> measure;  ///< maximiser, when value exists
};

MaxWeightResult max_weight_measure(const CalibratedMeasureProblem& problem, ScenarioIndex w);
MaxWeightResult max_weight_measure(const MarketModel& market, ScenarioIndex w, const OptionSelection& selection);

/// {w in omega : some calibrated martingale measure charges w}, one LP per
/// scenario not already charged by an earlier maximiser.
ScenarioSet efficient_set_oracle(const CalibratedMeasureProblem& problem);
ScenarioSet efficient_set_oracle(const MarketModel& market, const OptionSelection& selection);

/// lambda q + (1 - lambda) q~ with E[phi] = 0, where q~ is q_minus when
/// E_q[phi] >= 0 and q_plus otherwise.
FiniteMeasure mix_calibrate(const FiniteMeasure& q, const FiniteMeasure& q_plus, const FiniteMeasure& q_minus,
                            const Payoff& phi);

/// True iff every calibrated martingale measure gives a mass zero.
bool is_polar(const MarketModel& market, const OptionSelection& selection, const ScenarioSet& a);
bool is_polar(const CalibratedMeasureProblem& problem, const ScenarioSet& a);

/// F^{S,Y} with every scenario outside the efficient set split off as a
/// singleton; the discrete filtration when no calibrated measure exists.
FiltrationPartition completed_filtration(const MarketModel& market, const OptionSelection& selection);
FiltrationPartition completed_filtration(const CalibratedMeasureProblem& problem);

}  // namespace pwftap
