#pragma once

#include "pwftap/convex.hpp"
#include "pwftap/filtration.hpp"
#include "pwftap/finite_measure.hpp"
#include "pwftap/lp.hpp"
#include "pwftap/market.hpp"
#include "pwftap/strategy.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pwftap {

enum class ArbitrageKind { one_point, strong, uniformly_strong, class_S };

std::string to_string(ArbitrageKind kind);

struct ArbitrageFinding {
    ArbitrageKind kind = ArbitrageKind::one_point;
    bool found = false;
    std::optional<Strategy> strategy;  ///< witness when found
    Payoff payoff;                     ///< witness payoff on every scenario
    Rational epsilon;                  ///< strong kinds: best uniform gain with |alpha|, |H| <= 1
    ScenarioSet witness_set;           ///< scenarios of Omega with strictly positive gain
    std::optional<ScenarioSet> target; ///< class_S: the family member that is charged
    LpOutcome certificate;             ///< LP outcome proving absence when not found
    std::string note;
};

using FiltrationPtr = std::shared_ptr<const FiltrationPartition>;

/// Semi-static payoff >= 0 on omega and > 0 somewhere on omega.
ArbitrageFinding detect_one_point(const MarketModel& market, const ScenarioSet& omega,
                                  const std::vector<Payoff>& options, FiltrationPtr filtration);
ArbitrageFinding detect_one_point(const MarketModel& market, const OptionSelection& selection, FiltrationPtr filtration);

/// Payoff > 0 on all of omega. On a finite omega this coincides with a
/// uniformly strong arbitrage; both detectors solve the same LP.
ArbitrageFinding detect_strong(const MarketModel& market, const ScenarioSet& omega, const std::vector<Payoff>& options,
                               FiltrationPtr filtration);
ArbitrageFinding detect_strong(const MarketModel& market, const OptionSelection& selection, FiltrationPtr filtration);

ArbitrageFinding detect_uniformly_strong(const MarketModel& market, const ScenarioSet& omega,
                                         const std::vector<Payoff>& options, FiltrationPtr filtration);
ArbitrageFinding detect_uniformly_strong(const MarketModel& market, const OptionSelection& selection,
                                         FiltrationPtr filtration);

/// Payoff >= 0 on omega and >= 1 on some member of `family`. Throws
/// PreconditionError if the family contains the empty set.
ArbitrageFinding detect_class_S(const MarketModel& market, const ScenarioSet& omega, const std::vector<Payoff>& options,
                                FiltrationPtr filtration, const std::vector<ScenarioSet>& family);
ArbitrageFinding detect_class_S(const MarketModel& market, const OptionSelection& selection, FiltrationPtr filtration,
                                const std::vector<ScenarioSet>& family);

struct ConditionalSupport {
    std::vector<ScenarioIndex> atom;  ///< atom of F^{S,Y}_{t-1}
    bool unconstrained = false;       ///< atom has zero p-mass
    std::vector<Point> points;        ///< distinct increments charged by p, sorted
};

/// Support of the conditional law of Delta S_t given F^{S,Y}_{t-1}, per atom.
std::vector<ConditionalSupport> conditional_support(const MarketModel& market, const FiniteMeasure& p, std::size_t t);

struct DmwReport {
    ScenarioSet U;        ///< scenarios whose increments lie in the conditional supports
    ScenarioSet U_star;   ///< efficient subset of U
    ScenarioSet omega_P;  ///< U if P(U*) > 0, else U minus U*
    ScenarioSet omega_P_star;

    bool no_classical_arbitrage = false;    ///< no (F^{S,Y}, P)-arbitrage
    bool full_mass_on_efficient = false;    ///< P((Omega^P)*) = 1
    bool equivalent_measure_exists = false; ///< some martingale Q ~ P
    bool agree = false;

    bool no_strong_arbitrage_on_omega_P = false;  ///< in the aggregating filtration of Omega^P
    bool dominated_measure_exists = false;        ///< some martingale Q << P
    bool agree_dominated = false;

    std::optional<Strategy> classical_arbitrage;  ///< witness when one exists
    std::optional<FiniteMeasure> equivalent_measure;
};

/// Classical probabilistic FTAP read through scenario sets (no options).
DmwReport dmw_analysis(const MarketModel& market, const FiniteMeasure& p);

}  // namespace pwftap
