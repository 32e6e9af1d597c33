#pragma once

#include "pwftap/detectors.hpp"
#include "pwftap/filtration.hpp"
#include "pwftap/finite_measure.hpp"
#include "pwftap/market.hpp"
#include "pwftap/strategy.hpp"

#include <json.hpp>

namespace pwftap::cli {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& v);
Json extended_json(const ExtendedRational& v);
Json vector_json(const std::vector<Rational>& v);
/// Scenario ids of the members, in scenario order.
Json set_json(const MarketModel& market, const ScenarioSet& set);
/// {"id": value} for every scenario.
Json payoff_json(const MarketModel& market, const Payoff& payoff);
/// {"id": weight} for the scenarios with positive weight.
Json measure_json(const MarketModel& market, const FiniteMeasure& q);
/// Static weights per time-0 atom and holdings per (t, atom at t-1) of the
/// strategy's own filtration.
Json strategy_json(const MarketModel& market, const Strategy& s);
Json filtration_json(const MarketModel& market, const FiltrationPartition& f);
Json finding_json(const MarketModel& market, const ArbitrageFinding& f);
Json market_digest(const MarketModel& market, const OptionSelection& selection);

}  // namespace pwftap::cli
