#pragma once

#include "fixtures.hpp"

#include "pwftap/filtration.hpp"
#include "pwftap/market.hpp"
#include "pwftap/scenario_set.hpp"

#include <initializer_list>
#include <memory>
#include <string>

namespace pwftap::testing {

inline ScenarioSet set_of(const MarketModel& market, std::initializer_list<std::string> ids) {
    ScenarioSet out(market.num_scenarios());
    for (const auto& id : ids) out.insert(index(market, id));
    return out;
}

inline std::shared_ptr<const FiltrationPartition> natural_ptr(const MarketModel& market) {
    return std::make_shared<const FiltrationPartition>(natural_filtration(market));
}

inline Rational q(long p, long d = 1) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

}  // namespace pwftap::testing
