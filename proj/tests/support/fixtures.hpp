#pragma once

#include "pwftap/market.hpp"

#include <string>

namespace pwftap::testing {

/// One period, S_0 = 2, S_1 in {3, 1} (ids "u", "d").
MarketModel market_m1();
/// One period, S_0 = 3, S_1 in {3, 1}.
MarketModel market_m2();
/// One period, S_0 = 3, S_1 in {1, 2}.
MarketModel market_m3();
/// market_m1 plus a call with strike 2 bought at `cost` (payoff (S_1 - 2)^+ - cost).
MarketModel market_m4(const Rational& cost);

/// Knock-in call grid: X = {0, 1/4, ..., 4}^2, S_0 = 2, S_1 = x_1, S_2 = x_2 and
/// phi_i = (x_2 - K_i)^+ 1{x_1 <= b} + c 1{x_1 > b} - c for K_1 = 2, K_2 = 1, c = 1/4.
MarketModel knock_in_grid(const Rational& barrier);

/// Scenario id of grid point (x1, x2) given in quarters.
std::string grid_id(int x1_quarters, int x2_quarters);

ScenarioIndex index(const MarketModel& market, const std::string& id);

}  // namespace pwftap::testing
