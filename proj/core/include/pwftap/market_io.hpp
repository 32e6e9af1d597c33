#pragma once

#include "pwftap/finite_measure.hpp"
#include "pwftap/market.hpp"

#include <string>
#include <string_view>

namespace pwftap {

/// Parses a market document:
///
///     {"T": 1, "d": 1, "d_factors": 0,
///      "scenarios": [{"id": "up", "S": [[2], [3]], "Y": [[], []]}, ...],
///      "omega": ["up", ...],
///      "options": [{"name": "call", "payoff": {"up": "2/5", ...}}]}
///
/// Rationals are JSON integers or strings "p/q" / "n" / finite decimals.
/// `d_factors`, `Y` (when d_factors is 0), `omega` and `options` are optional.
/// Unknown fields are rejected. Throws ParseError (with line:column or a field
/// path) or ValidationError.
MarketModel load_market(std::string_view text);
MarketModel load_market_file(const std::string& path);

/// Inverse of load_market; rationals are written as "p/q" strings.
std::string serialize_market(const MarketModel& market);

/// Parses {"weights": {"id": rational, ...}}; unlisted scenarios get weight 0.
FiniteMeasure load_measure(std::string_view text, const MarketModel& market);

/// Parses {"payoff": {"id": rational, ...}} with an entry for every scenario.
Payoff load_payoff(std::string_view text, const MarketModel& market);

std::string read_text_file(const std::string& path);

}  // namespace pwftap
