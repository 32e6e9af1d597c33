#pragma once

#include "pwftap/market.hpp"

#include <cstdint>
#include <random>

namespace pwftap {

struct RandomMarketLimits {
    std::size_t max_scenarios = 12;
    std::size_t max_horizon = 3;
    std::size_t max_assets = 2;
    std::size_t max_options = 2;
    std::size_t max_factors = 1;
};

/// Deterministic pseudo-random tree market for property testing. The same
/// seed yields the same market on every platform: draws use mt19937_64 with
/// plain modulo reduction rather than the implementation-defined standard
/// distributions.
MarketModel random_market(std::uint64_t seed, const RandomMarketLimits& limits = {});

/// Random rational payoff vector (small numerators, denominators 1..4).
Payoff random_payoff(std::uint64_t seed, std::size_t num_scenarios);

/// Deterministic draws shared by the random generators.
class SeededDraws {
public:
    explicit SeededDraws(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(engine_() % span);
    }
    bool coin(std::uint64_t one_in) { return engine_() % one_in == 0; }
    Rational rational(std::int64_t max_num, std::int64_t max_den) {
        Rational r(static_cast<long>(integer(-max_num, max_num)), static_cast<unsigned long>(integer(1, max_den)));
        r.canonicalize();
        return r;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace pwftap
