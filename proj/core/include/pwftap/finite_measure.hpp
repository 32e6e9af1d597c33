#pragma once

#include "pwftap/rational.hpp"
#include "pwftap/scenario_set.hpp"

#include <vector>

namespace pwftap {

/// Probability with nonnegative rational weights on a finite scenario space.
class FiniteMeasure {
public:
    /// Throws ValidationError unless weights are nonnegative and sum to one.
    explicit FiniteMeasure(std::vector<Rational> weights);

    static FiniteMeasure dirac(std::size_t universe_size, ScenarioIndex w);

    std::size_t universe_size() const { return weights_.size(); }
    const Rational& weight(ScenarioIndex w) const { return weights_.at(w); }
    const std::vector<Rational>& weights() const { return weights_; }

    ScenarioSet support() const;
    Rational mass(const ScenarioSet& set) const;
    Rational expectation(const Payoff& g) const;

    friend bool operator==(const FiniteMeasure&, const FiniteMeasure&) = default;

private:
    std::vector<Rational> weights_;
};

}  // namespace pwftap
