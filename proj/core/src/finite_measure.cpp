#include "pwftap/finite_measure.hpp"

#include "pwftap/errors.hpp"

namespace pwftap {

FiniteMeasure::FiniteMeasure(std::vector<Rational> weights) : weights_(std::move(weights)) {
    Rational total = 0;
    for (const auto& w : weights_) {
        if (sgn(w) < 0) throw ValidationError("measure has a negative weight");
        total += w;
    }
    if (total != 1) throw ValidationError("measure weights sum to " + to_string(total) + ", not 1");
}

FiniteMeasure FiniteMeasure::dirac(std::size_t universe_size, ScenarioIndex w) {
    std::vector<Rational> weights(universe_size);
    weights.at(w) = 1;
    return FiniteMeasure(std::move(weights));
}

ScenarioSet FiniteMeasure::support() const {
    ScenarioSet out(weights_.size());
    for (std::size_t w = 0; w < weights_.size(); ++w) {
        if (sgn(weights_[w]) > 0) out.insert(w);
    }
    return out;
}

Rational FiniteMeasure::mass(const ScenarioSet& set) const {
    Rational total = 0;
    for (ScenarioIndex w : set.members()) total += weights_.at(w);
    return total;
}

Rational FiniteMeasure::expectation(const Payoff& g) const {
    return dot(weights_, g);
}

}  // namespace pwftap
