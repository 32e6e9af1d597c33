#pragma once

#include "pwftap/rational.hpp"
#include "pwftap/scenario_set.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pwftap {

/// Statically traded option: time-T payoff net of its (zero-normalised) cost.
struct Option {
    std::string name;
    Payoff payoff;  ///< one entry per scenario

    friend bool operator==(const Option&, const Option&) = default;
};

struct ScenarioPath {
    std::string id;
    std::vector<std::vector<Rational>> prices;   ///< [t][asset], t = 0..T
    std::vector<std::vector<Rational>> factors;  ///< [t][factor], t = 0..T

    friend bool operator==(const ScenarioPath&, const ScenarioPath&) = default;
};

/// Raw market description as read from a file, before validation.
struct MarketData {
    std::size_t horizon = 1;
    std::size_t num_assets = 1;
    std::size_t num_factors = 0;
    std::vector<ScenarioPath> scenarios;
    std::optional<std::vector<std::string>> omega;  ///< defaults to every scenario
    std::vector<Option> options;

    friend bool operator==(const MarketData&, const MarketData&) = default;
};

/// Indices into MarketModel::options().
using OptionSelection = std::vector<std::size_t>;

/// Validated finite scenario market: scenario space X, price process S,
/// factor process Y, model Omega and static options. Immutable.
class MarketModel {
public:
    /// Throws ValidationError naming the violated invariant.
    static MarketModel create(MarketData data);

    std::size_t horizon() const { return data_.horizon; }
    std::size_t num_assets() const { return data_.num_assets; }
    std::size_t num_factors() const { return data_.num_factors; }
    std::size_t num_scenarios() const { return data_.scenarios.size(); }
    std::size_t num_options() const { return data_.options.size(); }

    const std::string& scenario_id(ScenarioIndex w) const { return data_.scenarios.at(w).id; }
    std::optional<ScenarioIndex> index_of(const std::string& id) const;

    std::span<const Rational> price(ScenarioIndex w, std::size_t t) const { return data_.scenarios[w].prices[t]; }
    std::span<const Rational> factor(ScenarioIndex w, std::size_t t) const { return data_.scenarios[w].factors[t]; }
    /// Delta S_t(w) = S_t(w) - S_{t-1}(w), for 1 <= t <= T.
    std::span<const Rational> increment(ScenarioIndex w, std::size_t t) const { return increments_[t - 1][w]; }

    const ScenarioSet& omega() const { return omega_; }
    ScenarioSet all_scenarios() const { return ScenarioSet::full(num_scenarios()); }

    const std::vector<Option>& options() const { return data_.options; }
    OptionSelection all_options() const;
    /// Resolves option names; throws ValidationError on unknown names.
    OptionSelection select_options(const std::vector<std::string>& names) const;
    std::vector<Payoff> option_payoffs(const OptionSelection& selection) const;

    /// Same market with a different model Omega (must be nonempty).
    MarketModel with_omega(const ScenarioSet& omega) const;

    const MarketData& data() const { return data_; }

private:
    MarketModel() = default;

    MarketData data_;
    ScenarioSet omega_;
    std::vector<std::vector<std::vector<Rational>>> increments_;  // [t-1][w][asset]
};

}  // namespace pwftap
