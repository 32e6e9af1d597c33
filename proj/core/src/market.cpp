#include "pwftap/market.hpp"

#include "pwftap/errors.hpp"

#include <map>
#include <set>

namespace pwftap {

MarketModel MarketModel::create(MarketData data) {
    if (data.horizon < 1) throw ValidationError("horizon T must be at least 1");
    if (data.num_assets < 1) throw ValidationError("number of assets d must be at least 1");
    if (data.scenarios.empty()) throw ValidationError("scenario set X is empty");
    for (auto& path : data.scenarios) {
        for (auto* matrix : {&path.prices, &path.factors}) {
            for (auto& row : *matrix) {
                for (auto& v : row) v.canonicalize();
            }
        }
    }
    for (auto& option : data.options) {
        for (auto& v : option.payoff) v.canonicalize();
    }

    std::map<std::string, ScenarioIndex> index;
    for (std::size_t w = 0; w < data.scenarios.size(); ++w) {
        const ScenarioPath& path = data.scenarios[w];
        const std::string where = "scenario '" + path.id + "'";
        if (path.id.empty()) throw ValidationError("scenario " + std::to_string(w) + " has an empty id");
        if (!index.emplace(path.id, w).second) throw ValidationError("duplicate scenario id '" + path.id + "'");
        if (path.prices.size() != data.horizon + 1) {
            throw ValidationError(where + ": S must have T+1 = " + std::to_string(data.horizon + 1) + " time rows");
        }
        for (const auto& row : path.prices) {
            if (row.size() != data.num_assets) throw ValidationError(where + ": S rows must have d entries");
        }
        if (path.factors.size() != data.horizon + 1) {
            throw ValidationError(where + ": Y must have T+1 = " + std::to_string(data.horizon + 1) + " time rows");
        }
        for (const auto& row : path.factors) {
            if (row.size() != data.num_factors) throw ValidationError(where + ": Y rows must have d_factors entries");
        }
    }
    const ScenarioPath& first = data.scenarios.front();
    for (const auto& path : data.scenarios) {
        if (path.factors[0] != first.factors[0]) throw ValidationError("Y_0 is not constant across scenarios");
        if (path.prices[0] != first.prices[0]) throw ValidationError("S_0 is not constant across scenarios");
    }

    MarketModel model;
    const std::size_t n = data.scenarios.size();
    if (data.omega) {
        model.omega_ = ScenarioSet(n);
        for (const auto& id : *data.omega) {
            auto it = index.find(id);
            if (it == index.end()) throw ValidationError("omega names unknown scenario '" + id + "'");
            model.omega_.insert(it->second);
        }
        if (model.omega_.empty()) throw ValidationError("empty Ω: omega must contain at least one scenario");
    } else {
        model.omega_ = ScenarioSet::full(n);
    }

    std::set<std::string> option_names;
    for (const auto& option : data.options) {
        if (option.name.empty()) throw ValidationError("option with empty name");
        if (!option_names.insert(option.name).second) throw ValidationError("duplicate option name '" + option.name + "'");
        if (option.payoff.size() != n) {
            throw ValidationError("option '" + option.name + "' must have a payoff entry for every scenario");
        }
    }

    model.increments_.assign(data.horizon, std::vector<std::vector<Rational>>(n));
    for (std::size_t t = 1; t <= data.horizon; ++t) {
        for (std::size_t w = 0; w < n; ++w) {
            auto& inc = model.increments_[t - 1][w];
            inc.resize(data.num_assets);
            for (std::size_t j = 0; j < data.num_assets; ++j) {
                inc[j] = data.scenarios[w].prices[t][j] - data.scenarios[w].prices[t - 1][j];
            }
        }
    }
    model.data_ = std::move(data);
    return model;
}

std::optional<ScenarioIndex> MarketModel::index_of(const std::string& id) const {
    for (std::size_t w = 0; w < data_.scenarios.size(); ++w) {
        if (data_.scenarios[w].id == id) return w;
    }
    return std::nullopt;
}

OptionSelection MarketModel::all_options() const {
    OptionSelection all(num_options());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    return all;
}

OptionSelection MarketModel::select_options(const std::vector<std::string>& names) const {
    OptionSelection out;
    for (const auto& name : names) {
        bool found = false;
        for (std::size_t j = 0; j < data_.options.size(); ++j) {
            if (data_.options[j].name == name) {
                out.push_back(j);
                found = true;
                break;
            }
        }
        if (!found) throw ValidationError("unknown option '" + name + "'");
    }
    return out;
}

std::vector<Payoff> MarketModel::option_payoffs(const OptionSelection& selection) const {
    std::vector<Payoff> out;
    out.reserve(selection.size());
    for (std::size_t j : selection) out.push_back(data_.options.at(j).payoff);
    return out;
}

MarketModel MarketModel::with_omega(const ScenarioSet& omega) const {
    if (omega.universe_size() != num_scenarios()) throw ValidationError("omega lives in a different scenario space");
    if (omega.empty()) throw ValidationError("empty Ω: omega must contain at least one scenario");
    MarketModel copy(*this);
    copy.omega_ = omega;
    std::vector<std::string> ids;
    for (ScenarioIndex w : omega.members()) ids.push_back(scenario_id(w));
    copy.data_.omega = std::move(ids);
    return copy;
}

}  // namespace pwftap
