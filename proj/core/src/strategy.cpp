#include "pwftap/strategy.hpp"

#include "pwftap/errors.hpp"

namespace pwftap {

Strategy Strategy::zero(const MarketModel& market, std::size_t k,
                        std::shared_ptr<const FiltrationPartition> filtration) {
    Strategy s;
    const std::size_t n = market.num_scenarios();
    s.alpha.assign(n, std::vector<Rational>(k));
    s.H.assign(market.horizon(), std::vector<std::vector<Rational>>(n, std::vector<Rational>(market.num_assets())));
    s.filtration = std::move(filtration);
    return s;
}

void Strategy::set_alpha_everywhere(const std::vector<Rational>& weights) {
    for (auto& a : alpha) a = weights;
}

void Strategy::set_holding_on_atom(std::size_t t, std::size_t atom, const std::vector<Rational>& holding) {
    if (!filtration) throw PreconditionError("strategy has no filtration");
    for (ScenarioIndex w : filtration->atoms(t - 1).at(atom)) H.at(t - 1).at(w) = holding;
}

Strategy Strategy::combine(const Rational& a, const Strategy& other, const Rational& b) const {
    Strategy out = *this;
    for (std::size_t w = 0; w < alpha.size(); ++w) {
        for (std::size_t j = 0; j < alpha[w].size(); ++j) out.alpha[w][j] = a * alpha[w][j] + b * other.alpha[w][j];
    }
    for (std::size_t t = 0; t < H.size(); ++t) {
        for (std::size_t w = 0; w < H[t].size(); ++w) {
            for (std::size_t j = 0; j < H[t][w].size(); ++j) out.H[t][w][j] = a * H[t][w][j] + b * other.H[t][w][j];
        }
    }
    return out;
}

Rational strategy_payoff(const MarketModel& market, const std::vector<Payoff>& option_payoffs,
                         const Strategy& strategy, ScenarioIndex w) {
    Rational total = 0;
    const auto& a = strategy.alpha.at(w);
    if (a.size() != option_payoffs.size()) {
        throw PreconditionError("strategy_payoff: alpha has " + std::to_string(a.size()) + " entries but " +
                                std::to_string(option_payoffs.size()) + " option payoffs were given");
    }
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (sgn(a[j]) != 0) total += a[j] * option_payoffs[j][w];
    }
    for (std::size_t t = 1; t <= market.horizon(); ++t) total += dot(strategy.H.at(t - 1).at(w), market.increment(w, t));
    return total;
}

Payoff strategy_payoff_vector(const MarketModel& market, const std::vector<Payoff>& option_payoffs,
                              const Strategy& strategy) {
    Payoff out(market.num_scenarios());
    for (std::size_t w = 0; w < out.size(); ++w) out[w] = strategy_payoff(market, option_payoffs, strategy, w);
    return out;
}

bool is_predictable(const MarketModel& market, const Strategy& strategy, const FiltrationPartition& filtration) {
    if (filtration.universe_size() != market.num_scenarios() || filtration.horizon() != market.horizon()) return false;
    for (const auto& atom : filtration.atoms(0)) {
        for (ScenarioIndex w : atom) {
            if (strategy.alpha.at(w) != strategy.alpha.at(atom.front())) return false;
        }
    }
    for (std::size_t t = 1; t <= market.horizon(); ++t) {
        for (const auto& atom : filtration.atoms(t - 1)) {
            for (ScenarioIndex w : atom) {
                if (strategy.H.at(t - 1).at(w) != strategy.H.at(t - 1).at(atom.front())) return false;
            }
        }
    }
    return true;
}

}  // namespace pwftap
