#include "pwftap/measures.hpp"

#include "pwftap/aggregator.hpp"
#include "pwftap/convex.hpp"
#include "pwftap/errors.hpp"

#include <algorithm>
#include <map>

namespace pwftap {

CalibratedMeasureProblem::CalibratedMeasureProblem(const MarketModel& market, const ScenarioSet& omega,
                                                   std::vector<Payoff> options)
    : market_(market), omega_(omega), options_(std::move(options)) {
    if (omega_.universe_size() != market.num_scenarios()) {
        throw PreconditionError("measure problem: omega lives in a different scenario space");
    }
    for (const auto& phi : options_) {
        if (phi.size() != market.num_scenarios()) throw PreconditionError("measure problem: option payoff has wrong length");
    }
    scenarios_ = omega_.members();
    variable_.assign(market.num_scenarios(), market.num_scenarios());
    for (std::size_t i = 0; i < scenarios_.size(); ++i) variable_[scenarios_[i]] = i;
}

CalibratedMeasureProblem::CalibratedMeasureProblem(const MarketModel& market, const OptionSelection& selection)
    : CalibratedMeasureProblem(market, market.omega(), market.option_payoffs(selection)) {}

std::optional<std::size_t> CalibratedMeasureProblem::variable_of(ScenarioIndex w) const {
    if (w >= variable_.size() || variable_[w] == variable_.size()) return std::nullopt;
    return variable_[w];
}

LinearProgram CalibratedMeasureProblem::base_lp(Sense sense) const {
    const std::size_t n = scenarios_.size();
    LinearProgram lp(n, sense);
    for (std::size_t i = 0; i < n; ++i) lp.set_nonnegative(i);
    lp.add_constraint(std::vector<Rational>(n, Rational(1)), Relation::equal, 1);
    for (std::size_t t = 1; t <= market_.horizon(); ++t) {
        for (const auto& atom : level_set_partition(market_, t - 1)) {
            for (std::size_t j = 0; j < market_.num_assets(); ++j) {
                std::vector<Rational> row(n);
                bool nonzero = false;
                for (ScenarioIndex w : atom) {
                    auto v = variable_of(w);
                    if (!v) continue;
                    const Rational& inc = market_.increment(w, t)[j];
                    if (sgn(inc) != 0) {
                        row[*v] = inc;
                        nonzero = true;
                    }
                }
                if (nonzero) lp.add_constraint(std::move(row), Relation::equal, 0);
            }
        }
    }
    for (const auto& phi : options_) {
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = phi[scenarios_[i]];
        if (is_zero(row)) continue;
        lp.add_constraint(std::move(row), Relation::equal, 0);
    }
    return lp;
}

FiniteMeasure CalibratedMeasureProblem::to_measure(const std::vector<Rational>& primal) const {
    std::vector<Rational> weights(market_.num_scenarios());
    for (std::size_t i = 0; i < scenarios_.size(); ++i) weights[scenarios_[i]] = primal.at(i);
    FiniteMeasure q(std::move(weights));
    if (!contains(q)) throw InvariantBreach("LP returned a measure outside the calibrated martingale polytope");
    return q;
}

bool CalibratedMeasureProblem::contains(const FiniteMeasure& q) const {
    if (q.universe_size() != market_.num_scenarios()) return false;
    if (!q.support().is_subset_of(omega_)) return false;
    for (std::size_t t = 1; t <= market_.horizon(); ++t) {
        for (const auto& atom : level_set_partition(market_, t - 1)) {
            std::vector<Rational> drift(market_.num_assets());
            for (ScenarioIndex w : atom) {
                if (sgn(q.weight(w)) == 0) continue;
                auto inc = market_.increment(w, t);
                for (std::size_t j = 0; j < drift.size(); ++j) drift[j] += q.weight(w) * inc[j];
            }
            if (!is_zero(drift)) return false;
        }
    }
    for (const auto& phi : options_) {
        if (q.expectation(phi) != 0) return false;
    }
    return true;
}

std::optional<FiniteMeasure> CalibratedMeasureProblem::find_member() const {
    if (scenarios_.empty()) return std::nullopt;
    LpOutcome res = lp_solve(base_lp(Sense::maximize));
    if (res.status != LpStatus::optimal) return std::nullopt;
    return to_measure(res.primal);
}

std::optional<std::pair<Rational, FiniteMeasure>> CalibratedMeasureProblem::optimize_expectation(const Payoff& g,
                                                                                                 Sense sense) const {
    if (scenarios_.empty()) return std::nullopt;
    LinearProgram lp = base_lp(sense);
    for (std::size_t i = 0; i < scenarios_.size(); ++i) lp.objective[i] = g.at(scenarios_[i]);
    LpOutcome res = lp_solve(lp);
    if (res.status == LpStatus::infeasible) return std::nullopt;
    if (res.status != LpStatus::optimal) throw InvariantBreach("expectation over a probability simplex is unbounded");
    FiniteMeasure q = to_measure(res.primal);
    if (q.expectation(g) != res.value) throw InvariantBreach("expectation optimum does not re-verify");
    return std::make_pair(res.value, std::move(q));
}

std::optional<std::pair<Rational, FiniteMeasure>> CalibratedMeasureProblem::max_mass(const ScenarioSet& set) const {
    Payoff indicator(market_.num_scenarios());
    for (ScenarioIndex w : set.members()) indicator[w] = 1;
    return optimize_expectation(indicator, Sense::maximize);
}

std::vector<std::pair<ScenarioIndex, Rational>> one_step_calibrating_kernel(const MarketModel& market, std::size_t t,
                                                                            ScenarioIndex w, const ScenarioSet& b0) {
    if (t < 1 || t > market.horizon()) throw PreconditionError("one_step_calibrating_kernel: time must lie in 1..T");
    if (!b0.contains(w)) throw PreconditionError("one_step_calibrating_kernel: scenario is not in the kernel cell");
    FiltrationPartition natural = natural_filtration(market);
    // Distinct increment values on the atom; each represented by its first
    // scenario, or by w itself for w's own value.
    std::map<std::vector<Rational>, ScenarioIndex> representative;
    std::vector<ScenarioIndex> order;
    auto own = market.increment(w, t);
    representative.emplace(std::vector<Rational>(own.begin(), own.end()), w);
    order.push_back(w);
    for (ScenarioIndex v : natural.atom_containing(w, t - 1)) {
        if (!b0.contains(v)) continue;
        auto inc = market.increment(v, t);
        if (representative.emplace(std::vector<Rational>(inc.begin(), inc.end()), v).second) order.push_back(v);
    }
    std::vector<Point> points;
    for (ScenarioIndex v : order) {
        auto inc = market.increment(v, t);
        points.emplace_back(inc.begin(), inc.end());
    }
    std::vector<std::pair<ScenarioIndex, Rational>> out;
    for (auto& [i, weight] : zero_convex_combination(points, 0)) out.emplace_back(order[i], std::move(weight));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void distribute(const MarketModel& market, const FiltrationPartition& natural, const EfficientLadder& ladder,
                ScenarioIndex node, std::size_t t, const Rational& mass, std::vector<Rational>& weights) {
    if (t > market.horizon()) {
        weights[node] += mass;
        return;
    }
    // Kernel cell at time t is Omega_{t-1}, the B^0 cell of the split on Omega_t.
    for (const auto& [child, lambda] : one_step_calibrating_kernel(market, t, node, ladder.omega_t[t - 1])) {
        distribute(market, natural, ladder, child, t + 1, mass * lambda, weights);
    }
}

}  // namespace

FiniteMeasure measure_charging_scenario(const MarketModel& market, const ScenarioSet& omega, ScenarioIndex omega_star) {
    EfficientLadder ladder = efficient_scenarios(market, omega);
    if (!ladder.efficient_set().contains(omega_star)) {
        throw PreconditionError("measure_charging_scenario: scenario '" + market.scenario_id(omega_star) +
                                "' is not in the efficient set");
    }
    FiltrationPartition natural = natural_filtration(market);
    std::vector<Rational> weights(market.num_scenarios());
    distribute(market, natural, ladder, omega_star, 1, Rational(1), weights);
    FiniteMeasure q(std::move(weights));
    CalibratedMeasureProblem check(market, omega, {});
    if (!check.contains(q) || sgn(q.weight(omega_star)) <= 0 || !q.support().is_subset_of(ladder.efficient_set())) {
        throw InvariantBreach("measure_charging_scenario: constructed measure does not re-verify");
    }
    return q;
}

FiniteMeasure measure_charging_scenario(const MarketModel& market, ScenarioIndex omega_star) {
    return measure_charging_scenario(market, market.omega(), omega_star);
}

MaxWeightResult max_weight_measure(const CalibratedMeasureProblem& problem, ScenarioIndex w) {
    MaxWeightResult out;
    if (problem.variables().empty()) return out;
    ScenarioSet single(problem.market().num_scenarios());
    single.insert(w);
    auto best = problem.max_mass(single);
    if (!best) return out;
    out.value = best->first;
    out.measure = std::move(best->second);
    return out;
}

MaxWeightResult max_weight_measure(const MarketModel& market, ScenarioIndex w, const OptionSelection& selection) {
    return max_weight_measure(CalibratedMeasureProblem(market, selection), w);
}

ScenarioSet efficient_set_oracle(const CalibratedMeasureProblem& problem) {
    ScenarioSet charged(problem.market().num_scenarios());
    ScenarioSet decided(problem.market().num_scenarios());
    for (ScenarioIndex w : problem.variables()) {
        if (decided.contains(w)) continue;
        MaxWeightResult res = max_weight_measure(problem, w);
        if (!res.value) return charged;  // empty polytope: nothing is charged
        decided.insert(w);
        if (sgn(*res.value) > 0) {
            ScenarioSet support = res.measure->support();
            charged = charged | support;
            decided = decided | support;
        }
    }
    return charged;
}

ScenarioSet efficient_set_oracle(const MarketModel& market, const OptionSelection& selection) {
    return efficient_set_oracle(CalibratedMeasureProblem(market, selection));
}

FiniteMeasure mix_calibrate(const FiniteMeasure& q, const FiniteMeasure& q_plus, const FiniteMeasure& q_minus,
                            const Payoff& phi) {
    if (q.universe_size() != q_plus.universe_size() || q.universe_size() != q_minus.universe_size()) {
        throw PreconditionError("mix_calibrate: measures live on different scenario spaces");
    }
    if (sgn(q_plus.expectation(phi)) <= 0 || sgn(q_minus.expectation(phi)) >= 0) {
        throw PreconditionError("mix_calibrate: need E_{q_plus}[phi] > 0 and E_{q_minus}[phi] < 0");
    }
    const Rational e = q.expectation(phi);
    const FiniteMeasure& tilde = sgn(e) >= 0 ? q_minus : q_plus;
    const Rational e_tilde = tilde.expectation(phi);
    const Rational lambda = e_tilde / (e_tilde - e);
    std::vector<Rational> weights(q.universe_size());
    for (std::size_t w = 0; w < weights.size(); ++w) {
        weights[w] = lambda * q.weight(w) + (1 - lambda) * tilde.weight(w);
    }
    FiniteMeasure out(std::move(weights));
    if (out.expectation(phi) != 0) throw InvariantBreach("mix_calibrate: mixture is not calibrated");
    return out;
}

bool is_polar(const CalibratedMeasureProblem& problem, const ScenarioSet& a) {
    if (a.empty()) return true;
    auto best = problem.max_mass(a);
    return !best || sgn(best->first) == 0;
}

bool is_polar(const MarketModel& market, const OptionSelection& selection, const ScenarioSet& a) {
    return is_polar(CalibratedMeasureProblem(market, selection), a);
}

FiltrationPartition completed_filtration(const CalibratedMeasureProblem& problem) {
    const MarketModel& market = problem.market();
    const ScenarioSet efficient = efficient_set_oracle(problem);
    const bool no_measure = !problem.find_member().has_value();
    std::vector<Atoms> levels;
    for (std::size_t t = 0; t <= market.horizon(); ++t) {
        Atoms level;
        for (const auto& atom : level_set_partition(market, t)) {
            std::vector<ScenarioIndex> kept;
            for (ScenarioIndex w : atom) {
                if (no_measure || !efficient.contains(w)) {
                    level.push_back({w});
                } else {
                    kept.push_back(w);
                }
            }
            if (!kept.empty()) level.push_back(std::move(kept));
        }
        std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
        levels.push_back(std::move(level));
    }
    return FiltrationPartition(market.num_scenarios(), std::move(levels), FiltrationLabel::completed);
}

FiltrationPartition completed_filtration(const MarketModel& market, const OptionSelection& selection) {
    return completed_filtration(CalibratedMeasureProblem(market, selection));
}

}  // namespace pwftap
