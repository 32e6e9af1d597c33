#include "pwftap/hedging.hpp"

#include "pwftap/errors.hpp"
#include "pwftap/measures.hpp"
#include "strategy_lp.hpp"

namespace pwftap {

namespace {

/// min x s.t. x + alpha.Phi + (H o S)_T + l.extra >= g on a, where the
/// optional `extra` payoff enters with a free weight l that is not part of
/// the returned strategy.
SuperhedgeResult superhedge_lp(const MarketModel& market, const ScenarioSet& a, const std::vector<Payoff>& options,
                               const Payoff& g, const Payoff* extra) {
    SuperhedgeResult out;
    if (g.size() != market.num_scenarios()) throw PreconditionError("superhedge: payoff has wrong length");
    if (a.empty()) return out;
    auto natural = std::make_shared<const FiltrationPartition>(natural_filtration(market));
    const detail::StrategyLayout layout(market, natural, options, a, 1);
    const std::size_t l_var = layout.end();
    const std::size_t num_vars = l_var + (extra ? 1 : 0);
    LinearProgram lp(num_vars, Sense::minimize);
    lp.objective[0] = 1;
    for (ScenarioIndex w : a.members()) {
        std::vector<Rational> row(num_vars);
        row[0] = 1;
        layout.add_payoff(row, w);
        if (extra) row[l_var] = (*extra)[w];
        lp.add_constraint(std::move(row), Relation::greater_equal, g[w]);
    }
    LpOutcome res = lp_solve(lp);
    if (res.status == LpStatus::unbounded) return out;
    if (res.status != LpStatus::optimal) throw InvariantBreach("superhedging LP is infeasible");
    if (!verify_certificate(lp, res)) throw InvariantBreach("superhedging LP certificate does not verify");
    Strategy s = layout.extract(res.primal);
    Payoff gains = strategy_payoff_vector(market, options, s);
    for (ScenarioIndex w : a.members()) {
        Rational total = res.value + gains[w];
        if (extra) total += res.primal[l_var] * (*extra)[w];
        if (total < g[w]) throw InvariantBreach("superhedging strategy fails to dominate the payoff");
    }
    out.value = ExtendedRational::finite(res.value);
    out.strategy = std::move(s);
    return out;
}

bool same_value(const ExtendedRational& a, const ExtendedRational& b) { return a == b; }

}  // namespace

SuperhedgeResult superhedge(const MarketModel& market, const ScenarioSet& a, const std::vector<Payoff>& options,
                            const Payoff& g) {
    return superhedge_lp(market, a, options, g, nullptr);
}

SuperhedgeResult superhedge(const MarketModel& market, const ScenarioSet& a, const OptionSelection& selection,
                            const Payoff& g) {
    return superhedge(market, a, market.option_payoffs(selection), g);
}

DualValueResult dual_value(const MarketModel& market, const ScenarioSet& omega, const std::vector<Payoff>& options,
                           const Payoff& g) {
    DualValueResult out;
    CalibratedMeasureProblem problem(market, omega, options);
    auto best = problem.optimize_expectation(g, Sense::maximize);
    if (!best) return out;
    out.value = ExtendedRational::finite(best->first);
    out.maximiser = std::move(best->second);
    return out;
}

DualValueResult dual_value(const MarketModel& market, const OptionSelection& selection, const Payoff& g) {
    return dual_value(market, market.omega(), market.option_payoffs(selection), g);
}

DualityReport duality_report(const MarketModel& market, const OptionSelection& selection, const Payoff& g) {
    const std::vector<Payoff> options = market.option_payoffs(selection);
    DualityReport r;
    r.efficient_set = efficient_set_oracle(CalibratedMeasureProblem(market, market.omega(), options));
    r.primal = superhedge(market, r.efficient_set, options, g);
    r.dual = dual_value(market, market.omega(), options, g);
    r.gap_zero = same_value(r.primal.value, r.dual.value);
    r.primal_on_omega = superhedge(market, market.omega(), options, g);
    r.gap_on_omega = !same_value(r.primal_on_omega.value, r.dual.value);
    if (!r.gap_zero) {
        r.summary = "duality violated on the efficient set: primal " + r.primal.value.to_string() + ", dual " +
                    r.dual.value.to_string();
        return r;
    }
    r.summary = r.gap_on_omega ? "gap on Omega, no gap on the efficient set" : "no gap on Omega or on the efficient set";
    if (r.primal.value.is_minus_infinity()) r.summary += " (efficient set empty: both sides -inf)";
    return r;
}

VariationalIdentity variational_identity_check(const MarketModel& market, const OptionSelection& selection,
                                               const Payoff& g, std::size_t n) {
    if (n >= selection.size()) {
        throw PreconditionError("variational_identity_check: need n < k (k = " + std::to_string(selection.size()) + ")");
    }
    const std::vector<Payoff> all = market.option_payoffs(selection);
    const ScenarioSet efficient = efficient_set_oracle(CalibratedMeasureProblem(market, market.omega(), all));
    const std::vector<Payoff> first_n(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
    const std::vector<Payoff> first_n1(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n + 1));
    VariationalIdentity out;
    out.lhs = superhedge(market, efficient, first_n1, g).value;
    out.rhs = superhedge_lp(market, efficient, first_n, g, &all[n]).value;
    out.equal = out.lhs == out.rhs;
    return out;
}

}  // namespace pwftap
