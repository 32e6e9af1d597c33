#include "pwftap/detectors.hpp"

#include "pwftap/aggregator.hpp"
#include "pwftap/errors.hpp"
#include "pwftap/measures.hpp"
#include "strategy_lp.hpp"

#include <algorithm>
#include <set>

namespace pwftap {

std::string to_string(ArbitrageKind kind) {
    switch (kind) {
        case ArbitrageKind::one_point: return "one_point";
        case ArbitrageKind::strong: return "strong";
        case ArbitrageKind::uniformly_strong: return "uniformly_strong";
        case ArbitrageKind::class_S: return "class_S";
    }
    return "unknown";
}

namespace {

constexpr const char* kFiniteCollapse =
    "on a finite scenario set strict positivity everywhere and a uniform positive lower bound coincide, "
    "so strong and uniformly strong arbitrage cannot be told apart at this scale";

void fill_witness(ArbitrageFinding& f, const MarketModel& market, const ScenarioSet& omega,
                  const std::vector<Payoff>& options, Strategy s) {
    f.payoff = strategy_payoff_vector(market, options, s);
    f.witness_set = ScenarioSet(market.num_scenarios());
    for (ScenarioIndex w : omega.members()) {
        if (sgn(f.payoff[w]) < 0) throw InvariantBreach("arbitrage witness is negative on Omega");
        if (sgn(f.payoff[w]) > 0) f.witness_set.insert(w);
    }
    f.strategy = std::move(s);
}

ArbitrageFinding strong_kernel(ArbitrageKind kind, const MarketModel& market, const ScenarioSet& omega,
                               const std::vector<Payoff>& options, FiltrationPtr filtration) {
    ArbitrageFinding f;
    f.kind = kind;
    f.note = kFiniteCollapse;
    f.witness_set = ScenarioSet(market.num_scenarios());
    if (omega.empty()) {
        // Vacuous: the zero strategy is strictly positive on every scenario of the empty set.
        f.found = true;
        f.strategy = Strategy::zero(market, options.size(), filtration);
        f.payoff.assign(market.num_scenarios(), Rational(0));
        return f;
    }
    const detail::StrategyLayout layout(market, filtration, options, omega);
    const std::size_t delta = layout.end();
    LinearProgram lp(delta + 1, Sense::maximize);
    for (std::size_t j = layout.first(); j < layout.end(); ++j) lp.set_bounds(j, Rational(-1), Rational(1));
    lp.objective[delta] = 1;
    for (ScenarioIndex w : omega.members()) {
        std::vector<Rational> row(delta + 1);
        layout.add_payoff(row, w);
        row[delta] = -1;
        lp.add_constraint(std::move(row), Relation::greater_equal, 0);
    }
    LpOutcome res = lp_solve(lp);
    if (res.status != LpStatus::optimal || !verify_certificate(lp, res)) {
        throw InvariantBreach("strong arbitrage LP did not reach a certified optimum");
    }
    f.epsilon = res.value;
    if (sgn(res.value) > 0) {
        f.found = true;
        fill_witness(f, market, omega, options, layout.extract(res.primal));
        for (ScenarioIndex w : omega.members()) {
            if (f.payoff[w] < f.epsilon) throw InvariantBreach("strong arbitrage witness is below epsilon");
        }
    } else {
        f.epsilon = 0;
        f.certificate = std::move(res);
    }
    return f;
}

}  // namespace

ArbitrageFinding detect_one_point(const MarketModel& market, const ScenarioSet& omega,
                                  const std::vector<Payoff>& options, FiltrationPtr filtration) {
    ArbitrageFinding f;
    f.kind = ArbitrageKind::one_point;
    f.witness_set = ScenarioSet(market.num_scenarios());
    if (omega.empty()) return f;
    const detail::StrategyLayout layout(market, filtration, options, omega);
    const std::vector<ScenarioIndex> members = omega.members();
    const std::size_t s0 = layout.end();
    LinearProgram lp(s0 + members.size(), Sense::maximize);
    for (std::size_t i = 0; i < members.size(); ++i) {
        lp.set_bounds(s0 + i, Rational(0), Rational(1));
        lp.objective[s0 + i] = 1;
        std::vector<Rational> row(lp.num_variables());
        layout.add_payoff(row, members[i]);
        row[s0 + i] = -1;
        lp.add_constraint(std::move(row), Relation::greater_equal, 0);
    }
    LpOutcome res = lp_solve(lp);
    if (res.status != LpStatus::optimal || !verify_certificate(lp, res)) {
        throw InvariantBreach("one-point arbitrage LP did not reach a certified optimum");
    }
    if (sgn(res.value) > 0) {
        f.found = true;
        fill_witness(f, market, omega, options, layout.extract(res.primal));
        if (f.witness_set.empty()) throw InvariantBreach("one-point arbitrage witness has no strict gain");
    } else {
        f.certificate = std::move(res);
    }
    return f;
}

ArbitrageFinding detect_one_point(const MarketModel& market, const OptionSelection& selection, FiltrationPtr filtration) {
    return detect_one_point(market, market.omega(), market.option_payoffs(selection), std::move(filtration));
}

ArbitrageFinding detect_strong(const MarketModel& market, const ScenarioSet& omega, const std::vector<Payoff>& options,
                               FiltrationPtr filtration) {
    return strong_kernel(ArbitrageKind::strong, market, omega, options, std::move(filtration));
}

ArbitrageFinding detect_strong(const MarketModel& market, const OptionSelection& selection, FiltrationPtr filtration) {
    return detect_strong(market, market.omega(), market.option_payoffs(selection), std::move(filtration));
}

ArbitrageFinding detect_uniformly_strong(const MarketModel& market, const ScenarioSet& omega,
                                         const std::vector<Payoff>& options, FiltrationPtr filtration) {
    return strong_kernel(ArbitrageKind::uniformly_strong, market, omega, options, std::move(filtration));
}

ArbitrageFinding detect_uniformly_strong(const MarketModel& market, const OptionSelection& selection,
                                         FiltrationPtr filtration) {
    return detect_uniformly_strong(market, market.omega(), market.option_payoffs(selection), std::move(filtration));
}

ArbitrageFinding detect_class_S(const MarketModel& market, const ScenarioSet& omega, const std::vector<Payoff>& options,
                                FiltrationPtr filtration, const std::vector<ScenarioSet>& family) {
    for (const auto& a : family) {
        if (a.empty()) throw PreconditionError("detect_class_S: the family contains the empty set");
    }
    ArbitrageFinding f;
    f.kind = ArbitrageKind::class_S;
    f.witness_set = ScenarioSet(market.num_scenarios());
    for (const auto& a : family) {
        const ScenarioSet support = omega | a;
        const detail::StrategyLayout layout(market, filtration, options, support);
        LinearProgram lp(layout.end(), Sense::maximize);
        for (ScenarioIndex w : support.members()) {
            std::vector<Rational> row(lp.num_variables());
            layout.add_payoff(row, w);
            lp.add_constraint(std::move(row), Relation::greater_equal, a.contains(w) ? 1 : 0);
        }
        LpOutcome res = lp_solve(lp);
        if (res.status == LpStatus::infeasible) {
            if (!verify_certificate(lp, res)) throw InvariantBreach("class-S Farkas certificate does not verify");
            f.certificate = std::move(res);
            continue;
        }
        f.found = true;
        f.target = a;
        fill_witness(f, market, omega, options, layout.extract(res.primal));
        for (ScenarioIndex w : a.members()) {
            if (f.payoff[w] < 1) throw InvariantBreach("class-S witness is below one on its target set");
        }
        return f;
    }
    return f;
}

ArbitrageFinding detect_class_S(const MarketModel& market, const OptionSelection& selection, FiltrationPtr filtration,
                                const std::vector<ScenarioSet>& family) {
    return detect_class_S(market, market.omega(), market.option_payoffs(selection), std::move(filtration), family);
}

std::vector<ConditionalSupport> conditional_support(const MarketModel& market, const FiniteMeasure& p, std::size_t t) {
    if (t < 1 || t > market.horizon()) throw PreconditionError("conditional_support: time must lie in 1..T");
    if (p.universe_size() != market.num_scenarios()) {
        throw PreconditionError("conditional_support: measure lives on a different scenario space");
    }
    std::vector<ConditionalSupport> out;
    for (const auto& atom : level_set_partition(market, t - 1)) {
        ConditionalSupport cs;
        cs.atom = atom;
        std::set<Point> points;
        for (ScenarioIndex w : atom) {
            if (sgn(p.weight(w)) == 0) continue;
            auto inc = market.increment(w, t);
            points.emplace(inc.begin(), inc.end());
        }
        cs.unconstrained = points.empty();
        cs.points.assign(points.begin(), points.end());
        out.push_back(std::move(cs));
    }
    return out;
}

DmwReport dmw_analysis(const MarketModel& market, const FiniteMeasure& p) {
    if (p.universe_size() != market.num_scenarios()) {
        throw PreconditionError("dmw_analysis: measure lives on a different scenario space");
    }
    const std::size_t n = market.num_scenarios();
    const ScenarioSet supp = p.support();
    DmwReport r;

    r.U = ScenarioSet::full(n);
    for (std::size_t t = 1; t <= market.horizon(); ++t) {
        for (const auto& cs : conditional_support(market, p, t)) {
            for (ScenarioIndex w : cs.atom) {
                auto inc = market.increment(w, t);
                Point y(inc.begin(), inc.end());
                if (cs.unconstrained || !std::binary_search(cs.points.begin(), cs.points.end(), y)) r.U.erase(w);
            }
        }
    }
    if (!supp.is_subset_of(r.U)) throw InvariantBreach("dmw_analysis: U does not contain the support of P");
    r.U_star = efficient_scenarios(market, r.U).efficient_set();
    r.omega_P = sgn(p.mass(r.U_star)) > 0 ? r.U : r.U - r.U_star;
    r.omega_P_star = efficient_scenarios(market, r.omega_P).efficient_set();

    // (a) classical arbitrage: H in F^{S,Y} with gain >= 0 P-a.s. and > 0 with positive probability.
    {
        auto natural = std::make_shared<const FiltrationPartition>(natural_filtration(market));
        const std::vector<Payoff> no_options;
        ArbitrageFinding f = detect_one_point(market, supp, no_options, natural);
        r.no_classical_arbitrage = !f.found;
        if (f.found) r.classical_arbitrage = std::move(f.strategy);
    }
    // (b)
    r.full_mass_on_efficient = p.mass(r.omega_P_star) == 1;
    // (c) max delta s.t. Q(w) >= delta on supp(P), Q a martingale measure on supp(P).
    {
        CalibratedMeasureProblem problem(market, supp, {});
        LinearProgram lp = problem.base_lp(Sense::maximize);
        const std::size_t m = lp.num_variables();
        lp.objective.push_back(1);
        lp.lower.emplace_back();
        lp.upper.emplace_back(Rational(1));
        for (auto& row : lp.constraints) row.coefficients.emplace_back(0);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Rational> row(m + 1);
            row[i] = 1;
            row[m] = -1;
            lp.add_constraint(std::move(row), Relation::greater_equal, 0);
        }
        LpOutcome res = lp_solve(lp);
        if (res.status == LpStatus::optimal && sgn(res.value) > 0) {
            r.equivalent_measure_exists = true;
            res.primal.pop_back();
            r.equivalent_measure = problem.to_measure(res.primal);
            if (!(r.equivalent_measure->support() == supp)) throw InvariantBreach("equivalent measure has wrong support");
        }
        r.dominated_measure_exists = problem.find_member().has_value();
    }
    r.agree = r.no_classical_arbitrage == r.full_mass_on_efficient &&
              r.full_mass_on_efficient == r.equivalent_measure_exists;

    AggregatorResult agg = build_aggregator(market, r.omega_P);
    r.no_strong_arbitrage_on_omega_P = !detect_strong(market, r.omega_P, {}, agg.filtration).found;
    r.agree_dominated = r.no_strong_arbitrage_on_omega_P == r.dominated_measure_exists;
    return r;
}

}  // namespace pwftap
