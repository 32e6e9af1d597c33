#include "pwftap/partition.hpp"

#include "pwftap/errors.hpp"
#include "strategy_lp.hpp"

namespace pwftap {

namespace {

/// Solves M x = e_r for each requested r, where M has the given columns
/// (assumed to form a basis of Q^k); returns the rows r of M^{-1}.
std::vector<std::vector<Rational>> inverse_rows(const std::vector<std::vector<Rational>>& columns,
                                                const std::vector<std::size_t>& rows) {
    const std::size_t k = columns.size();
    // Gauss-Jordan on [M | I].
    std::vector<std::vector<Rational>> aug(k, std::vector<Rational>(2 * k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = columns[j][i];
        aug[i][k + i] = 1;
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && sgn(aug[pivot][col]) == 0) ++pivot;
        if (pivot == k) throw InvariantBreach("basis completion produced a singular matrix");
        std::swap(aug[pivot], aug[col]);
        Rational inv = 1 / aug[col][col];
        for (auto& v : aug[col]) v *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == col || sgn(aug[i][col]) == 0) continue;
            Rational f = aug[i][col];
            for (std::size_t j = 0; j < 2 * k; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    std::vector<std::vector<Rational>> out;
    for (std::size_t r : rows) out.emplace_back(aug[r].begin() + static_cast<std::ptrdiff_t>(k), aug[r].end());
    return out;
}

/// Appends v to an echelon basis if it is independent; returns whether it was.
bool add_if_independent(std::vector<std::vector<Rational>>& echelon, std::vector<std::size_t>& pivots,
                        std::vector<Rational> v) {
    for (std::size_t i = 0; i < echelon.size(); ++i) {
        const Rational& c = v[pivots[i]];
        if (sgn(c) == 0) continue;
        Rational f = c / echelon[i][pivots[i]];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * echelon[i][j];
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (sgn(v[j]) != 0) {
            echelon.push_back(std::move(v));
            pivots.push_back(j);
            return true;
        }
    }
    return false;
}

Payoff payoff_of(const MarketModel& market, const std::vector<Payoff>& options, const Strategy& s) {
    return strategy_payoff_vector(market, options, s);
}

}  // namespace

std::optional<DominatingStrategy> find_dominating_semistatic(const MarketModel& market,
                                                             const std::vector<Payoff>& options,
                                                             const ScenarioSet& a_star,
                                                             const std::vector<std::vector<Rational>>& span) {
    if (a_star.empty()) throw PreconditionError("find_dominating_semistatic: a_star is empty");
    const std::size_t k = options.size();
    std::vector<std::vector<Rational>> echelon;
    std::vector<std::size_t> pivots;
    std::vector<std::vector<Rational>> basis;
    for (const auto& v : span) {
        if (v.size() != k) throw PreconditionError("find_dominating_semistatic: span vector has wrong length");
        if (add_if_independent(echelon, pivots, v)) basis.push_back(v);
    }
    std::vector<std::size_t> completion;  // coordinate directions added to the basis
    for (std::size_t j = 0; j < k && basis.size() < k; ++j) {
        std::vector<Rational> e(k);
        e[j] = 1;
        if (add_if_independent(echelon, pivots, e)) {
            completion.push_back(j);
            basis.push_back(std::move(e));
        }
    }
    if (completion.empty()) return std::nullopt;
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < completion.size(); ++i) rows.push_back(basis.size() - completion.size() + i);
    // functionals[i](alpha) = coordinate of alpha along the i-th completion direction.
    const std::vector<std::vector<Rational>> functionals = inverse_rows(basis, rows);

    auto natural = std::make_shared<const FiltrationPartition>(natural_filtration(market));
    const detail::StrategyLayout layout(market, natural, options, a_star);
    const std::vector<ScenarioIndex> members = a_star.members();
    const std::size_t slack0 = layout.end();
    const std::size_t num_vars = slack0 + members.size();
    // The alpha block of the single time-0 atom.
    const std::size_t alpha0 = layout.alpha_var(members.front());

    std::optional<LpOutcome> best;
    for (const auto& f : functionals) {
        for (int sign : {+1, -1}) {
            LinearProgram lp(num_vars, Sense::maximize);
            for (std::size_t i = 0; i < members.size(); ++i) {
                lp.set_bounds(slack0 + i, Rational(0), Rational(1));
                lp.objective[slack0 + i] = 1;
                std::vector<Rational> row(num_vars);
                layout.add_payoff(row, members[i]);
                row[slack0 + i] = -1;
                lp.add_constraint(std::move(row), Relation::greater_equal, 0);
            }
            std::vector<Rational> pin(num_vars);
            for (std::size_t j = 0; j < k; ++j) pin[alpha0 + j] = f[j];
            lp.add_constraint(std::move(pin), Relation::equal, sign);
            LpOutcome res = lp_solve(lp);
            if (res.status == LpStatus::unbounded) throw InvariantBreach("dominating LP with capped objective is unbounded");
            if (res.status != LpStatus::optimal) continue;
            if (!best || res.value > best->value) best = std::move(res);
        }
    }
    if (!best) return std::nullopt;

    DominatingStrategy out;
    out.strategy = layout.extract(best->primal);
    out.alpha.assign(best->primal.begin() + static_cast<std::ptrdiff_t>(alpha0),
                     best->primal.begin() + static_cast<std::ptrdiff_t>(alpha0 + k));
    out.strategy.set_alpha_everywhere(out.alpha);
    out.payoff = payoff_of(market, options, out.strategy);
    for (ScenarioIndex w : members) {
        if (sgn(out.payoff[w]) < 0) throw InvariantBreach("dominating strategy is negative on a_star");
    }
    std::vector<std::vector<Rational>> check_echelon = echelon;
    check_echelon.resize(echelon.size() - completion.size());
    std::vector<std::size_t> check_pivots(pivots.begin(), pivots.end() - static_cast<std::ptrdiff_t>(completion.size()));
    if (!add_if_independent(check_echelon, check_pivots, out.alpha)) {
        throw InvariantBreach("dominating alpha lies in the span");
    }
    return out;
}

SchemeResult run_partition_scheme(const MarketModel& market, const ScenarioSet& omega,
                                  const std::vector<Payoff>& options) {
    const std::size_t k = options.size();
    SchemeResult r;
    r.A.push_back(omega);
    r.aggregators.push_back(build_aggregator(market, omega));
    r.A_star.push_back(r.aggregators.back().efficient_set());
    while (!r.A_star.back().empty() && r.alphas.size() < k) {
        auto dom = find_dominating_semistatic(market, options, r.A_star.back(), r.alphas);
        if (!dom) break;
        ScenarioSet next(market.num_scenarios());
        for (ScenarioIndex w : r.A_star.back().members()) {
            if (sgn(dom->payoff[w]) == 0) next.insert(w);
        }
        r.alphas.push_back(dom->alpha);
        r.dyn_strategies.push_back(std::move(dom->strategy));
        r.A.push_back(next);
        r.aggregators.push_back(build_aggregator(market, next));
        r.A_star.push_back(r.aggregators.back().efficient_set());
    }
    r.beta = r.alphas.size();
    r.success = !r.A_star.back().empty();

    r.filtration = std::make_shared<const FiltrationPartition>(scheme_filtration(r, market));
    r.combined = Strategy::zero(market, k, r.filtration);
    auto copy_from = [&](const Strategy& s, ScenarioIndex w, bool with_alpha) {
        if (with_alpha) r.combined.alpha[w] = s.alpha[w];
        for (std::size_t t = 0; t < market.horizon(); ++t) r.combined.H[t][w] = s.H[t][w];
    };
    if (r.beta == 0) {
        for (ScenarioIndex w = 0; w < market.num_scenarios(); ++w) copy_from(r.aggregators[0].H_star, w, false);
    } else {
        for (ScenarioIndex w : (r.A[0] - r.A_star[0]).members()) copy_from(r.aggregators[0].H_star, w, false);
    }
    for (std::size_t i = 1; i <= r.beta; ++i) {
        for (ScenarioIndex w : (r.A_star[i - 1] - r.A[i]).members()) copy_from(r.dyn_strategies[i - 1], w, true);
        for (ScenarioIndex w : (r.A[i] - r.A_star[i]).members()) copy_from(r.aggregators[i].H_star, w, false);
    }
    r.combined_payoff = strategy_payoff_vector(market, options, r.combined);

    if (!is_predictable(market, r.combined, *r.filtration)) {
        throw InvariantBreach("combined aggregator is not predictable in the scheme filtration");
    }
    for (ScenarioIndex w : omega.members()) {
        int s = sgn(r.combined_payoff[w]);
        if (s < 0 || (s == 0) != r.A_star.back().contains(w)) {
            throw InvariantBreach("combined aggregator payoff does not vanish exactly on the final efficient set");
        }
    }
    return r;
}

SchemeResult run_partition_scheme(const MarketModel& market, const OptionSelection& selection) {
    return run_partition_scheme(market, market.omega(), market.option_payoffs(selection));
}

FiltrationPartition scheme_filtration(const SchemeResult& result, const MarketModel& market) {
    std::vector<Mark> marks;
    for (std::size_t i = 0; result.beta > 0 && i < result.A.size(); ++i) {
        marks.push_back(Mark::from_set(result.A[i], 0));
        marks.push_back(Mark::from_set(result.A_star[i], 0));
    }
    for (const auto& agg : result.aggregators) {
        for (auto& mark : aggregator_marks(agg.H_star)) marks.push_back(std::move(mark));
    }
    return refine_partition(natural_filtration(market), marks, FiltrationLabel::enlarged);
}

}  // namespace pwftap
