#include "oracles.hpp"

#include "pwftap/random_market.hpp"

#include <algorithm>

namespace pwftap::testing {

std::vector<std::vector<Rational>> null_space(const std::vector<std::vector<Rational>>& a, std::size_t cols) {
    std::vector<std::vector<Rational>> m = a;
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const Rational lead = m[row][c];
        for (auto& v : m[row]) v /= lead;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][c]) == 0) continue;
            const Rational f = m[r][c];
            for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[row][j];
        }
        pivot_cols.push_back(c);
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
        std::vector<Rational> x(cols);
        x[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = -m[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::size_t> enumerated_max_strict_set(const std::vector<Point>& points) {
    const std::size_t d = points.front().size();
    // Basis of span(points): the orthogonal complement of the common null space.
    std::vector<std::vector<Rational>> span_basis = null_space(null_space(points, d), d);
    const std::size_t r = span_basis.size();
    std::vector<bool> strict(points.size(), false);
    if (r > 0) {
        for (std::uint32_t subset = 0; subset < (1u << points.size()); ++subset) {
            std::vector<std::vector<Rational>> rows;
            for (std::size_t i = 0; i < points.size(); ++i) {
                if (!(subset & (1u << i))) continue;
                std::vector<Rational> row(r);
                for (std::size_t k = 0; k < r; ++k) row[k] = dot(span_basis[k], points[i]);
                rows.push_back(std::move(row));
            }
            auto ns = null_space(rows, r);
            if (ns.size() != 1) continue;
            Point h(d);
            for (std::size_t k = 0; k < r; ++k) {
                for (std::size_t j = 0; j < d; ++j) h[j] += ns[0][k] * span_basis[k][j];
            }
            for (int sign : {1, -1}) {
                bool admissible = true;
                for (const auto& y : points) admissible &= sgn(dot(h, y)) * sign >= 0;
                if (!admissible) continue;
                for (std::size_t i = 0; i < points.size(); ++i) {
                    if (sgn(dot(h, points[i])) * sign > 0) strict[i] = true;
                }
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (strict[i]) out.push_back(i);
    }
    return out;
}

std::vector<std::vector<ScenarioIndex>> reference_atoms(const MarketModel& market, std::size_t t) {
    std::vector<std::vector<ScenarioIndex>> atoms;
    auto same_prefix = [&](ScenarioIndex a, ScenarioIndex b) {
        for (std::size_t s = 0; s <= t; ++s) {
            auto pa = market.price(a, s);
            auto pb = market.price(b, s);
            auto ya = market.factor(a, s);
            auto yb = market.factor(b, s);
            if (!std::equal(pa.begin(), pa.end(), pb.begin(), pb.end())) return false;
            if (!std::equal(ya.begin(), ya.end(), yb.begin(), yb.end())) return false;
        }
        return true;
    };
    for (ScenarioIndex w = 0; w < market.num_scenarios(); ++w) {
        bool placed = false;
        for (auto& atom : atoms) {
            if (same_prefix(atom.front(), w)) {
                atom.push_back(w);
                placed = true;
                break;
            }
        }
        if (!placed) atoms.push_back({w});
    }
    return atoms;
}

LinearProgram reference_measure_lp(const MarketModel& market, const ScenarioSet& omega,
                                   const std::vector<Payoff>& options) {
    const std::vector<ScenarioIndex> vars = omega.members();
    LinearProgram lp(vars.size(), Sense::maximize);
    for (std::size_t i = 0; i < vars.size(); ++i) lp.set_nonnegative(i);
    lp.add_constraint(std::vector<Rational>(vars.size(), Rational(1)), Relation::equal, Rational(1));
    for (std::size_t t = 1; t <= market.horizon(); ++t) {
        for (const auto& atom : reference_atoms(market, t - 1)) {
            for (std::size_t j = 0; j < market.num_assets(); ++j) {
                std::vector<Rational> row(vars.size());
                bool any = false;
                for (std::size_t i = 0; i < vars.size(); ++i) {
                    if (std::find(atom.begin(), atom.end(), vars[i]) == atom.end()) continue;
                    row[i] = market.price(vars[i], t)[j] - market.price(vars[i], t - 1)[j];
                    any |= sgn(row[i]) != 0;
                }
                if (any) lp.add_constraint(std::move(row), Relation::equal, Rational(0));
            }
        }
    }
    for (const auto& phi : options) {
        std::vector<Rational> row(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) row[i] = phi[vars[i]];
        lp.add_constraint(std::move(row), Relation::equal, Rational(0));
    }
    return lp;
}

ScenarioSet reference_efficient_set(const MarketModel& market, const ScenarioSet& omega,
                                    const std::vector<Payoff>& options) {
    const std::vector<ScenarioIndex> vars = omega.members();
    ScenarioSet out(market.num_scenarios());
    if (vars.empty()) return out;
    LinearProgram lp = reference_measure_lp(market, omega, options);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (out.contains(vars[i])) continue;
        std::fill(lp.objective.begin(), lp.objective.end(), Rational(0));
        lp.objective[i] = 1;
        LpOutcome res = lp_solve(lp);
        if (res.status != LpStatus::optimal) break;  // empty polytope: nothing is charged
        for (std::size_t j = 0; j < vars.size(); ++j) {
            if (sgn(res.primal[j]) > 0) out.insert(vars[j]);
        }
    }
    return out;
}

std::optional<Rational> reference_dual(const MarketModel& market, const ScenarioSet& omega,
                                       const std::vector<Payoff>& options, const Payoff& g) {
    const std::vector<ScenarioIndex> vars = omega.members();
    if (vars.empty()) return std::nullopt;
    LinearProgram lp = reference_measure_lp(market, omega, options);
    for (std::size_t i = 0; i < vars.size(); ++i) lp.objective[i] = g[vars[i]];
    LpOutcome res = lp_solve(lp);
    if (res.status != LpStatus::optimal) return std::nullopt;
    return res.value;
}

bool reference_classical_arbitrage(const MarketModel& market, const ScenarioSet& support) {
    // One holding vector per (t, atom at t-1), each entry in [-1, 1].
    struct Block {
        std::size_t t;
        std::vector<ScenarioIndex> atom;
    };
    std::vector<Block> blocks;
    for (std::size_t t = 1; t <= market.horizon(); ++t) {
        for (auto& atom : reference_atoms(market, t - 1)) blocks.push_back({t, std::move(atom)});
    }
    const std::size_t d = market.num_assets();
    LinearProgram lp(blocks.size() * d, Sense::maximize);
    for (std::size_t v = 0; v < lp.num_variables(); ++v) lp.set_bounds(v, Rational(-1), Rational(1));
    for (ScenarioIndex w : support.members()) {
        std::vector<Rational> row(lp.num_variables());
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (std::find(blocks[b].atom.begin(), blocks[b].atom.end(), w) == blocks[b].atom.end()) continue;
            for (std::size_t j = 0; j < d; ++j) {
                row[b * d + j] = market.price(w, blocks[b].t)[j] - market.price(w, blocks[b].t - 1)[j];
            }
        }
        for (std::size_t v = 0; v < row.size(); ++v) lp.objective[v] += row[v];
        lp.add_constraint(std::move(row), Relation::greater_equal, Rational(0));
    }
    LpOutcome res = lp_solve(lp);
    return res.status == LpStatus::optimal && sgn(res.value) > 0;
}

std::vector<Point> random_point_set(std::uint64_t seed) {
    SeededDraws draws(seed);
    const auto d = static_cast<std::size_t>(draws.integer(1, 3));
    const auto m = static_cast<std::size_t>(draws.integer(1, 8));
    const bool biased = draws.coin(3);
    std::vector<Point> points;
    for (std::size_t i = 0; i < m; ++i) {
        Point p(d);
        for (std::size_t j = 0; j < d; ++j) p[j] = Rational(static_cast<long>(draws.integer(-3, 3)));
        if (biased && sgn(p[0]) < 0) p[0] = -p[0];
        points.push_back(std::move(p));
    }
    return points;
}

}  // namespace pwftap::testing
