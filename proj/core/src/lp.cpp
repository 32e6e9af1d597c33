#include "pwftap/lp.hpp"

#include "pwftap/errors.hpp"

#include <stdexcept>

namespace pwftap {

void LinearProgram::add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
    if (coefficients.size() != num_variables()) {
        throw std::invalid_argument("LinearProgram: constraint row length " + std::to_string(coefficients.size()) +
                                    " does not match " + std::to_string(num_variables()) + " variables");
    }
    constraints.push_back(Constraint{std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::set_bounds(std::size_t var, std::optional<Rational> lo, std::optional<Rational> hi) {
    if (var >= num_variables()) {
        throw std::invalid_argument("LinearProgram: bound on unknown variable");
    }
    lower[var] = std::move(lo);
    upper[var] = std::move(hi);
}

std::string to_string(LpStatus status) {
    switch (status) {
        case LpStatus::optimal: return "optimal";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unbounded: return "unbounded";
    }
    return "unknown";
}

namespace {

enum class ColumnState { basic, at_lower, at_upper, free_zero };

constexpr int kDegenerateRunBeforeBland = 50;

class BoundedSimplex {
public:
    explicit BoundedSimplex(const LinearProgram& lp) : lp_(lp) {
        validate();
        build();
    }

    LpOutcome run() {
        set_phase_costs(/*phase_one=*/true);
        iterate(/*phase_one=*/true);
        Rational infeasibility = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (is_artificial(basis_[i])) infeasibility += xb_[i];
        }
        if (sgn(infeasibility) > 0) {
            return infeasible_outcome();
        }
        drive_out_artificials();
        for (std::size_t i = 0; i < m_; ++i) {
            std::size_t a = art_begin_ + i;
            hi_[a] = Rational(0);
            has_hi_[a] = true;
        }
        set_phase_costs(/*phase_one=*/false);
        std::optional<std::size_t> unbounded_column = iterate(/*phase_one=*/false);
        if (unbounded_column) {
            return unbounded_outcome(*unbounded_column);
        }
        return optimal_outcome();
    }

private:
    void validate() const {
        std::size_t n = lp_.num_variables();
        if (lp_.lower.size() != n || lp_.upper.size() != n) {
            throw std::invalid_argument("LinearProgram: bound vectors do not match objective length");
        }
        for (const auto& row : lp_.constraints) {
            if (row.coefficients.size() != n) {
                throw std::invalid_argument("LinearProgram: constraint row length does not match objective length");
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (lp_.lower[j] && lp_.upper[j] && *lp_.lower[j] > *lp_.upper[j]) {
                throw std::invalid_argument("LinearProgram: crossed bounds on variable " + std::to_string(j));
            }
        }
    }

    bool is_artificial(std::size_t col) const { return col >= art_begin_; }

    void build() {
        n_ = lp_.num_variables();
        m_ = lp_.constraints.size();
        std::size_t num_slacks = 0;
        for (const auto& row : lp_.constraints) {
            if (row.relation != Relation::equal) ++num_slacks;
        }
        art_begin_ = n_ + num_slacks;
        cols_ = art_begin_ + m_;

        lo_.assign(cols_, Rational(0));
        hi_.assign(cols_, Rational(0));
        has_lo_.assign(cols_, true);
        has_hi_.assign(cols_, false);
        state_.assign(cols_, ColumnState::at_lower);
        xn_.assign(cols_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) {
            has_lo_[j] = lp_.lower[j].has_value();
            has_hi_[j] = lp_.upper[j].has_value();
            if (has_lo_[j]) lo_[j] = *lp_.lower[j];
            if (has_hi_[j]) hi_[j] = *lp_.upper[j];
            if (has_lo_[j]) {
                state_[j] = ColumnState::at_lower;
                xn_[j] = lo_[j];
            } else if (has_hi_[j]) {
                state_[j] = ColumnState::at_upper;
                xn_[j] = hi_[j];
            } else {
                state_[j] = ColumnState::free_zero;
            }
        }

        tableau_.assign(m_, std::vector<Rational>(cols_));
        xb_.assign(m_, Rational(0));
        basis_.assign(m_, 0);
        orientation_.assign(m_, 1);
        std::size_t slack = n_;
        for (std::size_t i = 0; i < m_; ++i) {
            const Constraint& row = lp_.constraints[i];
            Rational residual = row.rhs;
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(row.coefficients[j]) != 0 && sgn(xn_[j]) != 0) residual -= row.coefficients[j] * xn_[j];
            }
            int sigma = sgn(residual) < 0 ? -1 : 1;
            orientation_[i] = sigma;
            auto& t = tableau_[i];
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(row.coefficients[j]) != 0) t[j] = sigma > 0 ? row.coefficients[j] : Rational(-row.coefficients[j]);
            }
            if (row.relation != Relation::equal) {
                int coef = row.relation == Relation::less_equal ? 1 : -1;
                t[slack] = coef * sigma;
                ++slack;
            }
            t[art_begin_ + i] = 1;
            basis_[i] = art_begin_ + i;
            state_[art_begin_ + i] = ColumnState::basic;
            xb_[i] = sigma > 0 ? residual : Rational(-residual);
        }
    }

    void set_phase_costs(bool phase_one) {
        cost_.assign(cols_, Rational(0));
        if (phase_one) {
            for (std::size_t j = art_begin_; j < cols_; ++j) cost_[j] = -1;
        } else {
            for (std::size_t j = 0; j < n_; ++j) {
                cost_[j] = lp_.sense == Sense::maximize ? lp_.objective[j] : Rational(-lp_.objective[j]);
            }
        }
        reduced_ = cost_;
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational& cb = cost_[basis_[i]];
            if (sgn(cb) == 0) continue;
            const auto& t = tableau_[i];
            for (std::size_t j = 0; j < cols_; ++j) {
                if (sgn(t[j]) != 0) reduced_[j] -= cb * t[j];
            }
        }
    }

    bool can_increase(std::size_t j) const {
        switch (state_[j]) {
            case ColumnState::at_lower: return !has_hi_[j] || hi_[j] > lo_[j];
            case ColumnState::free_zero: return true;
            default: return false;
        }
    }

    bool can_decrease(std::size_t j) const {
        switch (state_[j]) {
            case ColumnState::at_upper: return !has_lo_[j] || lo_[j] < hi_[j];
            case ColumnState::free_zero: return true;
            default: return false;
        }
    }

    std::optional<std::size_t> choose_entering(bool bland) const {
        std::optional<std::size_t> best;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (state_[j] == ColumnState::basic) continue;
            int s = sgn(reduced_[j]);
            if (s == 0) continue;
            if (!((s > 0 && can_increase(j)) || (s < 0 && can_decrease(j)))) continue;
            if (bland) return j;
            if (!best || abs(reduced_[j]) > abs(reduced_[*best])) best = j;
        }
        return best;
    }

    void pivot(std::size_t r, std::size_t q) {
        auto& prow = tableau_[r];
        Rational inv = 1 / prow[q];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (sgn(prow[j]) != 0) {
                prow[j] *= inv;
                nz.push_back(j);
            }
        }
        Rational factor;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r) continue;
            auto& row = tableau_[i];
            if (sgn(row[q]) == 0) continue;
            factor = row[q];
            for (std::size_t j : nz) row[j] -= factor * prow[j];
        }
        if (sgn(reduced_[q]) != 0) {
            factor = reduced_[q];
            for (std::size_t j : nz) reduced_[j] -= factor * prow[j];
        }
    }

    /// Runs simplex iterations until optimal. Returns the entering column
    /// when an unbounded direction is detected.
    std::optional<std::size_t> iterate(bool phase_one) {
        int degenerate_run = 0;
        for (;;) {
            bool bland = degenerate_run >= kDegenerateRunBeforeBland;
            std::optional<std::size_t> entering = choose_entering(bland);
            if (!entering) return std::nullopt;
            std::size_t q = *entering;
            int dir = sgn(reduced_[q]) > 0 ? 1 : -1;

            std::optional<Rational> theta;
            bool flip = false;
            if (has_lo_[q] && has_hi_[q]) {
                theta = hi_[q] - lo_[q];
                flip = true;
            }
            std::optional<std::size_t> leave_row;
            bool leave_to_upper = false;
            Rational ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                const Rational& alpha = tableau_[i][q];
                int a = sgn(alpha);
                if (a == 0) continue;
                std::size_t b = basis_[i];
                // basic value moves at rate -alpha * dir
                bool decreasing = (a > 0) == (dir > 0);
                if (decreasing) {
                    if (!has_lo_[b]) continue;
                    ratio = (xb_[i] - lo_[b]) / abs(alpha);
                } else {
                    if (!has_hi_[b]) continue;
                    ratio = (hi_[b] - xb_[i]) / abs(alpha);
                }
                bool better = !theta || ratio < *theta;
                bool tie = theta && ratio == *theta && !flip && leave_row && b < basis_[*leave_row];
                if (better || tie) {
                    theta = ratio;
                    flip = false;
                    leave_row = i;
                    leave_to_upper = !decreasing;
                }
            }
            if (!theta) {
                if (phase_one) {
                    throw InvariantBreach("simplex: phase one reported an unbounded direction");
                }
                return q;
            }

            degenerate_run = sgn(*theta) == 0 ? degenerate_run + 1 : 0;
            Rational step = dir > 0 ? *theta : Rational(-*theta);
            if (sgn(step) != 0) {
                for (std::size_t i = 0; i < m_; ++i) {
                    if (sgn(tableau_[i][q]) != 0) xb_[i] -= tableau_[i][q] * step;
                }
            }
            Rational entering_value = xn_[q] + step;
            if (flip) {
                xn_[q] = entering_value;
                state_[q] = dir > 0 ? ColumnState::at_upper : ColumnState::at_lower;
                continue;
            }
            std::size_t r = *leave_row;
            std::size_t leaving = basis_[r];
            state_[leaving] = leave_to_upper ? ColumnState::at_upper : ColumnState::at_lower;
            xn_[leaving] = leave_to_upper ? hi_[leaving] : lo_[leaving];
            pivot(r, q);
            basis_[r] = q;
            state_[q] = ColumnState::basic;
            xb_[r] = entering_value;
        }
    }

    void drive_out_artificials() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (!is_artificial(basis_[r])) continue;
            std::optional<std::size_t> q;
            for (std::size_t j = 0; j < art_begin_; ++j) {
                if (state_[j] != ColumnState::basic && sgn(tableau_[r][j]) != 0) {
                    q = j;
                    break;
                }
            }
            if (!q) continue;  // redundant row; the artificial stays basic at zero
            std::size_t leaving = basis_[r];
            state_[leaving] = ColumnState::at_lower;
            xn_[leaving] = 0;
            Rational value = xn_[*q];
            pivot(r, *q);
            basis_[r] = *q;
            state_[*q] = ColumnState::basic;
            xb_[r] = value;
        }
    }

    std::vector<Rational> structural_values() const {
        std::vector<Rational> x(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            if (state_[j] != ColumnState::basic) x[j] = xn_[j];
        }
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) x[basis_[i]] = xb_[i];
        }
        return x;
    }

    std::vector<Rational> row_multipliers(bool phase_one) const {
        std::vector<Rational> y(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            Rational yi = (phase_one ? Rational(-1) : Rational(0)) - reduced_[art_begin_ + i];
            y[i] = orientation_[i] > 0 ? yi : Rational(-yi);
        }
        return y;
    }

    LpOutcome infeasible_outcome() const {
        LpOutcome out;
        out.status = LpStatus::infeasible;
        out.dual = row_multipliers(/*phase_one=*/true);
        return out;
    }

    LpOutcome optimal_outcome() const {
        LpOutcome out;
        out.status = LpStatus::optimal;
        out.primal = structural_values();
        out.value = dot(lp_.objective, out.primal);
        out.dual = row_multipliers(/*phase_one=*/false);
        return out;
    }

    LpOutcome unbounded_outcome(std::size_t q) const {
        LpOutcome out;
        out.status = LpStatus::unbounded;
        out.primal = structural_values();
        out.ray.assign(n_, Rational(0));
        int dir = sgn(reduced_[q]) > 0 ? 1 : -1;
        if (q < n_) out.ray[q] = dir;
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_ && sgn(tableau_[i][q]) != 0) {
                out.ray[basis_[i]] = -tableau_[i][q] * dir;
            }
        }
        return out;
    }

    const LinearProgram& lp_;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t art_begin_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Rational>> tableau_;
    std::vector<Rational> xb_;
    std::vector<Rational> xn_;
    std::vector<std::size_t> basis_;
    std::vector<int> orientation_;
    std::vector<Rational> lo_, hi_;
    std::vector<bool> has_lo_, has_hi_;
    std::vector<ColumnState> state_;
    std::vector<Rational> cost_;
    std::vector<Rational> reduced_;
};

bool multiplier_signs_ok(const LinearProgram& lp, const std::vector<Rational>& y) {
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
        Relation rel = lp.constraints[i].relation;
        if (rel == Relation::less_equal && sgn(y[i]) < 0) return false;
        if (rel == Relation::greater_equal && sgn(y[i]) > 0) return false;
    }
    return true;
}

/// Returns beta(z) or nullopt when z pushes against a missing bound.
std::optional<Rational> bound_term(const LinearProgram& lp, const std::vector<Rational>& z) {
    Rational total = 0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        int s = sgn(z[j]);
        if (s > 0) {
            if (!lp.upper[j]) return std::nullopt;
            total += *lp.upper[j] * z[j];
        } else if (s < 0) {
            if (!lp.lower[j]) return std::nullopt;
            total += *lp.lower[j] * z[j];
        }
    }
    return total;
}

std::vector<Rational> transpose_times(const LinearProgram& lp, const std::vector<Rational>& y) {
    std::vector<Rational> out(lp.num_variables());
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
        if (sgn(y[i]) == 0) continue;
        const auto& row = lp.constraints[i].coefficients;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (sgn(row[j]) != 0) out[j] += row[j] * y[i];
        }
    }
    return out;
}

bool primal_feasible(const LinearProgram& lp, const std::vector<Rational>& x) {
    if (x.size() != lp.num_variables()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (lp.lower[j] && x[j] < *lp.lower[j]) return false;
        if (lp.upper[j] && x[j] > *lp.upper[j]) return false;
    }
    for (const auto& row : lp.constraints) {
        Rational lhs = dot(row.coefficients, x);
        switch (row.relation) {
            case Relation::less_equal:
                if (lhs > row.rhs) return false;
                break;
            case Relation::greater_equal:
                if (lhs < row.rhs) return false;
                break;
            case Relation::equal:
                if (lhs != row.rhs) return false;
                break;
        }
    }
    return true;
}

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp) {
    BoundedSimplex simplex(lp);
    return simplex.run();
}

bool verify_certificate(const LinearProgram& lp, const LpOutcome& outcome) {
    const std::size_t n = lp.num_variables();
    const std::size_t m = lp.constraints.size();
    const int s = lp.sense == Sense::maximize ? 1 : -1;
    auto rhs_dot = [&](const std::vector<Rational>& y) {
        Rational total = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(y[i]) != 0) total += lp.constraints[i].rhs * y[i];
        }
        return total;
    };

    switch (outcome.status) {
        case LpStatus::optimal: {
            if (!primal_feasible(lp, outcome.primal) || outcome.dual.size() != m) return false;
            if (dot(lp.objective, outcome.primal) != outcome.value) return false;
            if (!multiplier_signs_ok(lp, outcome.dual)) return false;
            std::vector<Rational> z = transpose_times(lp, outcome.dual);
            for (std::size_t j = 0; j < n; ++j) z[j] = s * lp.objective[j] - z[j];
            std::optional<Rational> beta = bound_term(lp, z);
            if (!beta) return false;
            return rhs_dot(outcome.dual) + *beta == s * outcome.value;
        }
        case LpStatus::infeasible: {
            if (outcome.dual.size() != m || !multiplier_signs_ok(lp, outcome.dual)) return false;
            std::vector<Rational> z = transpose_times(lp, outcome.dual);
            for (auto& v : z) v = -v;
            std::optional<Rational> beta = bound_term(lp, z);
            if (!beta) return false;
            return sgn(rhs_dot(outcome.dual) + *beta) < 0;
        }
        case LpStatus::unbounded: {
            if (!primal_feasible(lp, outcome.primal) || outcome.ray.size() != n) return false;
            if (sgn(s * dot(lp.objective, outcome.ray)) <= 0) return false;
            for (std::size_t j = 0; j < n; ++j) {
                if (lp.lower[j] && sgn(outcome.ray[j]) < 0) return false;
                if (lp.upper[j] && sgn(outcome.ray[j]) > 0) return false;
            }
            for (const auto& row : lp.constraints) {
                int a = sgn(dot(row.coefficients, outcome.ray));
                if (row.relation == Relation::less_equal && a > 0) return false;
                if (row.relation == Relation::greater_equal && a < 0) return false;
                if (row.relation == Relation::equal && a != 0) return false;
            }
            return true;
        }
    }
    return false;
}

}  // namespace pwftap
