#pragma once

#include "pwftap/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pwftap {

enum class Sense { maximize, minimize };
enum class Relation { less_equal, equal, greater_equal };

struct Constraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::less_equal;
    Rational rhs;
};

/// Dense linear program over exact rationals. Variables are free unless a
/// bound is set.
struct LinearProgram {
    Sense sense = Sense::maximize;
    std::vector<Rational> objective;
    std::vector<Constraint> constraints;
    std::vector<std::optional<Rational>> lower;
    std::vector<std::optional<Rational>> upper;

    LinearProgram() = default;
    LinearProgram(std::size_t num_variables, Sense s)
        : sense(s), objective(num_variables), lower(num_variables), upper(num_variables) {}

    std::size_t num_variables() const { return objective.size(); }

    void add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs);
    void set_bounds(std::size_t var, std::optional<Rational> lo, std::optional<Rational> hi);
    void set_nonnegative(std::size_t var) { set_bounds(var, Rational(0), std::nullopt); }
};

enum class LpStatus { optimal, infeasible, unbounded };

std::string to_string(LpStatus status);

/// Result of lp_solve.
///
/// Certificates are stated for the maximization form max s*c.x with s = +1
/// (maximize) or s = -1 (minimize). Row multipliers y follow the sign rule
/// y >= 0 on <= rows, y <= 0 on >= rows, free on = rows, and the bound
/// multipliers are the reduced costs z = s*c - A^T y (optimal) or z = -A^T y
/// (Farkas). With beta(z) = sum_j (z_j > 0 ? u_j z_j : l_j z_j):
///   optimal:    b.y + beta(z) == s * value, z_j > 0 only if u_j finite, z_j < 0 only if l_j finite;
///   infeasible: b.y + beta(z) < 0 with the same sign rules;
///   unbounded:  `primal` is feasible and `ray` is a recession direction with s*c.ray > 0.
struct LpOutcome {
    LpStatus status = LpStatus::infeasible;
    Rational value;                ///< optimal objective value (status == optimal)
    std::vector<Rational> primal;  ///< optimal point, or a feasible point when unbounded
    std::vector<Rational> dual;    ///< row multipliers, or Farkas multipliers when infeasible
    std::vector<Rational> ray;     ///< improving recession direction when unbounded
};

/// Exact two-phase bounded-variable primal simplex. Entering variable by
/// largest reduced cost with lowest-index ties, switching to Bland's rule
/// after a run of degenerate pivots; leaving variable by lowest index among
/// ratio-test ties. Throws std::invalid_argument on dimension mismatch or
/// crossed bounds.
LpOutcome lp_solve(const LinearProgram& lp);

/// Re-verifies the outcome's certificate by exact arithmetic only.
bool verify_certificate(const LinearProgram& lp, const LpOutcome& outcome);

}  // namespace pwftap
