#include "pwftap/convex.hpp"

#include "pwftap/errors.hpp"
#include "pwftap/lp.hpp"

namespace pwftap {

namespace {

std::size_t dimension_of(const std::vector<Point>& points) {
    if (points.empty()) throw PreconditionError("convex primitive called on an empty point list");
    std::size_t d = points.front().size();
    for (const auto& p : points) {
        if (p.size() != d) throw PreconditionError("points have different dimensions");
    }
    return d;
}

/// Variables lambda_0..lambda_{m-1} (>= 0) plus `extra` trailing variables;
/// rows sum lambda = 1 and sum lambda_i y_i = 0.
LinearProgram barycentric_lp(const std::vector<Point>& points, std::size_t extra) {
    const std::size_t m = points.size();
    const std::size_t d = points.front().size();
    LinearProgram lp(m + extra, Sense::maximize);
    for (std::size_t i = 0; i < m; ++i) lp.set_nonnegative(i);
    std::vector<Rational> ones(m + extra);
    for (std::size_t i = 0; i < m; ++i) ones[i] = 1;
    lp.add_constraint(std::move(ones), Relation::equal, 1);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> row(m + extra);
        bool nonzero = false;
        for (std::size_t i = 0; i < m; ++i) {
            row[i] = points[i][j];
            nonzero = nonzero || sgn(row[i]) != 0;
        }
        if (nonzero) lp.add_constraint(std::move(row), Relation::equal, 0);
    }
    return lp;
}

}  // namespace

SupportSeparator max_support_separator(const std::vector<Point>& points) {
    const std::size_t d = dimension_of(points);
    const std::size_t m = points.size();
    SupportSeparator out;
    out.H.assign(d, Rational(0));

    // Strict sets of admissible separators are closed under union (add the
    // separators), so the largest one is unique. Points already known to be
    // strict are fixed to slack one and the LP is re-solved until no new
    // point becomes strict; with the cap s_i <= 1 the first solve already
    // reaches the fixpoint, the loop only confirms it.
    std::vector<bool> strict(m, false);
    Point best(d);
    for (;;) {
        // Variables: H (d, free), s (m, in [0, 1]).
        LinearProgram lp(d + m, Sense::maximize);
        for (std::size_t i = 0; i < m; ++i) {
            lp.set_bounds(d + i, strict[i] ? Rational(1) : Rational(0), Rational(1));
            lp.objective[d + i] = strict[i] ? 0 : 1;
            std::vector<Rational> row(d + m);
            for (std::size_t j = 0; j < d; ++j) row[j] = points[i][j];
            row[d + i] = -1;
            lp.add_constraint(std::move(row), Relation::greater_equal, 0);
        }
        LpOutcome res = lp_solve(lp);
        if (res.status != LpStatus::optimal) throw InvariantBreach("separator LP is not optimal");
        Point H(res.primal.begin(), res.primal.begin() + static_cast<std::ptrdiff_t>(d));
        bool grew = false;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(dot(H, points[i])) < 0) throw InvariantBreach("separator LP returned a non-separating vector");
            if (!strict[i] && sgn(dot(H, points[i])) > 0) {
                strict[i] = true;
                grew = true;
            }
        }
        if (!grew) break;
        best = std::move(H);
    }

    out.H = primitive_integer_direction(best);
    for (std::size_t i = 0; i < m; ++i) {
        int s = sgn(dot(out.H, points[i]));
        if (s > 0) out.strict.push_back(i);
        if ((s > 0) != strict[i]) throw InvariantBreach("separator strict set is inconsistent");
    }
    return out;
}

RelativeInteriorTest zero_in_relative_interior(const std::vector<Point>& points) {
    dimension_of(points);
    RelativeInteriorTest out;
    SupportSeparator sep = max_support_separator(points);
    if (!sep.strict.empty()) {
        out.separator = std::move(sep.H);
        return out;
    }
    // Maximise the smallest weight: lambda_i - tau >= 0, tau <= 1.
    const std::size_t m = points.size();
    LinearProgram lp = barycentric_lp(points, 1);
    lp.objective[m] = 1;
    lp.set_bounds(m, std::nullopt, Rational(1));
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rational> row(m + 1);
        row[i] = 1;
        row[m] = -1;
        lp.add_constraint(std::move(row), Relation::greater_equal, 0);
    }
    LpOutcome res = lp_solve(lp);
    if (res.status != LpStatus::optimal || sgn(res.value) <= 0) {
        throw InvariantBreach("relative interior test: separator and weights disagree");
    }
    out.zero_in_relative_interior = true;
    out.weights.assign(res.primal.begin(), res.primal.begin() + static_cast<std::ptrdiff_t>(m));
    return out;
}

std::vector<std::pair<std::size_t, Rational>> zero_convex_combination(const std::vector<Point>& points,
                                                                      std::size_t target_index) {
    dimension_of(points);
    if (target_index >= points.size()) throw PreconditionError("zero_convex_combination: target out of range");
    if (!max_support_separator(points).strict.empty()) {
        throw PreconditionError("zero_convex_combination: 0 is not in the relative interior of the points");
    }
    LinearProgram lp = barycentric_lp(points, 0);
    lp.objective[target_index] = 1;
    LpOutcome res = lp_solve(lp);
    if (res.status != LpStatus::optimal || sgn(res.value) <= 0) {
        throw InvariantBreach("zero_convex_combination: relative interior point without positive target weight");
    }
    std::vector<std::pair<std::size_t, Rational>> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (sgn(res.primal[i]) > 0) out.emplace_back(i, res.primal[i]);
    }
    return out;
}

}  // namespace pwftap
