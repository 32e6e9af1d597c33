#pragma once

#include "pwftap/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace pwftap {

using Point = std::vector<Rational>;

struct RelativeInteriorTest {
    bool zero_in_relative_interior = false;
    /// When true: strictly positive weights, one per point, summing to one,
    /// with sum_i weights[i] * points[i] == 0.
    std::vector<Rational> weights;
    /// When false: H with H.y >= 0 for every point and H.y > 0 for some.
    Point separator;
};

/// Decides whether 0 lies in the relative interior of conv(points).
RelativeInteriorTest zero_in_relative_interior(const std::vector<Point>& points);

struct SupportSeparator {
    Point H;                          ///< primitive integer vector, zero in the ri case
    std::vector<std::size_t> strict;  ///< {i : H.points[i] > 0}, increasing
};

/// Separator with H.y >= 0 on every point whose strict set is the largest
/// achievable one. All points must have the same dimension.
SupportSeparator max_support_separator(const std::vector<Point>& points);

/// Convex weights reconstructing zero that charge the target point. Returns
/// (index, weight) pairs with positive weights, increasing by index.
/// Throws PreconditionError unless 0 is in the relative interior.
std::vector<std::pair<std::size_t, Rational>> zero_convex_combination(const std::vector<Point>& points,
                                                                      std::size_t target_index);

}  // namespace pwftap
