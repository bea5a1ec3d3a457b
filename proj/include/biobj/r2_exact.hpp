#pragma once

#include <cstddef>
#include <vector>

#include "biobj/pareto.hpp"

namespace biobj {

// Exact R2 under the continuous uniform weight distribution on [0, 1] with
// weighted-Tchebycheff utility u_w(y) = max(w*y1, (1-w)*y2). All functions
// here require points already shifted so the utopian point is the origin,
// i.e. every coordinate nonnegative (std::domain_error otherwise).
//
// Geometry used throughout: for a single point y, g_y(w) = max(w*y1, (1-w)*y2)
// is piecewise linear in w with its minimum at the balance weight
// w* = y2 / (y1 + y2). Across a sorted front the pointwise-minimum envelope
// assigns each point one weight interval; interval boundaries are the
// separating weights of adjacent points.

// One front point's share of the exact indicator.
struct PointContribution {
    std::size_t index = 0;   // position in the front (ascending f1)
    double w_low = 0.0;      // owned weight interval [w_low, w_high]
    double w_high = 0.0;
    double balance = 0.0;    // balance weight, clipped into the interval
    double partial = 0.0;    // integral of the utility over the interval
};

// Balance weight of a single point. Throws std::domain_error for negative
// coordinates and for the degenerate (0, 0) point (any weight is optimal
// there).
double balance_weight(const ObjectiveVector& y);

// Weight at which the envelope hands over between two adjacent front points
// (left has smaller f1): solves w * right.f1 == (1 - w) * left.f2, giving
// left.f2 / (right.f1 + left.f2). For weights above it the left point wins.
// Throws std::domain_error if the points are not in staircase order or the
// denominator vanishes.
double separating_weight(const ObjectiveVector& left, const ObjectiveVector& right);

// Integral of g_y over [w_low, w_high] via the antiderivative of each linear
// branch, split at the balance weight:
//   (y2/2)*((1-w_low)^2 - (1-w*)^2) + (y1/2)*(w_high^2 - w*^2).
// Requires y != (0,0), 0 <= w_low <= w_high <= 1, and w* within the interval
// up to roundoff; w* is clamped inward so adjacent intervals tile [0, 1]
// exactly. Throws std::domain_error when w* lies genuinely outside (that
// signals a corrupted front ordering) or on the degenerate point.
double point_partial(const ObjectiveVector& y, double w_low, double w_high);

// Per-point contributions. Intervals partition [0, 1] with shared endpoint
// doubles: entry i owns [s_i, s_{i-1}] where s_{-1} = 1, s_{last} = 0, and
// interior boundaries are separating weights of adjacent pairs. The singleton
// front {(0,0)} gets one zero-partial entry spanning [0, 1] (its balance
// weight is undefined; 0.5 is stored to keep the interval invariant).
std::vector<PointContribution> contribution_table(const Front& front);

// Exact R2: sum of the contribution partials, accumulated in index order
// with compensated summation. O(N) after the front's own O(N log N)
// construction.
double r2_exact(const Front& front);

// r2_exact(front.without(i)) - r2_exact(front), clamped to be nonnegative.
// Measures how much the indicator worsens when point i is deleted. Throws
// std::domain_error on a singleton front (removal would leave an empty set),
// std::out_of_range on a bad index.
double exclusive_contribution(const Front& front, std::size_t index);

// Convenience wrapper: shift an arbitrary archive by the utopian point,
// filter to its nondominated subset, and evaluate. The shift validates the
// utopian bound on every input point, dominated ones included.
double r2_exact_of_archive(const std::vector<ObjectiveVector>& archive,
                           const ObjectiveVector& utopian);

}  // namespace biobj
