#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "biobj/core.hpp"

namespace biobj {

// Canonical front families in normalized objective space, utopian at the
// origin. Two are single named points, four are parametric curves:
//   IdealPoint       (0,0)                        exact R2 = 0
//   NadirPoint       (1,1)                        exact R2 = 3/4
//   Linear           f2 = 1 - f1                  exact R2 = 1/6
//   Dtlz1Linear      Linear scaled by 0.5         exact R2 = 1/12
//   ConvexQuadratic  f2 = (1 - sqrt(f1))^2        exact R2 = (3*pi - 8)/16
//   ConcaveCircular  f2 = sqrt(1 - f1^2)          exact R2 = (3*sqrt2*asinh 1 - 2)/8
// The curve values are continuum limits; finite samples converge to them
// from above as the sample densifies.
enum class FrontShape { IdealPoint, NadirPoint, Linear, Dtlz1Linear, ConvexQuadratic, ConcaveCircular };

// Closed-form exact R2 of the shape's full front.
double analytic_r2(FrontShape shape);

// n points on the shape. Point shapes allow only n == 1. Curve shapes place
// points at f1-parameter values k/(n-1) when seed == 0 (n == 1 uses the
// parameter start, t = 0) and at uniformly random parameters otherwise,
// sorted ascending; deterministic per seed. Duplicate parameters are kept as
// drawn — consumers filter. Throws std::invalid_argument for n == 0 or a
// point shape with n > 1.
std::vector<ObjectiveVector> generate_front(FrontShape shape, std::size_t n, std::uint64_t seed);

// n random evaluations of a bi-sphere problem: x uniform in the box [-1,2]^2,
// mapped to (|x - a|^2, |x - b|^2) with fixed anchors a = (0,0), b = (1,1).
// Components are nonnegative, the induced Pareto front is convex, and the
// draw is deterministic per seed. Throws std::invalid_argument for n == 0.
std::vector<ObjectiveVector> generate_cloud(std::size_t n, std::uint64_t seed);

// Result of the adaptive-quadrature cross-check.
struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
};

// Independent R2 oracle: integrates w -> min_y max(w*y1, (1-w)*y2) over
// [0, 1] by adaptive trapezoid refinement, sharing no algebra with the
// closed-form path. Points must be utopian-shifted (nonnegative). Local
// acceptance spends tol proportionally to segment width, so the summed
// error estimate stays below tol; converged reports whether every segment
// met its share before the evaluation budget ran out.
QuadratureResult quadrature_r2(const std::vector<ObjectiveVector>& points, double tol);

}  // namespace biobj
