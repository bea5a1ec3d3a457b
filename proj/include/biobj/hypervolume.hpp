#pragma once

#include "biobj/core.hpp"
#include "biobj/pareto.hpp"

namespace biobj {

// Reference (anti-optimal) point bounding the dominated region from above.
struct ReferencePoint {
    double f1 = 0.0;
    double f2 = 0.0;
};

// 2-D hypervolume: area of the union of boxes [f1, r1] x [f2, r2] over front
// points strictly dominating the reference point. Points touching or beyond
// the reference contribute zero; the value is 0 when no point dominates it.
// Translation-invariant: shifting front and reference together leaves the
// area unchanged. O(N) sweep over the already-sorted front. Throws
// std::invalid_argument on a non-finite reference.
double hv2d(const Front& front, const ReferencePoint& ref);

}  // namespace biobj
