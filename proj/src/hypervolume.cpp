#include "biobj/hypervolume.hpp"

#include <cmath>
#include <stdexcept>

namespace biobj {

double hv2d(const Front& front, const ReferencePoint& ref) {
    if (!std::isfinite(ref.f1) || !std::isfinite(ref.f2))
        throw std::invalid_argument("hv2d: non-finite reference point");

    // Left-to-right sweep over the staircase: each point adds the rectangle
    // between its f1 and the reference, capped above by the previous f2
    // level. Fronts are sorted ascending f1 / descending f2, so points right
    // of the reference form a suffix and points above it a prefix.
    CompensatedSum area;
    double level = ref.f2;
    for (const auto& p : front) {
        if (p.f1 >= ref.f1) break;
        if (p.f2 >= level) continue;
        area.add((ref.f1 - p.f1) * (level - p.f2));
        level = p.f2;
    }
    return area.value();
}

}  // namespace biobj
