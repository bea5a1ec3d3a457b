#include "biobj/core.hpp"

#include <cstdio>

namespace biobj {

ObjectiveVector shift_to_utopian(const ObjectiveVector& y, const ObjectiveVector& ystar) {
    if (!is_finite(y) || !is_finite(ystar))
        throw std::domain_error("shift_to_utopian: non-finite coordinate");
    if (y.f1 < ystar.f1 || y.f2 < ystar.f2)
        throw std::domain_error("shift_to_utopian: point lies below the utopian point");
    return {y.f1 - ystar.f1, y.f2 - ystar.f2};
}

std::string format_value(double v, int significant_digits) {
    if (significant_digits < 1 || significant_digits > 17)
        throw std::invalid_argument("format_value: significant digits must be in [1, 17]");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
    return buf;
}

}  // namespace biobj
