#include "biobj/r2_exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace biobj {

namespace {

void require_shifted(const ObjectiveVector& y, const char* who) {
    if (!is_finite(y) || y.f1 < 0.0 || y.f2 < 0.0)
        throw std::domain_error(std::string(who) +
                                ": point must be utopian-shifted (finite, nonnegative)");
}

// Slack for balance weights that land a hair outside their interval. The
// interval endpoints and the balance weight come from different divisions,
// so they can disagree by an ulp or two; anything larger is a genuinely
// wrong interval and gets rejected.
constexpr double kBoundarySlack = 1e-12;

}  // namespace

double balance_weight(const ObjectiveVector& y) {
    require_shifted(y, "balance_weight");
    const double denom = y.f1 + y.f2;
    if (denom == 0.0)
        throw std::domain_error("balance_weight: undefined for the origin point");
    return y.f2 / denom;
}

double separating_weight(const ObjectiveVector& left, const ObjectiveVector& right) {
    require_shifted(left, "separating_weight");
    require_shifted(right, "separating_weight");
    if (!(left.f1 < right.f1 && left.f2 > right.f2))
        throw std::domain_error("separating_weight: points must be in staircase order");
    const double denom = right.f1 + left.f2;
    if (denom == 0.0) throw std::domain_error("separating_weight: degenerate point pair");
    // Solves w * right.f1 == (1 - w) * left.f2, the weight at which the two
    // neighbors' utilities meet at the staircase corner (right.f1, left.f2).
    return left.f2 / denom;
}

double point_partial(const ObjectiveVector& y, double w_low, double w_high) {
    if (!(w_low >= 0.0 && w_low <= w_high && w_high <= 1.0))
        throw std::domain_error("point_partial: need 0 <= w_low <= w_high <= 1");
    double ws = balance_weight(y);  // validates the point, rejects (0,0)
    if (ws < w_low - kBoundarySlack || ws > w_high + kBoundarySlack)
        throw std::domain_error("point_partial: balance weight outside the weight interval");
    ws = std::clamp(ws, w_low, w_high);

    // (1-w)*f2 branch on [w_low, ws], w*f1 branch on [ws, w_high]; both
    // integrate to exact-difference-of-squares form. A clamped ws zeroes the
    // vanished branch exactly, so adjacent intervals tile without gaps.
    const double lo = 1.0 - w_low, ls = 1.0 - ws;
    return 0.5 * y.f2 * (lo * lo - ls * ls) + 0.5 * y.f1 * (w_high * w_high - ws * ws);
}

std::vector<PointContribution> contribution_table(const Front& front) {
    for (const auto& p : front) require_shifted(p, "contribution_table");
    const std::size_t n = front.size();
    if (n == 1 && front[0].f1 == 0.0 && front[0].f2 == 0.0) {
        // Utility is identically zero; balance weight undefined, stored as
        // the interval midpoint to keep w_low <= balance <= w_high.
        return {{0, 0.0, 1.0, 0.5, 0.0}};
    }
    std::vector<PointContribution> table(n);
    double w_high = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w_low = (i + 1 < n) ? separating_weight(front[i], front[i + 1]) : 0.0;
        table[i].index = i;
        table[i].w_low = w_low;
        table[i].w_high = w_high;
        table[i].balance = std::clamp(balance_weight(front[i]), w_low, w_high);
        table[i].partial = point_partial(front[i], w_low, w_high);
        w_high = w_low;
    }
    return table;
}

double r2_exact(const Front& front) {
    const auto table = contribution_table(front);
    CompensatedSum acc;
    for (const auto& c : table) acc.add(c.partial);
    return acc.value();
}

double exclusive_contribution(const Front& front, std::size_t index) {
    const double with = r2_exact(front);
    const double without = r2_exact(front.without(index));
    // Deleting a point can only shrink the envelope's coverage, so the
    // difference is nonnegative up to roundoff; clamp the roundoff away.
    return std::max(0.0, without - with);
}

double r2_exact_of_archive(const std::vector<ObjectiveVector>& archive,
                           const ObjectiveVector& utopian) {
    if (archive.empty()) throw std::invalid_argument("r2_exact_of_archive: empty archive");
    std::vector<ObjectiveVector> shifted;
    shifted.reserve(archive.size());
    for (const auto& y : archive) shifted.push_back(shift_to_utopian(y, utopian));
    return r2_exact(nondominated_filter(std::move(shifted)));
}

}  // namespace biobj
