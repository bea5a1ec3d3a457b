#include "biobj/r2_discrete.hpp"

#include <algorithm>
#include <stdexcept>

namespace biobj {

WeightSet::WeightSet(std::vector<double> w1_values) : w1_(std::move(w1_values)) {
    if (w1_.empty()) throw std::invalid_argument("WeightSet: empty weight list");
    for (double w : w1_)
        if (!(w >= 0.0 && w <= 1.0)) throw std::domain_error("WeightSet: weight outside [0, 1]");
    if (!std::is_sorted(w1_.begin(), w1_.end()) ||
        std::adjacent_find(w1_.begin(), w1_.end()) != w1_.end())
        throw std::invalid_argument("WeightSet: weights must be strictly increasing");
}

WeightSet WeightSet::uniform(std::size_t n) {
    if (n < 2) throw std::invalid_argument("WeightSet::uniform: need at least two weights");
    std::vector<double> w(n);
    for (std::size_t k = 0; k < n; ++k)
        w[k] = static_cast<double>(k) / static_cast<double>(n - 1);
    return WeightSet(std::move(w));
}

double tchebycheff_utility(const WeightVector& w, const ObjectiveVector& y) {
    if (!is_finite(y) || y.f1 < 0.0 || y.f2 < 0.0)
        throw std::domain_error("tchebycheff_utility: point must be utopian-shifted");
    return std::max(w.w1() * y.f1, w.w2() * y.f2);
}

double r2_discrete(const std::vector<ObjectiveVector>& points, const WeightSet& weights) {
    if (points.empty()) throw std::invalid_argument("r2_discrete: empty point list");
    for (const auto& p : points)
        if (!is_finite(p) || p.f1 < 0.0 || p.f2 < 0.0)
            throw std::domain_error("r2_discrete: points must be utopian-shifted");
    // Straight |W| x N scan: the min absorbs dominated points without any
    // pre-filtering, which keeps this path an honest baseline for the
    // complexity comparison against the closed form.
    CompensatedSum acc;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        const double w1 = weights[k];
        const double w2 = 1.0 - w1;
        double best = std::max(w1 * points[0].f1, w2 * points[0].f2);
        for (std::size_t i = 1; i < points.size(); ++i)
            best = std::min(best, std::max(w1 * points[i].f1, w2 * points[i].f2));
        acc.add(best);
    }
    return acc.value() / static_cast<double>(weights.size());
}

}  // namespace biobj
