#include "biobj/pareto.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace biobj {

DominanceRelation dominance(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (!is_finite(a) || !is_finite(b))
        throw std::domain_error("dominance: non-finite coordinate");
    const bool le1 = a.f1 <= b.f1, le2 = a.f2 <= b.f2;
    const bool ge1 = a.f1 >= b.f1, ge2 = a.f2 >= b.f2;
    if (le1 && le2 && ge1 && ge2) return DominanceRelation::Equal;
    if (le1 && le2) {
        return (a.f1 < b.f1 && a.f2 < b.f2) ? DominanceRelation::StrictlyDominates
                                            : DominanceRelation::WeaklyDominates;
    }
    if (ge1 && ge2) return DominanceRelation::IsDominated;
    return DominanceRelation::Incomparable;
}

Front::Front(std::vector<ObjectiveVector> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("Front: empty point set");
    for (const auto& p : points_)
        if (!is_finite(p)) throw std::invalid_argument("Front: non-finite coordinate");
    std::sort(points_.begin(), points_.end(), [](const auto& a, const auto& b) {
        return a.f1 < b.f1 || (a.f1 == b.f1 && a.f2 < b.f2);
    });
    // Sorted by ascending f1, mutual nondominance forces strictly descending
    // f2; any violation means a duplicate or a dominated member.
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (points_[i].f1 == points_[i - 1].f1 || points_[i].f2 >= points_[i - 1].f2)
            throw std::invalid_argument(
                "Front: members must be mutually nondominated and distinct (violation at sorted index " +
                std::to_string(i) + ")");
    }
}

Front Front::without(std::size_t index) const {
    if (index >= points_.size()) throw std::out_of_range("Front::without: index out of range");
    if (points_.size() == 1)
        throw std::domain_error("Front::without: cannot remove the only point");
    std::vector<ObjectiveVector> rest;
    rest.reserve(points_.size() - 1);
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (i != index) rest.push_back(points_[i]);
    return Front(std::move(rest), AlreadySorted{});
}

Front nondominated_filter(std::vector<ObjectiveVector> cloud) {
    if (cloud.empty()) throw std::invalid_argument("nondominated_filter: empty cloud");
    for (const auto& p : cloud)
        if (!is_finite(p)) throw std::invalid_argument("nondominated_filter: non-finite coordinate");
    std::sort(cloud.begin(), cloud.end(), [](const auto& a, const auto& b) {
        return a.f1 < b.f1 || (a.f1 == b.f1 && a.f2 < b.f2);
    });
    // After the sort, a point survives iff its f2 strictly improves on the
    // best f2 seen so far: equal-f1 runs keep only their first (smallest f2)
    // element, duplicates collapse, dominated points never improve.
    std::vector<ObjectiveVector> kept;
    double best_f2 = cloud.front().f2;
    kept.push_back(cloud.front());
    for (std::size_t i = 1; i < cloud.size(); ++i) {
        if (cloud[i].f2 < best_f2) {
            kept.push_back(cloud[i]);
            best_f2 = cloud[i].f2;
        }
    }
    return Front(std::move(kept), Front::AlreadySorted{});
}

}  // namespace biobj
