#pragma once

#include <cstddef>
#include <vector>

#include "biobj/core.hpp"

namespace biobj {

// Relation of a relative to b under minimization.
enum class DominanceRelation {
    StrictlyDominates,  // a < b in both coordinates
    WeaklyDominates,    // a <= b everywhere, a < b somewhere
    Equal,              // identical coordinates
    IsDominated,        // b weakly or strictly dominates a
    Incomparable,       // each wins one coordinate
};

DominanceRelation dominance(const ObjectiveVector& a, const ObjectiveVector& b);

// A mutually nondominated set of points held sorted by ascending f1 (hence
// strictly descending f2). The constructor validates the staircase shape and
// rejects empty input, duplicates, and any weak domination between members.
// Arbitrary finite point clouds go through nondominated_filter first.
class Front {
public:
    explicit Front(std::vector<ObjectiveVector> points);

    std::size_t size() const { return points_.size(); }
    const ObjectiveVector& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<ObjectiveVector>& points() const { return points_; }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    // Copy with point i removed. Throws std::out_of_range on a bad index and
    // std::domain_error when called on a singleton (a front cannot be empty).
    Front without(std::size_t index) const;

private:
    struct AlreadySorted {};
    Front(std::vector<ObjectiveVector> points, AlreadySorted) : points_(std::move(points)) {}

    std::vector<ObjectiveVector> points_;

    friend Front nondominated_filter(std::vector<ObjectiveVector> cloud);
};

// Extracts the nondominated subset of an arbitrary finite cloud: drops
// dominated points and collapses duplicates to one representative. Throws
// std::invalid_argument on an empty cloud or any non-finite coordinate.
// O(N log N): sort by (f1 asc, f2 asc), then one sweep keeping strict
// improvements in f2.
Front nondominated_filter(std::vector<ObjectiveVector> cloud);

}  // namespace biobj
