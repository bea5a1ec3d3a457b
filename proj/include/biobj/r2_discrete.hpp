#pragma once

#include <cstddef>
#include <vector>

#include "biobj/core.hpp"

namespace biobj {

// A finite set of weights for the classical discretized R2, kept as strictly
// increasing w1 values; the constructor validates.
class WeightSet {
public:
    explicit WeightSet(std::vector<double> w1_values);

    std::size_t size() const { return w1_.size(); }
    double operator[](std::size_t i) const { return w1_[i]; }
    const std::vector<double>& values() const { return w1_; }

    // The n weights w1 = k/(n-1), k = 0..n-1, endpoints included. Throws
    // std::invalid_argument for n < 2 (the spacing formula degenerates).
    static WeightSet uniform(std::size_t n);

private:
    std::vector<double> w1_;
};

// Weighted-Tchebycheff utility max(w1*y1, (1-w1)*y2) of a utopian-shifted
// point. Throws std::domain_error for negative coordinates.
double tchebycheff_utility(const WeightVector& w, const ObjectiveVector& y);

// Classical discretized R2: mean over the weight set of the best utility
// among the points. Accepts raw archives — dominated points and duplicates
// are absorbed by the min and never change the value. Only weakly
// Pareto-compliant. Throws std::invalid_argument on an empty list,
// std::domain_error on unshifted points. O(|W| * N).
double r2_discrete(const std::vector<ObjectiveVector>& points, const WeightSet& weights);

}  // namespace biobj
