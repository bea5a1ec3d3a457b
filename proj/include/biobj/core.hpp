#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace biobj {

// A point in bi-objective space, minimization convention. Plain value type;
// equality is exact floating-point comparison (used only for deduplication,
// never with a tolerance).
struct ObjectiveVector {
    double f1 = 0.0;
    double f2 = 0.0;

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

inline bool is_finite(const ObjectiveVector& y) {
    return std::isfinite(y.f1) && std::isfinite(y.f2);
}

// Convex weight pair (w1, 1 - w1), parameterized by w1 in [0, 1].
class WeightVector {
public:
    explicit WeightVector(double w1) : w1_(w1) {
        if (!(w1 >= 0.0 && w1 <= 1.0))
            throw std::domain_error("WeightVector: w1 must lie in [0, 1]");
    }

    double w1() const { return w1_; }
    double w2() const { return 1.0 - w1_; }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    double w1_;
};

// Nonnegative scalar quality value. Lower is better for R2, higher for HV.
struct IndicatorValue {
    double value = 0.0;
};

// Componentwise y - ystar. Throws std::domain_error if y lies strictly below
// the utopian point in any coordinate, or if either argument is not finite.
ObjectiveVector shift_to_utopian(const ObjectiveVector& y, const ObjectiveVector& ystar);

// Shortest decimal form with the given number of significant digits.
// 17 digits round-trips any double exactly.
std::string format_value(double v, int significant_digits = 17);

// Neumaier compensated summation. Accumulation order is the caller's; the
// compensation keeps million-term sums at a few ulps of the exact result.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace biobj
