#include "biobj/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace biobj {

namespace {

// Uniform double in [0, 1) built from the top 53 bits of the engine output.
// uniform_real_distribution's mapping is implementation-defined; this one is
// reproducible across standard libraries.
double unit_double(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

bool is_point_shape(FrontShape shape) {
    return shape == FrontShape::IdealPoint || shape == FrontShape::NadirPoint;
}

// Curve shapes parameterized by t in [0, 1], ascending f1.
ObjectiveVector curve_point(FrontShape shape, double t) {
    switch (shape) {
        case FrontShape::Linear: return {t, 1.0 - t};
        case FrontShape::Dtlz1Linear: return {0.5 * t, 0.5 * (1.0 - t)};
        case FrontShape::ConvexQuadratic: {
            const double s = 1.0 - std::sqrt(t);
            return {t, s * s};
        }
        case FrontShape::ConcaveCircular: return {t, std::sqrt(1.0 - t * t)};
        case FrontShape::IdealPoint: return {0.0, 0.0};
        case FrontShape::NadirPoint: return {1.0, 1.0};
    }
    throw std::invalid_argument("curve_point: unknown shape");
}

}  // namespace

double analytic_r2(FrontShape shape) {
    switch (shape) {
        case FrontShape::IdealPoint: return 0.0;
        case FrontShape::NadirPoint: return 0.75;
        case FrontShape::Linear: return 1.0 / 6.0;
        case FrontShape::Dtlz1Linear: return 1.0 / 12.0;  // Linear scaled by 0.5; R2 is homogeneous
        case FrontShape::ConvexQuadratic: return (3.0 * std::numbers::pi - 8.0) / 16.0;
        case FrontShape::ConcaveCircular:
            return (3.0 * std::numbers::sqrt2 * std::asinh(1.0) - 2.0) / 8.0;
    }
    throw std::invalid_argument("analytic_r2: unknown shape");
}

std::vector<ObjectiveVector> generate_front(FrontShape shape, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("generate_front: need at least one point");
    if (is_point_shape(shape)) {
        if (n > 1)
            throw std::invalid_argument("generate_front: point shapes are singletons (n must be 1)");
        return {curve_point(shape, 0.0)};
    }
    std::vector<double> ts;
    ts.reserve(n);
    if (seed == 0) {
        if (n == 1) {
            ts.push_back(0.0);
        } else {
            for (std::size_t k = 0; k < n; ++k)
                ts.push_back(static_cast<double>(k) / static_cast<double>(n - 1));
        }
    } else {
        std::mt19937_64 eng(seed);
        for (std::size_t k = 0; k < n; ++k) ts.push_back(unit_double(eng));
        std::sort(ts.begin(), ts.end());
    }
    std::vector<ObjectiveVector> pts;
    pts.reserve(n);
    for (double t : ts) pts.push_back(curve_point(shape, t));
    return pts;
}

std::vector<ObjectiveVector> generate_cloud(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("generate_cloud: need at least one point");
    std::vector<ObjectiveVector> pts;
    pts.reserve(n);
    std::mt19937_64 eng(seed);
    for (std::size_t k = 0; k < n; ++k) {
        const double x1 = -1.0 + 3.0 * unit_double(eng);
        const double x2 = -1.0 + 3.0 * unit_double(eng);
        const double d1 = x1 * x1 + x2 * x2;                                // anchor (0, 0)
        const double d2 = (x1 - 1.0) * (x1 - 1.0) + (x2 - 1.0) * (x2 - 1.0);  // anchor (1, 1)
        pts.push_back({d1, d2});
    }
    return pts;
}

QuadratureResult quadrature_r2(const std::vector<ObjectiveVector>& points, double tol) {
    if (points.empty()) throw std::invalid_argument("quadrature_r2: empty point set");
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw std::domain_error("quadrature_r2: tolerance must be positive");
    for (const auto& p : points)
        if (!is_finite(p) || p.f1 < 0.0 || p.f2 < 0.0)
            throw std::domain_error("quadrature_r2: points must be utopian-shifted");

    const auto g = [&points](double w) {
        double best = std::max(w * points[0].f1, (1.0 - w) * points[0].f2);
        for (std::size_t i = 1; i < points.size(); ++i)
            best = std::min(best, std::max(w * points[i].f1, (1.0 - w) * points[i].f2));
        return best;
    };

    // Adaptive trapezoid with an explicit stack. The integrand is piecewise
    // linear, so trapezoids are exact between kinks and refinement spends its
    // work only on segments that straddle one. The dense initial grid keeps a
    // kink from hiding symmetrically around a coarse midpoint.
    constexpr std::size_t kInitialSegments = 1024;
    constexpr std::size_t kEvalBudget = std::size_t{1} << 23;

    struct Segment {
        double a, b, fa, fb;
    };
    std::vector<Segment> stack;
    stack.reserve(kInitialSegments + 64);
    std::size_t evals = 0;
    {
        std::vector<double> fx(kInitialSegments + 1);
        for (std::size_t i = 0; i <= kInitialSegments; ++i) {
            fx[i] = g(static_cast<double>(i) / kInitialSegments);
            ++evals;
        }
        // Pushed right-to-left so segments pop in ascending order; order only
        // matters for summation stability.
        for (std::size_t i = kInitialSegments; i-- > 0;) {
            stack.push_back({static_cast<double>(i) / kInitialSegments,
                             static_cast<double>(i + 1) / kInitialSegments, fx[i], fx[i + 1]});
        }
    }

    CompensatedSum value;
    CompensatedSum err;
    bool converged = true;
    while (!stack.empty()) {
        const Segment s = stack.back();
        stack.pop_back();
        const double h = s.b - s.a;
        const double m = 0.5 * (s.a + s.b);
        const double fm = g(m);
        ++evals;
        const double s1 = 0.5 * h * (s.fa + s.fb);
        const double s2 = 0.25 * h * (s.fa + 2.0 * fm + s.fb);
        const double delta = std::abs(s2 - s1);
        const bool out_of_budget = evals >= kEvalBudget;
        if (delta <= tol * h || h <= 1e-15 || out_of_budget) {
            value.add(s2);
            err.add(delta / 3.0);  // trapezoid halving error model
            // Accepted only because of the width floor or the budget: the
            // requested tolerance was not actually met here.
            if (delta > tol * h) converged = false;
        } else {
            stack.push_back({m, s.b, fm, s.fb});
            stack.push_back({s.a, m, s.fa, fm});
        }
    }
    return {value.value(), err.value(), converged};
}

}  // namespace biobj
