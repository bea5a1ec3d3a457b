#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "biobj/r2_exact.hpp"
#include "biobj/reference.hpp"
#include "doctest.h"
#include "support.hpp"

using biobj::Front;
using biobj::FrontShape;
using biobj::ObjectiveVector;
using biobj::analytic_r2;
using biobj::generate_cloud;
using biobj::generate_front;
using biobj::nondominated_filter;
using biobj::quadrature_r2;
using biobj::r2_exact;

TEST_SUITE("reference") {
    TEST_CASE("analytic values match independently written expressions") {
        CHECK(analytic_r2(FrontShape::IdealPoint) == 0.0);
        CHECK(analytic_r2(FrontShape::NadirPoint) == 0.75);
        CHECK(analytic_r2(FrontShape::Linear) == 1.0 / 6.0);
        CHECK(analytic_r2(FrontShape::Dtlz1Linear) == 1.0 / 12.0);
        // same constants through different algebra, to catch typos
        CHECK(analytic_r2(FrontShape::ConvexQuadratic) ==
              doctest::Approx(3.0 * std::numbers::pi / 16.0 - 0.5).epsilon(1e-15));
        CHECK(analytic_r2(FrontShape::ConcaveCircular) ==
              doctest::Approx(3.0 * std::numbers::sqrt2 *
                                  std::log(1.0 + std::numbers::sqrt2) / 8.0 -
                              0.25)
                  .epsilon(1e-15));
    }

    TEST_CASE("point shapes generate their single named point") {
        CHECK(generate_front(FrontShape::IdealPoint, 1, 0) ==
              std::vector<ObjectiveVector>{{0, 0}});
        CHECK(generate_front(FrontShape::NadirPoint, 1, 5) ==
              std::vector<ObjectiveVector>{{1, 1}});
        CHECK_THROWS_AS(generate_front(FrontShape::NadirPoint, 2, 0), std::invalid_argument);
        CHECK_THROWS_AS(generate_front(FrontShape::Linear, 0, 0), std::invalid_argument);
    }

    TEST_CASE("even spacing places curve points at k/(n-1)") {
        CHECK(generate_front(FrontShape::Linear, 3, 0) ==
              std::vector<ObjectiveVector>{{0, 1}, {0.5, 0.5}, {1, 0}});
        CHECK(generate_front(FrontShape::ConcaveCircular, 2, 0) ==
              std::vector<ObjectiveVector>{{0, 1}, {1, 0}});
        CHECK(generate_front(FrontShape::Linear, 1, 0) ==
              std::vector<ObjectiveVector>{{0, 1}});  // parameter start
    }

    TEST_CASE("generated points lie on their curve") {
        for (auto shape : {FrontShape::Linear, FrontShape::Dtlz1Linear,
                           FrontShape::ConvexQuadratic, FrontShape::ConcaveCircular}) {
            const auto pts = generate_front(shape, 200, 99);
            double prev = -1.0;
            for (const auto& p : pts) {
                CHECK(p.f1 >= prev);  // sorted ascending parameter
                prev = p.f1;
                switch (shape) {
                    case FrontShape::Linear: CHECK(p.f2 == 1.0 - p.f1); break;
                    case FrontShape::Dtlz1Linear: CHECK(p.f2 == 0.5 - p.f1); break;
                    case FrontShape::ConvexQuadratic: {
                        const double s = 1.0 - std::sqrt(p.f1);
                        CHECK(p.f2 == s * s);
                        break;
                    }
                    case FrontShape::ConcaveCircular:
                        CHECK(p.f2 == std::sqrt(1.0 - p.f1 * p.f1));
                        break;
                    default: break;
                }
            }
        }
    }

    TEST_CASE("generators are deterministic per seed and sensitive to it") {
        CHECK(generate_front(FrontShape::Linear, 100, 7) ==
              generate_front(FrontShape::Linear, 100, 7));
        CHECK(generate_front(FrontShape::Linear, 100, 7) !=
              generate_front(FrontShape::Linear, 100, 8));
        CHECK(generate_cloud(1000, 3) == generate_cloud(1000, 3));
        CHECK(generate_cloud(1000, 3) != generate_cloud(1000, 4));
    }

    TEST_CASE("cloud points are squared distances, hence nonnegative") {
        const auto pts = generate_cloud(5000, 11);
        REQUIRE(pts.size() == 5000);
        for (const auto& p : pts) {
            CHECK(p.f1 >= 0.0);
            CHECK(p.f2 >= 0.0);
            CHECK(p.f1 <= 8.0);  // max squared distance within the [-1,2]^2 box
            CHECK(p.f2 <= 8.0);
        }
        CHECK(generate_cloud(1, 12).size() == 1);
        CHECK_THROWS_AS(generate_cloud(0, 1), std::invalid_argument);
    }

    TEST_CASE("sampled curve fronts approach the analytic value from above") {
        for (auto shape : {FrontShape::Linear, FrontShape::Dtlz1Linear,
                           FrontShape::ConvexQuadratic, FrontShape::ConcaveCircular}) {
            const double limit = analytic_r2(shape);
            const double coarse =
                r2_exact(nondominated_filter(generate_front(shape, 1000, 0)));
            const double fine =
                r2_exact(nondominated_filter(generate_front(shape, 10000, 0)));
            CHECK(coarse > limit);
            CHECK(fine > limit);
            CHECK(fine < coarse);  // densification improves monotonically here
            CHECK(fine == doctest::Approx(limit).epsilon(1e-3));
        }
    }

    TEST_CASE("dtlz1 front value is exactly half the linear front value") {
        for (std::size_t n : {2, 3, 50, 1001}) {
            const double lin = r2_exact(nondominated_filter(generate_front(FrontShape::Linear, n, 0)));
            const double dtlz = r2_exact(
                nondominated_filter(generate_front(FrontShape::Dtlz1Linear, n, 0)));
            CHECK(dtlz == 0.5 * lin);  // bitwise: scaling by 0.5 is exact in every step
        }
    }

    TEST_CASE("quadrature reproduces hand-checked integrals") {
        const auto q1 = quadrature_r2({{1, 1}}, 1e-10);
        CHECK(q1.converged);
        CHECK(std::abs(q1.value - 0.75) <= 1e-10);
        CHECK(q1.error_estimate <= 1e-10);

        const auto q2 = quadrature_r2({{1, 3}, {3, 1}}, 1e-10);
        CHECK(q2.converged);
        CHECK(std::abs(q2.value - 1.0) <= 1e-10);

        const auto front = nondominated_filter(generate_front(FrontShape::Linear, 1000, 0));
        const auto q3 = quadrature_r2(front.points(), 1e-8);
        CHECK(q3.converged);
        CHECK(std::abs(q3.value - r2_exact(front)) <= 1e-8);
    }

    TEST_CASE("quadrature validates input and reports budget exhaustion") {
        CHECK_THROWS_AS(quadrature_r2({}, 1e-8), std::invalid_argument);
        CHECK_THROWS_AS(quadrature_r2({{1, 1}}, 0.0), std::domain_error);
        CHECK_THROWS_AS(quadrature_r2({{1, 1}}, -1e-3), std::domain_error);
        CHECK_THROWS_AS(quadrature_r2({{-1, 1}}, 1e-8), std::domain_error);

        // A kink at 2/3 never lands on a bisection point, so an unreachable
        // tolerance must bottom out at the width floor and say so. (Fronts
        // whose kinks are all dyadic, like {(1,3),(3,1)}, refine exactly and
        // legitimately converge even at this tolerance.)
        const auto q = quadrature_r2({{1, 2}, {3, 1}}, 1e-300);
        CHECK_FALSE(q.converged);
        const auto exact = r2_exact(Front({{1, 2}, {3, 1}}));
        CHECK(std::abs(q.value - exact) <= 1e-9);  // estimate still sane

        const auto dyadic = quadrature_r2({{1, 3}, {3, 1}}, 1e-300);
        CHECK(std::abs(dyadic.value - 1.0) <= 1e-12);
    }

    TEST_CASE("trapezoids anchored on the true breakpoints reproduce the closed form") {
        // The integrand is linear between consecutive balance/separating
        // weights, so one trapezoid per gap is exact up to roundoff. This
        // shares no code with either the closed form or the adaptive oracle.
        const Front front = nondominated_filter(generate_cloud(300, 13));
        std::vector<double> cuts{0.0, 1.0};
        for (std::size_t i = 0; i < front.size(); ++i) {
            cuts.push_back(biobj::balance_weight(front[i]));
            if (i + 1 < front.size())
                cuts.push_back(biobj::separating_weight(front[i], front[i + 1]));
        }
        std::sort(cuts.begin(), cuts.end());
        const auto g = [&front](double w) {
            double best = std::max(w * front[0].f1, (1.0 - w) * front[0].f2);
            for (const auto& p : front)
                best = std::min(best, std::max(w * p.f1, (1.0 - w) * p.f2));
            return best;
        };
        biobj::CompensatedSum area;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            area.add(0.5 * (g(cuts[i]) + g(cuts[i + 1])) * (cuts[i + 1] - cuts[i]));
        CHECK(area.value() == doctest::Approx(r2_exact(front)).epsilon(1e-13));
    }
}
