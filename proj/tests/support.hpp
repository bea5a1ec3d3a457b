#pragma once

// Shared helpers for the unit and acceptance tests: an in-process CLI runner,
// a small deterministic RNG wrapper, and brute-force oracles that deliberately
// use different algorithms than the library code they check.

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "biobj/cli.hpp"
#include "biobj/core.hpp"
#include "biobj/hypervolume.hpp"
#include "biobj/pareto.hpp"

namespace testsupport {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = biobj::run_main(args, in, out, err);
    return {code, out.str(), err.str()};
}

// Deterministic RNG; same generator family as the library but separate seeds.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

private:
    std::mt19937_64 eng_;
};

// O(N^2) nondominated filter: dedupe exactly, then keep points no other point
// weakly dominates. Returns points sorted ascending f1 for comparison.
inline std::vector<biobj::ObjectiveVector> brute_force_filter(
    std::vector<biobj::ObjectiveVector> pts) {
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return a.f1 < b.f1 || (a.f1 == b.f1 && a.f2 < b.f2);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<biobj::ObjectiveVector> kept;
    for (const auto& p : pts) {
        bool dominated = false;
        for (const auto& q : pts) {
            if (q == p) continue;
            if (q.f1 <= p.f1 && q.f2 <= p.f2) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(p);
    }
    return kept;
}

// Union area of the staircase boxes via inclusion-exclusion: box areas minus
// adjacent-pair overlaps (non-adjacent overlaps are nested inside those).
inline double hv_inclusion_exclusion(const biobj::Front& front, const biobj::ReferencePoint& ref) {
    const auto box = [&](const biobj::ObjectiveVector& p) {
        return std::max(0.0, ref.f1 - p.f1) * std::max(0.0, ref.f2 - p.f2);
    };
    double area = 0.0;
    for (std::size_t i = 0; i < front.size(); ++i) {
        area += box(front[i]);
        if (i + 1 < front.size())
            area -= std::max(0.0, ref.f1 - front[i + 1].f1) *
                    std::max(0.0, ref.f2 - front[i].f2);
    }
    return area;
}

// Second independent hv oracle: chop the plane into grid cells induced by all
// coordinates, count each cell fully dominated by some point.
inline double hv_grid_cells(const std::vector<biobj::ObjectiveVector>& pts,
                            const biobj::ReferencePoint& ref) {
    std::vector<double> xs{ref.f1}, ys{ref.f2};
    for (const auto& p : pts) {
        if (p.f1 < ref.f1) xs.push_back(p.f1);
        if (p.f2 < ref.f2) ys.push_back(p.f2);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    double area = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
            const bool covered = std::any_of(pts.begin(), pts.end(), [&](const auto& p) {
                return p.f1 <= xs[i] && p.f2 <= ys[j];
            });
            if (covered) area += (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j]);
        }
    }
    return area;
}

// Raw uniform points in [lo, hi]^2, duplicates possible.
inline std::vector<biobj::ObjectiveVector> random_box_cloud(std::size_t n, double lo, double hi,
                                                            Rng& rng) {
    std::vector<biobj::ObjectiveVector> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.push_back({rng.range(lo, hi), rng.range(lo, hi)});
    return pts;
}

}  // namespace testsupport
