#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace fde::detail {

struct ScalarMinimum {
    double x;
    double value;
};

/// Golden-section search on [lo, hi] until the bracket is narrower than width.
template <class F>
ScalarMinimum golden_section(F&& f, double lo, double hi, double width) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > width) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? ScalarMinimum{x1, f1} : ScalarMinimum{x2, f2};
}

/// Dense uniform scan of (eps, 1 - eps) followed by golden-section refinement
/// around the best sample. Points where f is not finite are skipped.
template <class F>
ScalarMinimum scan_then_refine(F&& f, int n_points = 10001, double eps = 1e-6,
                               double width = 1e-10) {
    const double step = (1.0 - 2.0 * eps) / (n_points - 1);
    int best = -1;
    double best_value = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n_points; ++k) {
        const double v = f(eps + k * step);
        if (std::isfinite(v) && v < best_value) {
            best_value = v;
            best = k;
        }
    }
    if (best < 0) return {std::numeric_limits<double>::quiet_NaN(), best_value};

    const double lo = eps + std::max(best - 1, 0) * step;
    const double hi = eps + std::min(best + 1, n_points - 1) * step;
    auto guarded = [&](double x) {
        const double v = f(x);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };
    const ScalarMinimum refined = golden_section(guarded, lo, hi, width);
    if (refined.value < best_value) return refined;
    return {eps + best * step, best_value};
}

}  // namespace fde::detail
