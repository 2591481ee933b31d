#include <algorithm>

#include <omp.h>

#include "grid_kernel.hpp"

namespace fde::detail {

namespace {

// Minimum over j >= i and all four corners for one tau1 row. Exact min
// reduction, so the result does not depend on the vector width.
double row_minimum(const double* __restrict upper, const double* __restrict lower, int i, int n) {
    const double ui = upper[i];
    const double li = lower[i];
    const double p_i = ui - li;
    const double alpha_hi = ui;
    const double alpha_lo = -li;
    double m = std::numeric_limits<double>::infinity();
#pragma omp simd reduction(min : m)
    for (int j = i; j < n; ++j) {
        const double p_j = upper[j] - lower[j];
        const double beta_hi = upper[j] - ui;
        const double beta_lo = -(lower[j] - li);
        const double d0 = determinant_from_aggregates(alpha_hi, beta_hi, p_i, p_j);
        const double d1 = determinant_from_aggregates(alpha_hi, beta_lo, p_i, p_j);
        const double d2 = determinant_from_aggregates(alpha_lo, beta_hi, p_i, p_j);
        const double d3 = determinant_from_aggregates(alpha_lo, beta_lo, p_i, p_j);
        m = std::min(m, std::min(std::min(d0, d1), std::min(d2, d3)));
    }
    return m;
}

GridHit locate(const CumulativeBounds& g, int i, double row_min) {
    const int n = static_cast<int>(g.tau.size());
    for (int j = i; j < n; ++j) {
        for (int corner = 0; corner < 4; ++corner) {
            if (corner_value(g, i, j, corner) == row_min) return {row_min, i, j, corner};
        }
    }
    return {};
}

}  // namespace

GridHit scan_parallel(const CumulativeBounds& g, int threads) {
    const int n = static_cast<int>(g.tau.size());
    const double* upper = g.upper.data();
    const double* lower = g.lower.data();
    if (threads <= 0) threads = omp_get_max_threads();

    GridHit best;
#pragma omp parallel num_threads(threads)
    {
        GridHit local;
#pragma omp for schedule(dynamic, 16) nowait
        for (int i = 0; i < n; ++i) {
            const double m = row_minimum(upper, lower, i, n);
            if (m < local.value || (m == local.value && i < local.i)) {
                const GridHit hit = locate(g, i, m);
                if (precedes(hit, local)) local = hit;
            }
        }
#pragma omp critical(fde_grid_reduce)
        {
            if (precedes(local, best)) best = local;
        }
    }
    return best;
}

}  // namespace fde::detail
