#pragma once

#include <limits>
#include <vector>

#include "fde/determinant.hpp"

namespace fde::detail {

/// Cumulative bound integrals on the tau grid:
/// upper[k] = int_0^tau[k] p_plus, lower[k] = int_0^tau[k] p_minus.
struct CumulativeBounds {
    std::vector<double> tau;
    std::vector<double> upper;
    std::vector<double> lower;
};

struct GridHit {
    double value = std::numeric_limits<double>::infinity();
    int i = -1;
    int j = -1;
    int corner = -1;
};

/// Total order used for the reduction: value, then i, then j, then corner.
inline bool precedes(const GridHit& a, const GridHit& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.corner < b.corner;
}

// Corner c: bit 1 selects the alpha bound (0 upper, 1 lower), bit 0 the beta bound.
inline double corner_alpha(const CumulativeBounds& g, int i, int corner) {
    return (corner & 2) ? -g.lower[i] : g.upper[i];
}

inline double corner_beta(const CumulativeBounds& g, int i, int j, int corner) {
    return (corner & 1) ? -(g.lower[j] - g.lower[i]) : g.upper[j] - g.upper[i];
}

inline double corner_value(const CumulativeBounds& g, int i, int j, int corner) {
    const double p_i = g.upper[i] - g.lower[i];
    const double p_j = g.upper[j] - g.lower[j];
    return determinant_from_aggregates(corner_alpha(g, i, corner), corner_beta(g, i, j, corner), p_i, p_j);
}

GridHit scan_serial(const CumulativeBounds& g);
GridHit scan_parallel(const CumulativeBounds& g, int threads);

MinimumReport to_report(const CumulativeBounds& g, const GridHit& hit);

CumulativeBounds constant_bounds(double A, double B, int n_tau);
CumulativeBounds general_bounds(const StepFunction& p_plus, const StepFunction& p_minus, int n_tau);

}  // namespace fde::detail
