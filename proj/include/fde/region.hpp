#pragma once

// Parameter-plane scans over (A, B): every criterion plus both routes to the
// determinant minimum, one row per grid point, in (A, B) lexicographic order.

#include <optional>
#include <string>
#include <vector>

#include "fde/criteria.hpp"

namespace fde {

struct RegionSpec {
    double a_lo = 0.0;
    double a_hi = 0.95;
    double b_lo = 0.0;
    double b_hi = 3.2;
    int nA = 20;
    int nB = 20;
    int n_tau = 2000;

    /// Throws DomainError on negative or reversed ranges or counts < 2.
    void validate() const;
    /// Points along each axis; a collapsed range (lo == hi) contributes one.
    int a_points() const;
    int b_points() const;
    double a_at(int i) const;
    double b_at(int j) const;
};

struct RegionRow {
    double A = 0.0;
    double B = 0.0;
    bool thm2 = false;
    bool cor1 = false;
    bool cor2_1 = false;
    bool cor2_2 = false;
    bool cor2_3 = false;
    double m_analytic = 0.0;
    double m_grid = 0.0;
};

RegionRow evaluate_row(double A, double B, int n_tau);

/// Cells are distributed over threads (threads <= 0: OpenMP default); rows come
/// back in the same order for any thread count.
std::vector<RegionRow> scan_region(const RegionSpec& spec, int threads = 0);

inline constexpr const char* kRegionHeader = "A,B,thm2,cor1,cor2_1,cor2_2,cor2_3,m_analytic,m_grid";

/// Header line plus one line per row; reals with 9 significant digits.
std::string to_csv(const std::vector<RegionRow>& rows);

/// Points with |m| below 1e-3 * max(1, A + B) are too close to the boundary
/// for the grid's O(1/n_tau) bias and are left out of sign comparisons.
double band_width(double A, double B);

struct ThresholdPoint {
    double A = 0.0;
    double B = 0.0;
    double m_grid = 0.0;
    double m_one_plus_a2 = 0.0;
    double m_one_plus_4a2 = 0.0;
};

struct ThresholdTally {
    int compared = 0;
    int mismatches = 0;
};

struct ThresholdReconciliation {
    std::vector<ThresholdPoint> points;
    ThresholdTally one_plus_a2;
    ThresholdTally one_plus_4a2;
    /// The single candidate with zero mismatches, if exactly one has none.
    std::optional<BranchThreshold> certified;
};

ThresholdPoint evaluate_thresholds(double A, double B, int n_tau, int threads = 1);

ThresholdReconciliation reconcile_thresholds(const RegionSpec& spec, int threads = 0);

/// FDE_THREADS if set to a positive integer, otherwise 0 (OpenMP default).
int configured_threads();

namespace serial {

std::vector<RegionRow> scan_region(const RegionSpec& spec);

}  // namespace serial

}  // namespace fde
