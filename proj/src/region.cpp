#include "fde/region.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "fde/determinant.hpp"
#include "fde/errors.hpp"

namespace fde {

void RegionSpec::validate() const {
    if (!(a_lo >= 0.0 && b_lo >= 0.0)) throw DomainError("region ranges must be nonnegative");
    if (!(a_hi >= a_lo && b_hi >= b_lo)) throw DomainError("region ranges must satisfy lo <= hi");
    if (nA < 2 || nB < 2) throw DomainError("region counts nA, nB must be at least 2");
    if (n_tau < 2) throw DomainError("n_tau must be at least 2");
}

int RegionSpec::a_points() const { return a_lo == a_hi ? 1 : nA; }
int RegionSpec::b_points() const { return b_lo == b_hi ? 1 : nB; }

double RegionSpec::a_at(int i) const {
    const int n = a_points();
    return i == n - 1 ? a_hi : a_lo + i * (a_hi - a_lo) / (n - 1);
}

double RegionSpec::b_at(int j) const {
    const int n = b_points();
    return j == n - 1 ? b_hi : b_lo + j * (b_hi - b_lo) / (n - 1);
}

RegionRow evaluate_row(double A, double B, int n_tau) {
    RegionRow row;
    row.A = A;
    row.B = B;
    row.thm2 = exact_verdict(A, B).solvable;
    row.cor1 = integral_bound_verdict(A, B).solvable;
    row.cor2_1 = determinant_form_verdict(A, B).solvable;
    row.cor2_2 = b_bound_verdict(A, B).solvable;
    row.cor2_3 = a_bound_verdict(A, B).solvable;
    row.m_analytic = min_determinant_analytic(A, B).m_value;
    row.m_grid = serial::min_determinant_grid(A, B, n_tau).m_value;
    return row;
}

std::vector<RegionRow> scan_region(const RegionSpec& spec, int threads) {
    spec.validate();
    const int cells = spec.a_points() * spec.b_points();
    std::vector<RegionRow> rows(cells);
    if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int k = 0; k < cells; ++k) {
        rows[k] = evaluate_row(spec.a_at(k / spec.b_points()), spec.b_at(k % spec.b_points()), spec.n_tau);
    }
    return rows;
}

namespace serial {

std::vector<RegionRow> scan_region(const RegionSpec& spec) {
    spec.validate();
    std::vector<RegionRow> rows;
    rows.reserve(static_cast<std::size_t>(spec.a_points()) * spec.b_points());
    for (int i = 0; i < spec.a_points(); ++i) {
        for (int j = 0; j < spec.b_points(); ++j) rows.push_back(evaluate_row(spec.a_at(i), spec.b_at(j), spec.n_tau));
    }
    return rows;
}

}  // namespace serial

std::string to_csv(const std::vector<RegionRow>& rows) {
    std::string out = kRegionHeader;
    out += '\n';
    char buf[256];
    auto real = [](double v) { return v == 0.0 ? 0.0 : v; };
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.9g,%.9g,%d,%d,%d,%d,%d,%.9g,%.9g\n", real(r.A), real(r.B), r.thm2, r.cor1,
                      r.cor2_1, r.cor2_2, r.cor2_3, real(r.m_analytic), real(r.m_grid));
        out += buf;
    }
    return out;
}

double band_width(double A, double B) { return 1e-3 * std::max(1.0, A + B); }

ThresholdPoint evaluate_thresholds(double A, double B, int n_tau, int threads) {
    return {A, B, min_determinant_grid(A, B, n_tau, threads).m_value,
            min_determinant_analytic(A, B, BranchThreshold::one_plus_a2).m_value,
            min_determinant_analytic(A, B, BranchThreshold::one_plus_4a2).m_value};
}

ThresholdReconciliation reconcile_thresholds(const RegionSpec& spec, int threads) {
    spec.validate();
    const int cells = spec.a_points() * spec.b_points();
    ThresholdReconciliation out;
    out.points.resize(cells);
    if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int k = 0; k < cells; ++k) {
        out.points[k] =
            evaluate_thresholds(spec.a_at(k / spec.b_points()), spec.b_at(k % spec.b_points()), spec.n_tau, 1);
    }

    auto tally = [](ThresholdTally& t, double m_candidate, double m_grid, double band) {
        if (std::abs(m_grid) < band || std::abs(m_candidate) < band) return;
        ++t.compared;
        if ((m_candidate > 0.0) != (m_grid > 0.0)) ++t.mismatches;
    };
    for (const auto& p : out.points) {
        const double band = band_width(p.A, p.B);
        tally(out.one_plus_a2, p.m_one_plus_a2, p.m_grid, band);
        tally(out.one_plus_4a2, p.m_one_plus_4a2, p.m_grid, band);
    }
    const bool narrow_ok = out.one_plus_a2.mismatches == 0 && out.one_plus_a2.compared > 0;
    const bool wide_ok = out.one_plus_4a2.mismatches == 0 && out.one_plus_4a2.compared > 0;
    if (narrow_ok != wide_ok) {
        out.certified = narrow_ok ? BranchThreshold::one_plus_a2 : BranchThreshold::one_plus_4a2;
    }
    return out;
}

int configured_threads() {
    const char* env = std::getenv("FDE_THREADS");
    if (!env) return 0;
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n <= 0) return 0;
    return static_cast<int>(n);
}

}  // namespace fde
