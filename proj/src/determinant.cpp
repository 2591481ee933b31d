#include "fde/determinant.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fde/errors.hpp"
#include "grid_kernel.hpp"

namespace fde {

namespace detail {

CumulativeBounds constant_bounds(double A, double B, int n_tau) {
    CumulativeBounds g;
    g.tau.resize(n_tau);
    g.upper.resize(n_tau);
    g.lower.resize(n_tau);
    for (int k = 0; k < n_tau; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(n_tau - 1);
        g.tau[k] = t;
        g.upper[k] = A * t;
        g.lower[k] = B * t;
    }
    return g;
}

CumulativeBounds general_bounds(const StepFunction& p_plus, const StepFunction& p_minus, int n_tau) {
    std::vector<double> uniform(n_tau);
    for (int k = 0; k < n_tau; ++k) uniform[k] = static_cast<double>(k) / static_cast<double>(n_tau - 1);
    CumulativeBounds g;
    g.tau = merge_breaks({uniform, p_plus.breaks(), p_minus.breaks()});
    g.upper.reserve(g.tau.size());
    g.lower.reserve(g.tau.size());
    for (double t : g.tau) {
        g.upper.push_back(p_plus.integral(t));
        g.lower.push_back(p_minus.integral(t));
    }
    return g;
}

MinimumReport to_report(const CumulativeBounds& g, const GridHit& hit) {
    MinimumReport r;
    r.method = MinimumMethod::grid;
    r.m_value = hit.value;
    r.argmin = {corner_alpha(g, hit.i, hit.corner), corner_beta(g, hit.i, hit.j, hit.corner), g.tau[hit.i],
                g.tau[hit.j]};
    return r;
}

}  // namespace detail

namespace {

void require_grid_args(double A, double B, int n_tau) {
    if (!(A >= 0.0) || !(B >= 0.0)) throw DomainError("grid minimum: norms must be nonnegative");
    if (n_tau < 2) throw DomainError("grid minimum: n_tau must be at least 2");
}

void require_general_args(const StepFunction& p_plus, const StepFunction& p_minus, int n_tau) {
    if (p_plus.min_value() < 0.0 || p_minus.min_value() < 0.0) {
        throw DomainError("grid minimum: bound functions must be nonnegative");
    }
    if (n_tau < 2) throw DomainError("grid minimum: n_tau must be at least 2");
}

}  // namespace

bool is_admissible(const DeterminantConfig& c, double A, double B, double tol) {
    const double slack = tol * std::max(1.0, A + B);
    if (!(c.tau1 >= 0.0 && c.tau1 <= c.tau2 && c.tau2 <= 1.0)) return false;
    const double w1 = c.tau1;
    const double w2 = c.tau2 - c.tau1;
    return c.alpha >= -w1 * B - slack && c.alpha <= w1 * A + slack && c.beta >= -w2 * B - slack &&
           c.beta <= w2 * A + slack;
}

double determinant(const DeterminantConfig& c, double A, double B) {
    if (!is_admissible(c, A, B)) {
        throw DomainError("determinant: configuration (alpha=" + std::to_string(c.alpha) +
                          ", beta=" + std::to_string(c.beta) + ", tau1=" + std::to_string(c.tau1) +
                          ", tau2=" + std::to_string(c.tau2) + ") is not admissible");
    }
    return detail::determinant_from_aggregates(c.alpha, c.beta, A * c.tau1 - B * c.tau1, A * c.tau2 - B * c.tau2);
}

double determinant_simplified(const DeterminantConfig& c, double A, double B) {
    const double p1 = A * c.tau1 - B * c.tau1;
    const double p2 = A * c.tau2 - B * c.tau2;
    return (1.0 - c.alpha) * (1.0 - p2) + (c.alpha + c.beta) * (1.0 - p1);
}

MinimumReport min_determinant_analytic(double A, double B, BranchThreshold threshold) {
    if (!(A >= 0.0) || !(B >= 0.0)) throw DomainError("analytic minimum: norms must be nonnegative");
    MinimumReport r;
    r.method = MinimumMethod::analytic;
    // Corner used whenever the minimum is 1 - A: all of p1 at -B, tau1 = 0, tau2 = 1.
    r.m_value = 1.0 - A;
    r.argmin = {0.0, -B, 0.0, 1.0};
    if (B <= A || B <= branch_threshold(threshold, A)) return r;

    const double lead = B * B - A * A;
    const double tau1 = std::max(0.0, 0.5 - B / (2.0 * lead));
    r.m_value = vertex_numerator(A, B) / (4.0 * lead);
    r.argmin = {tau1 * A, -(1.0 - tau1) * B, tau1, 1.0};
    return r;
}

MinimumReport min_determinant_grid(double A, double B, int n_tau, int threads) {
    require_grid_args(A, B, n_tau);
    const auto g = detail::constant_bounds(A, B, n_tau);
    return detail::to_report(g, detail::scan_parallel(g, threads));
}

MinimumReport min_determinant_grid_general(const StepFunction& p_plus, const StepFunction& p_minus, int n_tau,
                                           int threads) {
    require_general_args(p_plus, p_minus, n_tau);
    const auto g = detail::general_bounds(p_plus, p_minus, n_tau);
    return detail::to_report(g, detail::scan_parallel(g, threads));
}

namespace serial {

MinimumReport min_determinant_grid(double A, double B, int n_tau) {
    require_grid_args(A, B, n_tau);
    const auto g = detail::constant_bounds(A, B, n_tau);
    return detail::to_report(g, detail::scan_serial(g));
}

MinimumReport min_determinant_grid_general(const StepFunction& p_plus, const StepFunction& p_minus, int n_tau) {
    require_general_args(p_plus, p_minus, n_tau);
    const auto g = detail::general_bounds(p_plus, p_minus, n_tau);
    return detail::to_report(g, detail::scan_serial(g));
}

}  // namespace serial

}  // namespace fde
