#pragma once

// The 2x2 determinant governing the reduced two-point problem
//
//     x'(t) = p1(t) x(tau1) + p2(t) x(tau2),   x(0) = 0,
//
// on the normalized interval [0, 1] with p1 + p2 = A - B and -B <= p1 <= A.
// The determinant depends on p1 only through alpha = int_0^tau1 p1 and
// beta = int_tau1^tau2 p1. Its minimum M over all admissible parameters is
// positive exactly when every such problem has only the trivial solution.
//
// Two independent routes to M are provided: the closed form and a brute-force
// grid over (tau1, tau2) with corner enumeration of the (alpha, beta) box.
// The grid minimizer has an OpenMP kernel and a plain serial reference in
// fde::serial; both return bit-identical reports.

#include "fde/criteria.hpp"
#include "fde/step_function.hpp"

namespace fde {

struct DeterminantConfig {
    double alpha = 0.0;
    double beta = 0.0;
    double tau1 = 0.0;
    double tau2 = 0.0;
};

enum class MinimumMethod { analytic, grid };

struct MinimumReport {
    double m_value = 0.0;
    DeterminantConfig argmin;
    MinimumMethod method = MinimumMethod::analytic;
};

namespace detail {

/// det [[1 - I1(tau1), -I2(tau1)], [-I1(tau2), 1 - I2(tau2)]] with
/// I1(tau1) = alpha, I1(tau2) = alpha + beta, I2 = P - I1.
/// Shared by every evaluation path so grid reports reproduce exactly.
inline double determinant_from_aggregates(double alpha, double beta, double p_tau1, double p_tau2) {
    const double i1_tau1 = alpha;
    const double i1_tau2 = alpha + beta;
    const double i2_tau1 = p_tau1 - i1_tau1;
    const double i2_tau2 = p_tau2 - i1_tau2;
    return (1.0 - i1_tau1) * (1.0 - i2_tau2) - i2_tau1 * i1_tau2;
}

}  // namespace detail

/// Admissible for constant bounds (A, B): 0 <= tau1 <= tau2 <= 1 and
/// -tau1 B <= alpha <= tau1 A, -(tau2 - tau1) B <= beta <= (tau2 - tau1) A,
/// each up to a relative slack of tol.
bool is_admissible(const DeterminantConfig& config, double A, double B, double tol = 1e-12);

/// Determinant in 2x2 form with P(t) = A t - B t. Throws DomainError if inadmissible.
double determinant(const DeterminantConfig& config, double A, double B);

/// (1 - alpha)(1 - P(tau2)) + (alpha + beta)(1 - P(tau1)); algebraically equal to determinant().
double determinant_simplified(const DeterminantConfig& config, double A, double B);

/// Closed-form minimum. For B <= A: M = 1 - A. For B > A: M = 1 - A up to the
/// branch threshold, above it the vertex value
///   [(2B - A)^2 - A^2 - (B^2 - A^2 - B + 2A)^2] / (4 (B^2 - A^2)),
/// attained at tau2 = 1, tau1 = max(0, 1/2 - B / (2 (B^2 - A^2))).
MinimumReport min_determinant_analytic(double A, double B,
                                       BranchThreshold threshold = BranchThreshold::one_plus_4a2);

/// Grid minimum over tau1 <= tau2 on n_tau uniform points of [0, 1], four
/// (alpha, beta) corners per cell. Over-estimates M by O(1/n_tau).
/// threads <= 0 uses the OpenMP default. Deterministic for any thread count.
MinimumReport min_determinant_grid(double A, double B, int n_tau, int threads = 0);

/// Grid minimum with pointwise bounds -p_minus <= p1 <= p_plus. Breaks of
/// p_plus and p_minus are merged into the tau grid so box corners are exact.
MinimumReport min_determinant_grid_general(const StepFunction& p_plus, const StepFunction& p_minus,
                                           int n_tau, int threads = 0);

namespace serial {

MinimumReport min_determinant_grid(double A, double B, int n_tau);
MinimumReport min_determinant_grid_general(const StepFunction& p_plus, const StepFunction& p_minus,
                                           int n_tau);

}  // namespace serial

}  // namespace fde
