#pragma once

// Two-point functional differential equations on [0, 1]:
//
//     x'(t) = p1(t) x(tau1) + p2(t) x(tau2) + f(t),   x(0) = c.
//
// With step-function coefficients every solution is piecewise linear and
// is determined by the pair (x(tau1), x(tau2)), which solves a 2x2 system.

#include <array>
#include <optional>
#include <vector>

#include "fde/determinant.hpp"
#include "fde/step_function.hpp"

namespace fde {

/// |det| at or below this is singular.
inline constexpr double kSingularTol = 1e-12;

struct LinearPart {
    double tau1;
    double tau2;
    StepFunction p1;
    StepFunction p2;
};

struct TwoPointProblem {
    double tau1;
    double tau2;
    StepFunction p1;
    StepFunction p2;
    StepFunction f;
    double c;

    LinearPart linear() const { return {tau1, tau2, p1, p2}; }
};

TwoPointProblem with_forcing(const LinearPart& linear, StepFunction f, double c);

/// Throws DomainError unless 0 <= tau1 <= tau2 <= 1.
void validate(const LinearPart& linear);

/// [[1 - I1(tau1), -I2(tau1)], [-I1(tau2), 1 - I2(tau2)]], Ik(t) = int_0^t pk.
struct SystemMatrix {
    double m11, m12, m21, m22;
    double det() const { return m11 * m22 - m12 * m21; }
};

SystemMatrix system_matrix(const LinearPart& linear);

/// x(t) = c + C1 I1(t) + C2 I2(t) + F(t) on the merged breaks of p1, p2, f.
PiecewiseLinear assemble_solution(const TwoPointProblem& prob, double c1, double c2);

/// Throws SingularProblem if |det| <= kSingularTol.
PiecewiseLinear solve_two_point(const TwoPointProblem& prob);

/// Null vector (C1, C2) of the homogeneous system when it is singular,
/// normalized to max-norm 1 with the last nonzero component positive.
/// Requires f == 0 and c == 0.
std::optional<std::array<double, 2>> homogeneous_nullspace(const TwoPointProblem& prob);

/// max |x' - p1 x(tau1) - p2 x(tau2) - f| over the midpoint of every linear
/// piece of x and n_samples uniform points that avoid breaks.
double residual(const TwoPointProblem& prob, const PiecewiseLinear& x, int n_samples);

struct Counterexample {
    TwoPointProblem problem;
    DeterminantConfig config;
    double delta;
    std::array<double, 2> null_vector;
    PiecewiseLinear null_solution;
};

/// Builds a problem with norms (A, B) whose homogeneous Cauchy problem has a
/// nontrivial solution, starting from the extremal configuration of the
/// analytic minimum. If M < 0 the configuration is pulled back along a path
/// to the zero configuration by bisection until |det| <= 1e-13.
/// Throws NotOnBoundary when M > kBoundaryTol.
Counterexample construct_counterexample(double A, double B);

/// A positive operator assembled from atoms: coefficients on x(tau1), x(tau2) and x(0).
struct OperatorAtoms {
    double tau1;
    double tau2;
    StepFunction at_tau1;
    StepFunction at_tau2;
    StepFunction at_start;

    /// (T 1)(t)
    StepFunction unit_response() const;
    /// (T x)(t)
    StepFunction apply(const PiecewiseLinear& x) const;
};

struct FullOperatorPair {
    OperatorAtoms plus;
    OperatorAtoms minus;
};

/// Splits p1 into positive and negative parts and assembles positive operators
/// T+ and T- with T+ - T- = p1 x(tau1) + p2 x(tau2), topping up with x(0)
/// terms so that T+ 1 = A and T- 1 = B on the whole interval.
/// Requires -B <= p1 <= A and p1 + p2 = A - B.
FullOperatorPair saturate_operators(const TwoPointProblem& prob, double A, double B);

/// Step data on a dimensional interval [a, b].
struct IntervalSteps {
    std::vector<double> breaks;  // from a to b
    std::vector<double> values;
};

/// Maps a problem posed on [a, b] to [0, 1]: s = (t - a) / (b - a), coefficients
/// and forcing scaled by (b - a). Solutions correspond by x~(s) = x(a + (b - a) s).
TwoPointProblem to_unit_interval(double a, double b, double tau1, double tau2, const IntervalSteps& p1,
                                 const IntervalSteps& p2, const IntervalSteps& f, double c);

}  // namespace fde
