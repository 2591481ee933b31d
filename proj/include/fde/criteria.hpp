#pragma once

// Closed-form solvability criteria for the Cauchy problem
//
//     x'(t) = (T+ x)(t) - (T- x)(t) + f(t),   x(a) = c,
//
// posed for every pair of positive operators T+, T- : C -> L_inf with
// prescribed norms. All criteria work on the dimensionless pair
// A = (b - a) |T+|, B = (b - a) |T-|.

#include <string>

namespace fde {

/// Margins at or below this value are treated as "on the boundary" and
/// therefore not solvable (all criteria are strict inequalities).
inline constexpr double kBoundaryTol = 1e-12;

/// Operator norms on an interval [a, b].
class NormData {
public:
    /// Throws DomainError unless t_plus >= 0, t_minus >= 0 and b > a.
    NormData(double t_plus, double t_minus, double a, double b);

    double t_plus() const noexcept { return t_plus_; }
    double t_minus() const noexcept { return t_minus_; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

    double A() const noexcept { return (b_ - a_) * t_plus_; }
    double B() const noexcept { return (b_ - a_) * t_minus_; }

private:
    double t_plus_;
    double t_minus_;
    double a_;
    double b_;
};

struct Verdict {
    bool solvable = false;
    /// The quantity whose strict positivity is the criterion.
    double margin = 0.0;
    std::string criterion;
};

/// Integral-norm criterion for operators C -> L with norms |T+|_L, |T-|_L:
/// |T+| < 1 and |T-| < 1 + 2 sqrt(1 - |T+|).
Verdict integral_norm_verdict(double t_plus_l1, double t_minus_l1);

/// The same inequality applied to (A, B). Sufficient only: the exact region is larger.
Verdict integral_bound_verdict(double A, double B);

/// q(t) = (B^2 - A^2) t^2 + (A^2 - B^2 + B) t + 1 - A, t in [0, 1].
double positivity_quadratic(double A, double B, double t);

struct QuadraticMinimum {
    double t_star;
    double q_star;
};

/// Exact minimum of positivity_quadratic over [0, 1] (endpoints plus vertex).
QuadraticMinimum minimize_positivity_quadratic(double A, double B);

/// Necessary and sufficient criterion: q(t) > 0 on [0, 1]. Every other
/// criterion in this header is validated against this one.
Verdict exact_verdict(double A, double B);

/// Where the branch of the determinant minimum switches from 1 - A to the
/// vertex formula. Two candidate formulas circulate; the grid oracle decides.
enum class BranchThreshold {
    one_plus_a2,   // (1 + sqrt(1 + A^2)) / 2
    one_plus_4a2,  // (1 + sqrt(1 + 4 A^2)) / 2
};

double branch_threshold(BranchThreshold which, double A);
const char* to_string(BranchThreshold which);

/// (2B - A)^2 - A^2 - (B^2 - A^2 - B + 2A)^2
double vertex_numerator(double A, double B);

/// A < 1 and, above the (1 + sqrt(1 + A^2)) / 2 threshold, vertex_numerator > 0.
/// The threshold is taken as stated; disagreement with the exact criterion
/// is reported by the reconciliation scan, not corrected here.
Verdict determinant_form_verdict(double A, double B);

/// Supremum of admissible B at fixed A < 1:
///   min over t in (0,1) of (t + sqrt((2t(1-t)A - 1)^2 + (1-t)(3t-1))) / (2t(1-t)).
double max_admissible_b(double A);

/// Supremum of admissible A at fixed B < 3. Equals 1 for B <= (1 + sqrt 5) / 2;
/// otherwise the minimum over t in (0,1) of
///   (1 - sqrt((2t(1-t)B - t)^2 - (1-t)(3t-1))) / (2t(1-t)),
/// with t of negative radicand excluded.
double max_admissible_a(double B);

Verdict b_bound_verdict(double A, double B);
Verdict a_bound_verdict(double A, double B);

}  // namespace fde
