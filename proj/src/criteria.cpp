#include "fde/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fde/detail/scalar_minimize.hpp"
#include "fde/errors.hpp"

namespace fde {

namespace {

void require_nonnegative(double A, double B, const char* what) {
    if (!(A >= 0.0) || !(B >= 0.0)) {
        throw DomainError(std::string(what) + ": norms must be nonnegative");
    }
}

Verdict make_verdict(double margin, const char* label) {
    return Verdict{margin > kBoundaryTol, margin, label};
}

const double kGoldenRatio = (1.0 + std::sqrt(5.0)) / 2.0;

}  // namespace

NormData::NormData(double t_plus, double t_minus, double a, double b)
    : t_plus_(t_plus), t_minus_(t_minus), a_(a), b_(b) {
    if (!(t_plus >= 0.0) || !(t_minus >= 0.0)) throw DomainError("operator norms must be nonnegative");
    if (!(b > a)) throw DomainError("interval must satisfy b > a");
}

Verdict integral_norm_verdict(double t_plus_l1, double t_minus_l1) {
    require_nonnegative(t_plus_l1, t_minus_l1, "integral_norm_verdict");
    const double margin = std::min(1.0 - t_plus_l1,
                                   1.0 + 2.0 * std::sqrt(std::max(1.0 - t_plus_l1, 0.0)) - t_minus_l1);
    return make_verdict(margin, "thm1");
}

Verdict integral_bound_verdict(double A, double B) {
    require_nonnegative(A, B, "integral_bound_verdict");
    const double margin = std::min(1.0 - A, 1.0 + 2.0 * std::sqrt(std::max(1.0 - A, 0.0)) - B);
    return make_verdict(margin, "cor1");
}

double positivity_quadratic(double A, double B, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("positivity_quadratic: t must lie in [0, 1]");
    const double lead = B * B - A * A;
    return lead * t * t + (A * A - B * B + B) * t + (1.0 - A);
}

QuadraticMinimum minimize_positivity_quadratic(double A, double B) {
    require_nonnegative(A, B, "minimize_positivity_quadratic");
    QuadraticMinimum best{0.0, positivity_quadratic(A, B, 0.0)};
    const double q1 = positivity_quadratic(A, B, 1.0);
    if (q1 < best.q_star) best = {1.0, q1};

    // B > A is the only case with an interior minimum; B == A is linear.
    if (B > A) {
        const double lead = B * B - A * A;
        const double t_v = (lead - B) / (2.0 * lead);
        if (t_v > 0.0 && t_v < 1.0) {
            const double qv = positivity_quadratic(A, B, t_v);
            if (qv < best.q_star) best = {t_v, qv};
        }
    }
    return best;
}

Verdict exact_verdict(double A, double B) {
    return make_verdict(minimize_positivity_quadratic(A, B).q_star, "thm2");
}

double branch_threshold(BranchThreshold which, double A) {
    const double k = which == BranchThreshold::one_plus_a2 ? 1.0 : 4.0;
    return (1.0 + std::sqrt(1.0 + k * A * A)) / 2.0;
}

const char* to_string(BranchThreshold which) {
    return which == BranchThreshold::one_plus_a2 ? "(1+sqrt(1+A^2))/2" : "(1+sqrt(1+4A^2))/2";
}

double vertex_numerator(double A, double B) {
    const double s = B * B - A * A - B + 2.0 * A;
    return (2.0 * B - A) * (2.0 * B - A) - A * A - s * s;
}

Verdict determinant_form_verdict(double A, double B) {
    require_nonnegative(A, B, "determinant_form_verdict");
    double margin = 1.0 - A;
    if (A < 1.0 && B > branch_threshold(BranchThreshold::one_plus_a2, A)) {
        margin = std::min(margin, vertex_numerator(A, B));
    }
    return make_verdict(margin, "cor2_1");
}

double max_admissible_b(double A) {
    if (!(A >= 0.0) || !(A < 1.0)) throw DomainError("max_admissible_b: requires 0 <= A < 1");
    auto bound = [A](double t) {
        const double s = t * (1.0 - t);
        const double u = 2.0 * s * A - 1.0;
        return (t + std::sqrt(u * u + (1.0 - t) * (3.0 * t - 1.0))) / (2.0 * s);
    };
    return detail::scan_then_refine(bound).value;
}

double max_admissible_a(double B) {
    if (!(B >= 0.0) || !(B < 3.0)) throw DomainError("max_admissible_a: requires 0 <= B < 3");
    if (B <= kGoldenRatio) return 1.0;
    auto bound = [B](double t) {
        const double s = t * (1.0 - t);
        const double u = 2.0 * s * B - t;
        const double radicand = u * u - (1.0 - t) * (3.0 * t - 1.0);
        if (radicand < 0.0) return std::numeric_limits<double>::infinity();
        return (1.0 - std::sqrt(radicand)) / (2.0 * s);
    };
    return detail::scan_then_refine(bound).value;
}

Verdict b_bound_verdict(double A, double B) {
    require_nonnegative(A, B, "b_bound_verdict");
    if (A >= 1.0) return make_verdict(1.0 - A, "cor2_2");
    return make_verdict(std::min(1.0 - A, max_admissible_b(A) - B), "cor2_2");
}

Verdict a_bound_verdict(double A, double B) {
    require_nonnegative(A, B, "a_bound_verdict");
    if (B >= 3.0) return make_verdict(3.0 - B, "cor2_3");
    return make_verdict(max_admissible_a(B) - A, "cor2_3");
}

}  // namespace fde
