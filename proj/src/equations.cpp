#include "fde/equations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fde/errors.hpp"

namespace fde {

TwoPointProblem with_forcing(const LinearPart& linear, StepFunction f, double c) {
    return TwoPointProblem{linear.tau1, linear.tau2, linear.p1, linear.p2, std::move(f), c};
}

void validate(const LinearPart& linear) {
    if (!(0.0 <= linear.tau1 && linear.tau1 <= linear.tau2 && linear.tau2 <= 1.0)) {
        throw DomainError("two-point problem requires 0 <= tau1 <= tau2 <= 1");
    }
}

SystemMatrix system_matrix(const LinearPart& linear) {
    validate(linear);
    return {1.0 - linear.p1.integral(linear.tau1), -linear.p2.integral(linear.tau1),
            -linear.p1.integral(linear.tau2), 1.0 - linear.p2.integral(linear.tau2)};
}

PiecewiseLinear assemble_solution(const TwoPointProblem& prob, double c1, double c2) {
    auto breaks = merge_breaks({prob.p1.breaks(), prob.p2.breaks(), prob.f.breaks()});
    std::vector<double> values;
    values.reserve(breaks.size());
    for (double t : breaks) {
        values.push_back(prob.c + c1 * prob.p1.integral(t) + c2 * prob.p2.integral(t) + prob.f.integral(t));
    }
    return PiecewiseLinear(std::move(breaks), std::move(values));
}

PiecewiseLinear solve_two_point(const TwoPointProblem& prob) {
    const SystemMatrix m = system_matrix(prob.linear());
    const double det = m.det();
    if (std::abs(det) <= kSingularTol) throw SingularProblem(det);
    const double r1 = prob.c + prob.f.integral(prob.tau1);
    const double r2 = prob.c + prob.f.integral(prob.tau2);
    const double c1 = (r1 * m.m22 - m.m12 * r2) / det;
    const double c2 = (m.m11 * r2 - m.m21 * r1) / det;
    return assemble_solution(prob, c1, c2);
}

std::optional<std::array<double, 2>> homogeneous_nullspace(const TwoPointProblem& prob) {
    if (!prob.f.is_zero() || prob.c != 0.0) {
        throw DomainError("homogeneous_nullspace: requires f == 0 and c == 0");
    }
    const SystemMatrix m = system_matrix(prob.linear());
    if (std::abs(m.det()) > kSingularTol) return std::nullopt;

    // Orthogonal to the dominant row; the zero matrix leaves every vector null.
    const double row1 = std::max(std::abs(m.m11), std::abs(m.m12));
    const double row2 = std::max(std::abs(m.m21), std::abs(m.m22));
    std::array<double, 2> v{0.0, 1.0};
    if (row1 >= row2 && row1 > 0.0) {
        v = {-m.m12, m.m11};
    } else if (row2 > 0.0) {
        v = {-m.m22, m.m21};
    }
    const double scale = std::max(std::abs(v[0]), std::abs(v[1]));
    v[0] /= scale;
    v[1] /= scale;
    const double sign_ref = v[1] != 0.0 ? v[1] : v[0];
    if (sign_ref < 0.0) {
        v[0] = -v[0];
        v[1] = -v[1];
    }
    // Avoid -0.0 in fixtures.
    for (double& e : v) e += 0.0;
    return v;
}

double residual(const TwoPointProblem& prob, const PiecewiseLinear& x, int n_samples) {
    const double x_tau1 = x(prob.tau1);
    const double x_tau2 = x(prob.tau2);
    const auto& breaks = x.breaks();
    double worst = 0.0;
    auto check = [&](double t, std::size_t piece) {
        const double rhs = prob.p1(t) * x_tau1 + prob.p2(t) * x_tau2 + prob.f(t);
        worst = std::max(worst, std::abs(x.slope(piece) - rhs));
    };
    for (std::size_t k = 0; k < x.pieces(); ++k) check(0.5 * (breaks[k] + breaks[k + 1]), k);
    for (int s = 0; s < n_samples; ++s) {
        const double t = (s + 0.5) / n_samples;
        const auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
        if (it == breaks.begin() || it == breaks.end()) continue;
        const std::size_t k = static_cast<std::size_t>(it - breaks.begin()) - 1;
        if (breaks[k] == t) continue;
        check(t, k);
    }
    return worst;
}

namespace {

// Extremal shape of p1: alpha_density on [0, tau1), beta_density on [tau1, tau2), 0 after.
struct ExtremalShape {
    double tau1;
    double tau2;
    double alpha_density;
    double beta_density;

    DeterminantConfig config() const {
        return {alpha_density * tau1, beta_density * (tau2 - tau1), tau1, tau2};
    }
};

TwoPointProblem realize(const ExtremalShape& s, double A, double B) {
    std::vector<double> breaks{0.0};
    std::vector<double> p1;
    auto push = [&](double end, double value) {
        if (end > breaks.back()) {
            breaks.push_back(end);
            p1.push_back(value);
        }
    };
    push(s.tau1, s.alpha_density);
    push(s.tau2, s.beta_density);
    push(1.0, 0.0);
    std::vector<double> p2;
    p2.reserve(p1.size());
    for (double v : p1) p2.push_back((A - B) - v);
    return TwoPointProblem{s.tau1,           s.tau2, StepFunction(breaks, p1), StepFunction(breaks, p2),
                           StepFunction::zero(), 0.0};
}

}  // namespace

Counterexample construct_counterexample(double A, double B) {
    const MinimumReport report = min_determinant_analytic(A, B);
    if (report.m_value > kBoundaryTol) throw NotOnBoundary(report.m_value);

    const DeterminantConfig& a = report.argmin;
    const double alpha_density = a.tau1 > 0.0 ? A : -B;
    const ExtremalShape extremal{a.tau1, a.tau2, alpha_density, -B};

    auto delta_of = [&](const ExtremalShape& s) { return determinant(s.config(), A, B); };

    ExtremalShape chosen = extremal;
    if (std::abs(delta_of(extremal)) > 1e-13) {
        // Path 1 scales beta toward 0 with the taus fixed. Its start is not the
        // zero configuration, so when its start is not positive fall back to
        // shrinking the taus as well, which starts from det = 1.
        auto along_beta = [&](double lambda) {
            ExtremalShape s = extremal;
            s.beta_density = lambda * extremal.beta_density;
            return s;
        };
        auto along_all = [&](double lambda) {
            ExtremalShape s = extremal;
            s.tau1 = lambda * extremal.tau1;
            s.tau2 = lambda * extremal.tau2;
            return s;
        };
        const bool beta_path = delta_of(along_beta(0.0)) > 0.0;
        auto path = [&](double lambda) { return beta_path ? along_beta(lambda) : along_all(lambda); };

        double lo = 0.0;
        double hi = 1.0;
        for (int step = 0; step < 60; ++step) {
            const double mid = 0.5 * (lo + hi);
            if (delta_of(path(mid)) > 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        chosen = std::abs(delta_of(path(lo))) < std::abs(delta_of(path(hi))) ? path(lo) : path(hi);
    }

    TwoPointProblem problem = realize(chosen, A, B);
    const double det = system_matrix(problem.linear()).det();
    if (std::abs(det) > 1e-13) throw NotOnBoundary(det);
    const auto null = homogeneous_nullspace(problem);
    PiecewiseLinear x = assemble_solution(problem, (*null)[0], (*null)[1]);
    return Counterexample{std::move(problem), chosen.config(), det, *null, std::move(x)};
}

StepFunction OperatorAtoms::unit_response() const {
    std::vector<double> values(at_tau1.pieces());
    for (std::size_t k = 0; k < values.size(); ++k) {
        values[k] = at_tau1.values()[k] + at_tau2.values()[k] + at_start.values()[k];
    }
    return StepFunction(at_tau1.breaks(), std::move(values));
}

StepFunction OperatorAtoms::apply(const PiecewiseLinear& x) const {
    const double x1 = x(tau1);
    const double x2 = x(tau2);
    const double x0 = x(0.0);
    std::vector<double> values(at_tau1.pieces());
    for (std::size_t k = 0; k < values.size(); ++k) {
        values[k] = at_tau1.values()[k] * x1 + at_tau2.values()[k] * x2 + at_start.values()[k] * x0;
    }
    return StepFunction(at_tau1.breaks(), std::move(values));
}

FullOperatorPair saturate_operators(const TwoPointProblem& prob, double A, double B) {
    const double tol = 1e-12 * std::max(1.0, A + B);
    const auto breaks = merge_breaks({prob.p1.breaks(), prob.p2.breaks()});
    const std::size_t n = breaks.size() - 1;
    std::vector<double> plus1(n), plus2(n), plus0(n), minus1(n), minus2(n), minus0(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double mid = 0.5 * (breaks[k] + breaks[k + 1]);
        const double p1 = prob.p1(mid);
        const double p2 = prob.p2(mid);
        if (p1 < -B - tol || p1 > A + tol) {
            throw DomainError("saturate_operators: p1 = " + std::to_string(p1) + " violates -B <= p1 <= A");
        }
        if (std::abs(p1 + p2 - (A - B)) > tol) {
            throw DomainError("saturate_operators: p1 + p2 must equal A - B");
        }
        const double pos = std::max(p1, 0.0);
        const double neg = std::max(-p1, 0.0);
        plus1[k] = pos;
        plus2[k] = std::max(A - pos, 0.0);
        minus1[k] = neg;
        minus2[k] = std::max(B - neg, 0.0);
        // x(0) top-up so that T 1 hits the prescribed constant.
        plus0[k] = std::max(A - (plus1[k] + plus2[k]), 0.0);
        minus0[k] = std::max(B - (minus1[k] + minus2[k]), 0.0);
    }
    return FullOperatorPair{
        OperatorAtoms{prob.tau1, prob.tau2, StepFunction(breaks, plus1), StepFunction(breaks, plus2),
                      StepFunction(breaks, plus0)},
        OperatorAtoms{prob.tau1, prob.tau2, StepFunction(breaks, minus1), StepFunction(breaks, minus2),
                      StepFunction(breaks, minus0)},
    };
}

namespace {

StepFunction to_unit(double a, double b, const IntervalSteps& s, double scale) {
    if (s.breaks.size() < 2 || s.breaks.front() != a || s.breaks.back() != b) {
        throw DomainError("interval step data must run from a to b");
    }
    std::vector<double> breaks(s.breaks.size());
    for (std::size_t k = 0; k < breaks.size(); ++k) breaks[k] = (s.breaks[k] - a) / (b - a);
    breaks.front() = 0.0;
    breaks.back() = 1.0;
    std::vector<double> values(s.values.size());
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = scale * s.values[k];
    return StepFunction(std::move(breaks), std::move(values));
}

}  // namespace

TwoPointProblem to_unit_interval(double a, double b, double tau1, double tau2, const IntervalSteps& p1,
                                 const IntervalSteps& p2, const IntervalSteps& f, double c) {
    if (!(b > a)) throw DomainError("to_unit_interval: requires b > a");
    const double len = b - a;
    TwoPointProblem prob{(tau1 - a) / len,        (tau2 - a) / len,        to_unit(a, b, p1, len),
                         to_unit(a, b, p2, len), to_unit(a, b, f, len), c};
    validate(prob.linear());
    return prob;
}

}  // namespace fde
