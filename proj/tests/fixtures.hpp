#pragma once

// Random problem generators shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "fde/equations.hpp"

namespace fde::fixture {

inline StepFunction random_step(std::mt19937_64& rng, int max_pieces, double amplitude) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> count(1, max_pieces);
    std::vector<double> breaks{0.0, 1.0};
    for (int k = 1; k < count(rng); ++k) breaks.push_back(u(rng));
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::vector<double> values;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) values.push_back(amplitude * (2.0 * u(rng) - 1.0));
    return StepFunction(breaks, values);
}

inline TwoPointProblem random_problem(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double t1 = u(rng), t2 = u(rng);
    if (t1 > t2) std::swap(t1, t2);
    return TwoPointProblem{t1, t2, random_step(rng, 5, 3.0), random_step(rng, 5, 3.0), random_step(rng, 5, 2.0),
                           4.0 * u(rng) - 2.0};
}

/// Homogeneous problem with p2 = s g, s chosen so the determinant vanishes;
/// the determinant is affine in s. Empty when no usable s exists.
inline std::optional<TwoPointProblem> random_singular_problem(std::mt19937_64& rng) {
    TwoPointProblem prob = random_problem(rng);
    prob.f = StepFunction::zero();
    prob.c = 0.0;
    const double m11 = 1.0 - prob.p1.integral(prob.tau1);
    const double i1_t2 = prob.p1.integral(prob.tau2);
    const double g1 = prob.p2.integral(prob.tau1);
    const double g2 = prob.p2.integral(prob.tau2);
    const double denom = m11 * g2 + g1 * i1_t2;
    if (std::abs(denom) < 0.2) return std::nullopt;
    const double s = m11 / denom;
    if (std::abs(s) > 5.0) return std::nullopt;
    prob.p2 = transform(prob.p2, [s](double v) { return s * v; });
    return prob;
}

}  // namespace fde::fixture
