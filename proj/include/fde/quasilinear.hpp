#pragma once

// Quasilinear Cauchy problem
//
//     x'(t) = p1(t) x(tau1) + p2(t) x(tau2) + (F x)(t),   x(0) = c,
//
// with F continuous, bounded and of sublinear growth. Existence follows from
// a fixed-point argument once the linear part is uniquely solvable; the
// damped Picard iteration below is one way to find a solution, and failing to
// converge says nothing about existence.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fde/equations.hpp"

namespace fde {

/// Pointwise nonlinearity (F x)(t) = g(t, x(t)), sampled on a fixed grid.
struct Nonlinearity {
    std::function<double(double t, double x)> g;
    /// Upper bound on sup |F x| over inputs with sup |x| <= r.
    std::function<double(double r)> growth_bound;
    std::string name;

    /// Checks growth_bound(r) / r is non-increasing over r in {1e3, 1e6, 1e9}
    /// and strictly decreasing unless identically zero. Throws DomainError.
    void validate() const;

    /// Step function on the given breaks with the value of g at each cell midpoint.
    StepFunction evaluate(const PiecewiseLinear& x, std::span<const double> grid) const;

    static Nonlinearity zero();
    /// x-independent forcing.
    static Nonlinearity forcing(std::function<double(double)> f, double bound);
    /// kappa * sign(x) |x|^gamma, 0 <= gamma < 1.
    static Nonlinearity power_law(double kappa, double gamma);
    /// kappa * tanh(x).
    static Nonlinearity saturating(double kappa);
};

/// Parses "power:kappa,gamma" or "tanh:kappa". Throws DomainError.
Nonlinearity parse_nonlinearity(const std::string& spec);

struct QuasilinearOptions {
    int max_iter = 200;
    double tol = 1e-8;
    double theta = 0.5;
    int grid_cells = 1024;
    int n_samples = 1000;
};

struct QuasilinearResult {
    PiecewiseLinear solution;
    double residual;
    int iterations;
};

/// Uniform grid with grid_cells cells merged with the breaks of p1, p2.
std::vector<double> evaluation_grid(const LinearPart& linear, int grid_cells);

/// Damped Picard iteration. The first step solves the linear problem with
/// F evaluated at the constant c; each later step blends the previous iterate
/// with the linear solve for F(x_k) using weight theta, halving theta when the
/// residual would grow. Throws SingularProblem or NoConvergence.
QuasilinearResult solve_quasilinear(const LinearPart& linear, const Nonlinearity& F, double c,
                                    const QuasilinearOptions& options = {});

double quasilinear_residual(const LinearPart& linear, const Nonlinearity& F, double c,
                            const PiecewiseLinear& x, int n_samples, int grid_cells = 1024);

/// R with R = |c| + K R + growth_bound(R), K = int |p1| + int |p2|, when K < 1.
std::optional<double> a_priori_bound(const LinearPart& linear, const Nonlinearity& F, double c);

}  // namespace fde
