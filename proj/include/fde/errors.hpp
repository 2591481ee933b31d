#pragma once

#include <stdexcept>
#include <string>

namespace fde {

/// Argument outside the domain of an operation (negative norm, t outside [0,1], ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The 2x2 system for a two-point problem is singular; carries the determinant.
class SingularProblem : public std::runtime_error {
public:
    explicit SingularProblem(double delta)
        : std::runtime_error("singular two-point problem: delta = " + std::to_string(delta)),
          delta_(delta) {}
    double delta() const noexcept { return delta_; }

private:
    double delta_;
};

/// Requested a boundary witness for a norm pair that lies strictly inside the solvability region.
class NotOnBoundary : public std::runtime_error {
public:
    explicit NotOnBoundary(double m_value)
        : std::runtime_error("norm pair is strictly inside the solvability region: M = " +
                             std::to_string(m_value)),
          m_value_(m_value) {}
    double m_value() const noexcept { return m_value_; }

private:
    double m_value_;
};

class NoConvergence : public std::runtime_error {
public:
    NoConvergence(int iterations, double best_residual)
        : std::runtime_error("fixed-point iteration did not converge after " +
                             std::to_string(iterations) + " iterations; best residual " +
                             std::to_string(best_residual)),
          iterations_(iterations),
          best_residual_(best_residual) {}
    int iterations() const noexcept { return iterations_; }
    double best_residual() const noexcept { return best_residual_; }

private:
    int iterations_;
    double best_residual_;
};

}  // namespace fde
