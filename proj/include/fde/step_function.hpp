#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fde {

/// Piecewise-constant function on [0, 1].
///
/// Pieces are [breaks[k], breaks[k+1]) except the last, which is closed.
/// Integrals are exact piecewise-linear arithmetic over a cumulative table.
class StepFunction {
public:
    /// Throws DomainError unless breaks start at 0, end at 1, strictly increase,
    /// and there is exactly one finite value per piece.
    StepFunction(std::vector<double> breaks, std::vector<double> values);

    static StepFunction constant(double value);
    /// value on [lo, hi), zero elsewhere (hi == 1 closes the last piece).
    static StepFunction indicator(double lo, double hi, double value);
    static StepFunction zero() { return constant(0.0); }

    const std::vector<double>& breaks() const noexcept { return breaks_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t pieces() const noexcept { return values_.size(); }

    double operator()(double t) const;

    /// Exact integral over [0, t], t in [0, 1].
    double integral(double t) const;
    /// Exact integral over [u, t].
    double integral(double u, double t) const;

    double min_value() const;
    double max_value() const;
    bool is_zero() const;

    /// Same function resampled on a finer set of breaks (must contain all own breaks).
    StepFunction refined(std::span<const double> breaks) const;

private:
    std::size_t piece_of(double t) const;

    std::vector<double> breaks_;
    std::vector<double> values_;
    std::vector<double> cumulative_;  // integral over [0, breaks_[k]]
};

/// Sorted union of break sets, exact duplicates removed.
std::vector<double> merge_breaks(std::initializer_list<std::span<const double>> sets);

/// Pointwise op(f(t), g(t)) on the merged breaks of f and g.
StepFunction combine(const StepFunction& f, const StepFunction& g,
                     const std::function<double(double, double)>& op);

/// Pointwise op(f(t)).
StepFunction transform(const StepFunction& f, const std::function<double(double)>& op);

/// Continuous piecewise-linear function given by node values at increasing breaks.
class PiecewiseLinear {
public:
    PiecewiseLinear(std::vector<double> breaks, std::vector<double> values);

    const std::vector<double>& breaks() const noexcept { return breaks_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t pieces() const noexcept { return breaks_.size() - 1; }

    /// Linear interpolation; t is clamped to [breaks.front(), breaks.back()].
    double operator()(double t) const;
    double slope(std::size_t piece) const;
    double sup_norm() const;

private:
    std::vector<double> breaks_;
    std::vector<double> values_;
};

}  // namespace fde
