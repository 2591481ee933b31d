#include "fde/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fde/errors.hpp"

namespace fde {

StepFunction::StepFunction(std::vector<double> breaks, std::vector<double> values)
    : breaks_(std::move(breaks)), values_(std::move(values)) {
    if (breaks_.size() < 2 || breaks_.front() != 0.0 || breaks_.back() != 1.0) {
        throw DomainError("step function breaks must run from 0 to 1");
    }
    if (values_.size() + 1 != breaks_.size()) {
        throw DomainError("step function needs one value per piece: " +
                          std::to_string(breaks_.size() - 1) + " pieces, " +
                          std::to_string(values_.size()) + " values");
    }
    for (std::size_t k = 0; k + 1 < breaks_.size(); ++k) {
        if (!(breaks_[k] < breaks_[k + 1])) throw DomainError("step function breaks must strictly increase");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw DomainError("step function values must be finite");
    }
    cumulative_.resize(breaks_.size());
    cumulative_[0] = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        cumulative_[k + 1] = cumulative_[k] + values_[k] * (breaks_[k + 1] - breaks_[k]);
    }
}

StepFunction StepFunction::constant(double value) { return StepFunction({0.0, 1.0}, {value}); }

StepFunction StepFunction::indicator(double lo, double hi, double value) {
    if (!(0.0 <= lo && lo < hi && hi <= 1.0)) throw DomainError("indicator: need 0 <= lo < hi <= 1");
    std::vector<double> breaks{0.0};
    std::vector<double> values;
    if (lo > 0.0) {
        breaks.push_back(lo);
        values.push_back(0.0);
    }
    breaks.push_back(hi);
    values.push_back(value);
    if (hi < 1.0) {
        breaks.push_back(1.0);
        values.push_back(0.0);
    }
    return StepFunction(std::move(breaks), std::move(values));
}

std::size_t StepFunction::piece_of(double t) const {
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    const auto k = static_cast<std::ptrdiff_t>(it - breaks_.begin()) - 1;
    return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(k, 0, static_cast<std::ptrdiff_t>(pieces()) - 1));
}

double StepFunction::operator()(double t) const { return values_[piece_of(t)]; }

double StepFunction::integral(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("integral: t must lie in [0, 1]");
    const std::size_t k = piece_of(t);
    return cumulative_[k] + values_[k] * (t - breaks_[k]);
}

double StepFunction::integral(double u, double t) const { return integral(t) - integral(u); }

double StepFunction::min_value() const { return *std::min_element(values_.begin(), values_.end()); }
double StepFunction::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

bool StepFunction::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

StepFunction StepFunction::refined(std::span<const double> breaks) const {
    std::vector<double> values;
    values.reserve(breaks.size() - 1);
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        values.push_back((*this)(0.5 * (breaks[k] + breaks[k + 1])));
    }
    return StepFunction(std::vector<double>(breaks.begin(), breaks.end()), std::move(values));
}

std::vector<double> merge_breaks(std::initializer_list<std::span<const double>> sets) {
    std::vector<double> out;
    for (const auto& s : sets) out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

StepFunction combine(const StepFunction& f, const StepFunction& g,
                     const std::function<double(double, double)>& op) {
    auto breaks = merge_breaks({f.breaks(), g.breaks()});
    std::vector<double> values;
    values.reserve(breaks.size() - 1);
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double mid = 0.5 * (breaks[k] + breaks[k + 1]);
        values.push_back(op(f(mid), g(mid)));
    }
    return StepFunction(std::move(breaks), std::move(values));
}

StepFunction transform(const StepFunction& f, const std::function<double(double)>& op) {
    std::vector<double> values;
    values.reserve(f.pieces());
    for (double v : f.values()) values.push_back(op(v));
    return StepFunction(f.breaks(), std::move(values));
}

PiecewiseLinear::PiecewiseLinear(std::vector<double> breaks, std::vector<double> values)
    : breaks_(std::move(breaks)), values_(std::move(values)) {
    if (breaks_.size() < 2 || breaks_.size() != values_.size()) {
        throw DomainError("piecewise-linear function needs at least two nodes and one value per node");
    }
    for (std::size_t k = 0; k + 1 < breaks_.size(); ++k) {
        if (!(breaks_[k] < breaks_[k + 1])) throw DomainError("piecewise-linear breaks must strictly increase");
    }
}

double PiecewiseLinear::operator()(double t) const {
    if (t <= breaks_.front()) return values_.front();
    if (t >= breaks_.back()) return values_.back();
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    const std::size_t k = static_cast<std::size_t>(it - breaks_.begin()) - 1;
    if (t == breaks_[k]) return values_[k];
    const double w = (t - breaks_[k]) / (breaks_[k + 1] - breaks_[k]);
    return values_[k] + w * (values_[k + 1] - values_[k]);
}

double PiecewiseLinear::slope(std::size_t piece) const {
    return (values_[piece + 1] - values_[piece]) / (breaks_[piece + 1] - breaks_[piece]);
}

double PiecewiseLinear::sup_norm() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace fde
