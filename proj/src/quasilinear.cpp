#include "fde/quasilinear.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "fde/errors.hpp"

namespace fde {

void Nonlinearity::validate() const {
    if (!g || !growth_bound) throw DomainError("nonlinearity '" + name + "' is incomplete");
    const double r3 = growth_bound(1e3) / 1e3;
    const double r6 = growth_bound(1e6) / 1e6;
    const double r9 = growth_bound(1e9) / 1e9;
    const bool zero = r3 == 0.0 && r6 == 0.0 && r9 == 0.0;
    if (!zero && !(r6 <= r3 && r9 <= r6 && r9 < r3)) {
        throw DomainError("nonlinearity '" + name + "' does not have sublinear growth");
    }
}

StepFunction Nonlinearity::evaluate(const PiecewiseLinear& x, std::span<const double> grid) const {
    std::vector<double> values;
    values.reserve(grid.size() - 1);
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const double mid = 0.5 * (grid[k] + grid[k + 1]);
        values.push_back(g(mid, x(mid)));
    }
    return StepFunction(std::vector<double>(grid.begin(), grid.end()), std::move(values));
}

Nonlinearity Nonlinearity::zero() {
    return {[](double, double) { return 0.0; }, [](double) { return 0.0; }, "zero"};
}

Nonlinearity Nonlinearity::forcing(std::function<double(double)> f, double bound) {
    return {[f = std::move(f)](double t, double) { return f(t); }, [bound](double) { return bound; }, "forcing"};
}

Nonlinearity Nonlinearity::power_law(double kappa, double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0)) throw DomainError("power law requires 0 <= gamma < 1");
    return {[kappa, gamma](double, double x) { return kappa * std::copysign(std::pow(std::abs(x), gamma), x); },
            [kappa, gamma](double r) { return std::abs(kappa) * std::pow(r, gamma); }, "power"};
}

Nonlinearity Nonlinearity::saturating(double kappa) {
    return {[kappa](double, double x) { return kappa * std::tanh(x); },
            [kappa](double) { return std::abs(kappa); }, "tanh"};
}

namespace {

std::vector<double> parse_numbers(std::string_view text) {
    std::vector<double> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size()) {
            throw DomainError("bad number '" + std::string(item) + "' in nonlinearity parameters");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

Nonlinearity parse_nonlinearity(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const auto params =
        colon == std::string::npos ? std::vector<double>{} : parse_numbers(std::string_view(spec).substr(colon + 1));
    if (name == "power") {
        if (params.size() != 2) throw DomainError("power nonlinearity expects power:kappa,gamma");
        return Nonlinearity::power_law(params[0], params[1]);
    }
    if (name == "tanh") {
        if (params.size() != 1) throw DomainError("tanh nonlinearity expects tanh:kappa");
        return Nonlinearity::saturating(params[0]);
    }
    throw DomainError("unknown nonlinearity '" + name + "' (expected power or tanh)");
}

std::vector<double> evaluation_grid(const LinearPart& linear, int grid_cells) {
    if (grid_cells < 1) throw DomainError("evaluation grid needs at least one cell");
    std::vector<double> uniform(grid_cells + 1);
    for (int k = 0; k <= grid_cells; ++k) uniform[k] = static_cast<double>(k) / grid_cells;
    return merge_breaks({uniform, linear.p1.breaks(), linear.p2.breaks()});
}

double quasilinear_residual(const LinearPart& linear, const Nonlinearity& F, double c, const PiecewiseLinear& x,
                            int n_samples, int grid_cells) {
    const auto grid = evaluation_grid(linear, grid_cells);
    return residual(with_forcing(linear, F.evaluate(x, grid), c), x, n_samples);
}

QuasilinearResult solve_quasilinear(const LinearPart& linear, const Nonlinearity& F, double c,
                                    const QuasilinearOptions& options) {
    if (!(options.theta > 0.0 && options.theta <= 1.0)) throw DomainError("theta must lie in (0, 1]");
    validate(linear);
    const double det = system_matrix(linear).det();
    if (std::abs(det) <= kSingularTol) throw SingularProblem(det);

    const auto grid = evaluation_grid(linear, options.grid_cells);
    auto step = [&](const PiecewiseLinear& x) {
        return solve_two_point(with_forcing(linear, F.evaluate(x, grid), c));
    };
    auto measure = [&](const PiecewiseLinear& x) {
        return residual(with_forcing(linear, F.evaluate(x, grid), c), x, options.n_samples);
    };

    const PiecewiseLinear start({0.0, 1.0}, {c, c});
    PiecewiseLinear x = step(start);
    double res = measure(x);
    int iterations = 1;
    double theta = options.theta;
    while (res > options.tol) {
        if (iterations >= options.max_iter) throw NoConvergence(iterations, res);
        ++iterations;
        const PiecewiseLinear raw = step(x);
        std::vector<double> blended(x.values().size());
        for (std::size_t k = 0; k < blended.size(); ++k) {
            blended[k] = (1.0 - theta) * x.values()[k] + theta * raw.values()[k];
        }
        PiecewiseLinear candidate(x.breaks(), std::move(blended));
        const double r = measure(candidate);
        if (r > res && theta > 1e-3) {
            theta *= 0.5;
            continue;
        }
        x = std::move(candidate);
        res = r;
    }
    return {std::move(x), res, iterations};
}

std::optional<double> a_priori_bound(const LinearPart& linear, const Nonlinearity& F, double c) {
    auto abs_mass = [](const StepFunction& p) {
        return transform(p, [](double v) { return std::abs(v); }).integral(1.0);
    };
    const double K = abs_mass(linear.p1) + abs_mass(linear.p2);
    if (!(K < 1.0)) return std::nullopt;

    // Start above the largest fixed point, then iterate down onto it.
    auto excess = [&](double R) { return (1.0 - K) * R - std::abs(c) - F.growth_bound(R); };
    double R = 1.0;
    while (excess(R) <= 0.0) {
        R *= 2.0;
        if (!std::isfinite(R)) return std::nullopt;
    }
    for (int k = 0; k < 10000; ++k) {
        const double next = (std::abs(c) + F.growth_bound(R)) / (1.0 - K);
        if (std::abs(next - R) <= 1e-14 * R) return next;
        R = next;
    }
    return R;
}

}  // namespace fde
