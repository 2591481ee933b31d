#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fde/criteria.hpp"
#include "fde/determinant.hpp"
#include "fde/equations.hpp"
#include "fde/errors.hpp"
#include "fde/problem_io.hpp"
#include "fde/quasilinear.hpp"
#include "fde/region.hpp"

namespace fde::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text, const char* flag) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw UsageError(std::string(flag) + ": '" + text + "' is not a number");
    }
    return v;
}

struct Range {
    double lo;
    double hi;
};

// "lo:hi" or a single value (lo == hi).
Range parse_range(const std::string& text, const char* flag) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const double v = parse_real(text, flag);
        return {v, v};
    }
    return {parse_real(text.substr(0, colon), flag), parse_real(text.substr(colon + 1), flag)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path + "'");
    return ss.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << content;
    file.flush();
    if (!file) throw IoError("error writing '" + path + "'");
}

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(10) << (v == 0.0 ? 0.0 : v);
    return os.str();
}

void print_verdict(std::ostream& out, const Verdict& v, const char* note = "") {
    out << std::left << std::setw(8) << v.criterion << (v.solvable ? "solvable      " : "not solvable  ")
        << "margin = " << num(v.margin) << note << '\n';
}

struct Options {
    std::string A, B;
    std::optional<double> tplus, tminus, a, b;
    int nA = 20, nB = 20, ntau = 2000;
    std::string out;
    std::string problem;
    std::string quasilinear;
    double tol = 1e-8;
    int max_iter = 200;
    double theta = 0.5;
};

int cmd_check(const Options& o, CLI::App& sub, std::ostream& out) {
    const bool pair = sub.count("--A") + sub.count("--B") > 0;
    const bool quad = sub.count("--tplus") + sub.count("--tminus") + sub.count("--a") + sub.count("--b") > 0;
    if (pair == quad) throw UsageError("check: give either --A --B or --tplus --tminus --a --b");
    double A = 0.0;
    double B = 0.0;
    if (pair) {
        if (o.A.empty() || o.B.empty()) throw UsageError("check: both --A and --B are required");
        A = parse_real(o.A, "--A");
        B = parse_real(o.B, "--B");
    } else {
        if (!o.tplus || !o.tminus || !o.a || !o.b) throw UsageError("check: --tplus --tminus --a --b are all required");
        const NormData norms(*o.tplus, *o.tminus, *o.a, *o.b);
        A = norms.A();
        B = norms.B();
    }
    if (!(A >= 0.0 && B >= 0.0)) throw DomainError("check: A and B must be nonnegative");

    out << "A = " << num(A) << "\nB = " << num(B) << '\n';
    const Verdict exact = exact_verdict(A, B);
    print_verdict(out, exact);
    print_verdict(out, integral_norm_verdict(A, B), "  (A, B read as integral norms)");
    print_verdict(out, integral_bound_verdict(A, B));
    print_verdict(out, determinant_form_verdict(A, B));
    print_verdict(out, b_bound_verdict(A, B));
    print_verdict(out, a_bound_verdict(A, B));
    out << "m_analytic = " << num(min_determinant_analytic(A, B).m_value) << '\n';
    return exact.solvable ? kSuccess : kNegative;
}

RegionSpec region_spec(const Options& o, Range a_default, Range b_default) {
    RegionSpec spec;
    const Range ra = o.A.empty() ? a_default : parse_range(o.A, "--A");
    const Range rb = o.B.empty() ? b_default : parse_range(o.B, "--B");
    spec.a_lo = ra.lo;
    spec.a_hi = ra.hi;
    spec.b_lo = rb.lo;
    spec.b_hi = rb.hi;
    spec.nA = o.nA;
    spec.nB = o.nB;
    spec.n_tau = o.ntau;
    spec.validate();
    return spec;
}

int cmd_region(const Options& o, std::ostream& out) {
    const RegionSpec spec = region_spec(o, {0.0, 0.95}, {0.0, 3.2});
    write_output(o.out, to_csv(scan_region(spec, configured_threads())), out);
    return kSuccess;
}

void print_report(std::ostream& out, const char* label, const MinimumReport& r) {
    out << std::left << std::setw(10) << label << "M = " << num(r.m_value) << "  alpha = " << num(r.argmin.alpha)
        << "  beta = " << num(r.argmin.beta) << "  tau1 = " << num(r.argmin.tau1)
        << "  tau2 = " << num(r.argmin.tau2) << '\n';
}

int cmd_minimize(const Options& o, std::ostream& out) {
    if (o.A.empty() || o.B.empty()) throw UsageError("minimize: --A and --B are required");
    const double A = parse_real(o.A, "--A");
    const double B = parse_real(o.B, "--B");
    const MinimumReport analytic = min_determinant_analytic(A, B);
    print_report(out, "analytic", analytic);
    print_report(out, "grid", min_determinant_grid(A, B, o.ntau, configured_threads()));
    return analytic.m_value > kBoundaryTol ? kSuccess : kNegative;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
    if (o.A.empty() || o.B.empty()) throw UsageError("counterexample: --A and --B are required");
    const double A = parse_real(o.A, "--A");
    const double B = parse_real(o.B, "--B");
    Counterexample cx = [&] {
        try {
            return construct_counterexample(A, B);
        } catch (const NotOnBoundary& e) {
            out << "not on boundary: M = " << num(e.m_value()) << " > 0, every problem with these norms is "
                << "uniquely solvable\n";
            throw;
        }
    }();
    const double res = residual(cx.problem, cx.null_solution, 1000);
    const std::string json = to_json(cx, A, B, res);
    write_output(o.out, json, out);
    if (!o.out.empty()) {
        out << "delta = " << num(cx.delta) << "\nnull_vector = (" << num(cx.null_vector[0]) << ", "
            << num(cx.null_vector[1]) << ")\nresidual = " << num(res) << '\n';
    }
    return kSuccess;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
    const TwoPointProblem prob = parse_problem(read_file(o.problem));
    std::ostream& info = o.out.empty() ? err : out;
    try {
        if (o.quasilinear.empty()) {
            const PiecewiseLinear x = solve_two_point(prob);
            write_output(o.out, to_json(x), out);
            info << "residual = " << num(residual(prob, x, 1000)) << '\n';
            return kSuccess;
        }
        const Nonlinearity base = parse_nonlinearity(o.quasilinear);
        base.validate();
        const StepFunction f = prob.f;
        const double f_sup = std::max(std::abs(f.min_value()), std::abs(f.max_value()));
        const Nonlinearity F{[base, f](double t, double x) { return f(t) + base.g(t, x); },
                             [base, f_sup](double r) { return f_sup + base.growth_bound(r); }, base.name};
        QuasilinearOptions opts;
        opts.tol = o.tol;
        opts.max_iter = o.max_iter;
        opts.theta = o.theta;
        const QuasilinearResult result = solve_quasilinear(prob.linear(), F, prob.c, opts);
        write_output(o.out, to_json(result.solution), out);
        info << "residual = " << num(result.residual) << "\niterations = " << result.iterations << '\n';
        return kSuccess;
    } catch (const SingularProblem& e) {
        out << "singular problem: delta = " << num(e.delta()) << '\n';
        return kNegative;
    } catch (const NoConvergence& e) {
        out << "no convergence after " << e.iterations() << " iterations; best residual = "
            << num(e.best_residual()) << '\n';
        return kNegative;
    }
}

const char* sign_word(double m, double band) {
    if (std::abs(m) < band) return "band";
    return m > 0.0 ? "positive" : "nonpositive";
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const bool scan = o.A.empty() || o.B.empty() || o.A.find(':') != std::string::npos ||
                      o.B.find(':') != std::string::npos;
    if (!scan) {
        const double A = parse_real(o.A, "--A");
        const double B = parse_real(o.B, "--B");
        if (!(A >= 0.0 && B >= 0.0)) throw DomainError("oracle: A and B must be nonnegative");
        const ThresholdPoint p = evaluate_thresholds(A, B, o.ntau, configured_threads());
        const double band = band_width(A, B);
        out << "A = " << num(A) << "\nB = " << num(B) << "\nn_tau = " << o.ntau << '\n';
        out << "m_grid = " << num(p.m_grid) << "  [" << sign_word(p.m_grid, band) << "]\n";
        for (auto [which, m] : {std::pair{BranchThreshold::one_plus_a2, p.m_one_plus_a2},
                                std::pair{BranchThreshold::one_plus_4a2, p.m_one_plus_4a2}}) {
            const bool in_band = std::abs(m) < band || std::abs(p.m_grid) < band;
            out << "m_analytic " << std::left << std::setw(20) << to_string(which) << "= " << num(m) << "  ["
                << sign_word(m, band) << "] "
                << (in_band ? "not compared" : ((m > 0.0) == (p.m_grid > 0.0) ? "agrees" : "DISAGREES")) << '\n';
        }
        return kSuccess;
    }

    const RegionSpec spec = region_spec(o, {0.2, 0.9}, {1.0, 1.6});
    const ThresholdReconciliation rec = reconcile_thresholds(spec, configured_threads());
    out << "scan A in [" << num(spec.a_lo) << ", " << num(spec.a_hi) << "] x B in [" << num(spec.b_lo) << ", "
        << num(spec.b_hi) << "], " << spec.a_points() << " x " << spec.b_points()
        << " points, n_tau = " << spec.n_tau << '\n';
    for (auto [which, t] : {std::pair{BranchThreshold::one_plus_a2, rec.one_plus_a2},
                            std::pair{BranchThreshold::one_plus_4a2, rec.one_plus_4a2}}) {
        out << "threshold " << std::left << std::setw(20) << to_string(which) << "compared = " << t.compared
            << "  mismatches = " << t.mismatches << '\n';
    }
    out << "certified: " << (rec.certified ? to_string(*rec.certified) : "none") << '\n';
    return rec.certified ? kSuccess : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Unique solvability of the Cauchy problem for functional differential equations with "
                 "positive operators of given norms"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "Evaluate every solvability criterion at one norm pair");
    check->add_option("--A", o.A, "Dimensionless (b - a) |T+|");
    check->add_option("--B", o.B, "Dimensionless (b - a) |T-|");
    check->add_option("--tplus", o.tplus, "Norm of T+");
    check->add_option("--tminus", o.tminus, "Norm of T-");
    check->add_option("--a", o.a, "Interval start");
    check->add_option("--b", o.b, "Interval end");

    auto* region = app.add_subcommand("region", "Scan the (A, B) plane and emit CSV");
    region->add_option("--A", o.A, "A range lo:hi (default 0:0.95)");
    region->add_option("--B", o.B, "B range lo:hi (default 0:3.2)");
    region->add_option("--nA", o.nA, "Points along A");
    region->add_option("--nB", o.nB, "Points along B");
    region->add_option("--ntau", o.ntau, "Grid size of the determinant oracle");
    region->add_option("--out", o.out, "Write CSV here instead of stdout");

    auto* minimize = app.add_subcommand("minimize", "Minimum of the determinant: closed form and grid");
    minimize->add_option("--A", o.A)->required();
    minimize->add_option("--B", o.B)->required();
    minimize->add_option("--ntau", o.ntau);

    auto* counter = app.add_subcommand("counterexample", "Emit a problem with a nontrivial homogeneous solution");
    counter->add_option("--A", o.A)->required();
    counter->add_option("--B", o.B)->required();
    counter->add_option("--out", o.out, "Write JSON here instead of stdout");

    auto* solve = app.add_subcommand("solve", "Solve a two-point problem from a JSON file");
    solve->add_option("problem", o.problem, "Problem JSON")->required();
    solve->add_option("--out", o.out, "Write the solution JSON here instead of stdout");
    solve->add_option("--quasilinear", o.quasilinear, "Nonlinearity: power:kappa,gamma or tanh:kappa");
    solve->add_option("--tol", o.tol);
    solve->add_option("--max-iter", o.max_iter);
    solve->add_option("--theta", o.theta);

    auto* oracle = app.add_subcommand("oracle", "Compare closed-form minima under both branch thresholds "
                                                "with the grid oracle (ranges trigger a scan)");
    oracle->add_option("--A", o.A, "A value or lo:hi range");
    oracle->add_option("--B", o.B, "B value or lo:hi range");
    oracle->add_option("--nA", o.nA);
    oracle->add_option("--nB", o.nB);
    oracle->add_option("--ntau", o.ntau);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    try {
        if (*check) return cmd_check(o, *check, out);
        if (*region) return cmd_region(o, out);
        if (*minimize) return cmd_minimize(o, out);
        if (*counter) return cmd_counterexample(o, out);
        if (*solve) return cmd_solve(o, out, err);
        if (*oracle) return cmd_oracle(o, out);
    } catch (const NotOnBoundary&) {
        return kNegative;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIoError;
    }
    return kUsage;
}

}  // namespace fde::cli
