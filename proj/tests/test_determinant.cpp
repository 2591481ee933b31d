#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fde/determinant.hpp"
#include "fde/errors.hpp"
#include "oracles.hpp"

using namespace fde;

namespace {

void expect_same_report(const MinimumReport& a, const MinimumReport& b) {
    EXPECT_EQ(a.m_value, b.m_value);
    EXPECT_EQ(a.argmin.alpha, b.argmin.alpha);
    EXPECT_EQ(a.argmin.beta, b.argmin.beta);
    EXPECT_EQ(a.argmin.tau1, b.argmin.tau1);
    EXPECT_EQ(a.argmin.tau2, b.argmin.tau2);
}

}  // namespace

TEST(Determinant, Examples) {
    for (double A : {0.0, 0.4, 2.0}) {
        for (double B : {0.0, 1.3, 5.0}) EXPECT_EQ(determinant({0.0, 0.0, 0.0, 0.0}, A, B), 1.0);
    }
    EXPECT_NEAR(determinant({0.0, -2.0, 1.0 / 3.0, 1.0}, 0.0, 3.0), 0.0, 1e-15);
}

TEST(Determinant, InadmissibleConfigIsRejected) {
    // beta = -2 exceeds the box -(tau2 - tau1) B = -1 at (A, B) = (0, 2), tau1 = 1/2;
    // the formula itself still evaluates to (1)(1 + 2) + (-2)(1 + 1) = -1.
    const DeterminantConfig c{0.0, -2.0, 0.5, 1.0};
    EXPECT_THROW(determinant(c, 0.0, 2.0), DomainError);
    EXPECT_DOUBLE_EQ(determinant_simplified(c, 0.0, 2.0), -1.0);
    EXPECT_THROW(determinant({0.0, 0.0, 0.6, 0.5}, 1.0, 1.0), DomainError);
    EXPECT_THROW(determinant({0.5, 0.0, 0.2, 0.5}, 1.0, 1.0), DomainError);
}

TEST(Determinant, SimplifiedFormIdentity) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int k = 0; k < 2000; ++k) {
        const double A = u(rng), B = 2.0 * u(rng);
        const auto r = oracle::random_admissible(rng, A, B);
        const DeterminantConfig c{r.alpha, r.beta, r.tau1, r.tau2};
        EXPECT_NEAR(determinant(c, A, B), determinant_simplified(c, A, B), 1e-14);
    }
}

TEST(Determinant, MatchesExplicitMatrix) {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int k = 0; k < 500; ++k) {
        const double A = u(rng), B = 2.0 * u(rng);
        const auto r = oracle::random_admissible(rng, A, B);
        if (r.tau1 < 1e-3 || r.tau2 - r.tau1 < 1e-3) continue;
        const double a1 = r.alpha / r.tau1, b1 = r.beta / (r.tau2 - r.tau1);
        EXPECT_NEAR(determinant({r.alpha, r.beta, r.tau1, r.tau2}, A, B),
                    oracle::explicit_determinant(A, B, r.tau1, r.tau2, a1, b1), 1e-12);
    }
}

TEST(Determinant, BoxMinimumSitsAtACorner) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int k = 0; k < 100; ++k) {
        const double A = u(rng), B = 2.0 * u(rng);
        const auto r = oracle::random_admissible(rng, A, B);
        const double w1 = r.tau1, w2 = r.tau2 - r.tau1;
        const double interior = determinant({r.alpha, r.beta, r.tau1, r.tau2}, A, B);
        double best_corner = std::numeric_limits<double>::infinity();
        for (double alpha : {-w1 * B, w1 * A}) {
            for (double beta : {-w2 * B, w2 * A}) {
                best_corner = std::min(best_corner, determinant({alpha, beta, r.tau1, r.tau2}, A, B));
            }
        }
        EXPECT_LE(best_corner, interior + 1e-14);
    }
}

TEST(GridMinimum, Examples) {
    EXPECT_EQ(min_determinant_grid(0.0, 0.0, 50).m_value, 1.0);
    EXPECT_NEAR(min_determinant_grid(0.0, 3.0, 1000).m_value, 0.0, 5e-3);
    EXPECT_NEAR(min_determinant_grid(0.0, 2.0, 1000).m_value, 0.75, 5e-3);
    EXPECT_THROW(min_determinant_grid(0.0, 1.0, 1), DomainError);
    EXPECT_THROW(min_determinant_grid(-1.0, 1.0, 10), DomainError);
}

TEST(GridMinimum, TiesBreakTowardSmallestTaus) {
    const auto r = min_determinant_grid(0.0, 0.0, 64, 4);
    EXPECT_EQ(r.argmin.tau1, 0.0);
    EXPECT_EQ(r.argmin.tau2, 0.0);
    expect_same_report(r, serial::min_determinant_grid(0.0, 0.0, 64));
}

TEST(GridMinimum, ValueIsDeterminantAtArgmin) {
    for (auto [A, B] : {std::pair{0.0, 3.0}, {0.5, 2.45}, {0.3, 0.1}, {0.9, 1.2}, {1.5, 0.2}}) {
        const auto r = min_determinant_grid(A, B, 301);
        EXPECT_EQ(r.method, MinimumMethod::grid);
        EXPECT_EQ(r.m_value, determinant(r.argmin, A, B));
    }
}

TEST(GridMinimum, OpenMpMatchesSerialReferenceBitForBit) {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> ua(0.0, 1.2), ub(0.0, 3.5);
    for (int k = 0; k < 12; ++k) {
        const double A = ua(rng), B = ub(rng);
        const auto ref = serial::min_determinant_grid(A, B, 257);
        for (int threads : {1, 2, 3, 8}) expect_same_report(min_determinant_grid(A, B, 257, threads), ref);
    }
    const StepFunction p_plus({0.0, 0.3, 1.0}, {0.5, 0.1});
    const StepFunction p_minus({0.0, 0.6, 0.8, 1.0}, {2.0, 0.0, 4.0});
    const auto ref = serial::min_determinant_grid_general(p_plus, p_minus, 200);
    for (int threads : {1, 2, 5}) expect_same_report(min_determinant_grid_general(p_plus, p_minus, 200, threads), ref);
}

TEST(GridMinimum, MonotoneUnderNestedRefinement) {
    for (auto [A, B] : {std::pair{0.0, 3.0}, {0.5, 2.45}, {0.2, 1.7}, {0.8, 0.4}, {0.9, 3.1}}) {
        const double analytic = min_determinant_analytic(A, B).m_value;
        double previous = std::numeric_limits<double>::infinity();
        // n - 1 doubles, so each grid contains the previous one.
        for (int n = 17; n <= 2049; n = 2 * n - 1) {
            const double m = min_determinant_grid(A, B, n).m_value;
            EXPECT_LE(m, previous) << "A=" << A << " B=" << B << " n=" << n;
            EXPECT_GE(m, analytic - 1e-12);
            previous = m;
        }
    }
}

TEST(AnalyticMinimum, Examples) {
    auto r = min_determinant_analytic(0.0, 3.0);
    EXPECT_EQ(r.m_value, 0.0);
    EXPECT_NEAR(r.argmin.tau1, 1.0 / 3.0, 1e-15);
    EXPECT_EQ(r.argmin.tau2, 1.0);

    r = min_determinant_analytic(0.5, 2.45);
    EXPECT_NEAR(r.m_value, (19.36 - 0.25 - 4.3025 * 4.3025) / 23.01, 1e-12);
    EXPECT_NEAR(r.m_value, 0.026, 1e-3);

    r = min_determinant_analytic(0.3, 0.1);
    EXPECT_DOUBLE_EQ(r.m_value, 0.7);

    // A - B >= 1: nonpositive with a corner witness.
    r = min_determinant_analytic(2.0, 0.5);
    EXPECT_DOUBLE_EQ(r.m_value, -1.0);
    EXPECT_NEAR(determinant(r.argmin, 2.0, 0.5), r.m_value, 1e-12);
}

TEST(AnalyticMinimum, TauIsClampedAtZero) {
    // B / (B^2 - A^2) >= 1 pushes the vertex below zero.
    const auto r = min_determinant_analytic(0.9, 1.4);
    EXPECT_EQ(r.argmin.tau1, 0.0);
    EXPECT_DOUBLE_EQ(r.m_value, 1.0 - 0.9);
}

TEST(AnalyticMinimum, ValueIsDeterminantAtArgmin) {
    for (double A = 0.0; A <= 1.6; A += 0.1) {
        for (double B = 0.0; B <= 3.6; B += 0.1) {
            const auto r = min_determinant_analytic(A, B);
            EXPECT_NEAR(determinant(r.argmin, A, B), r.m_value, 1e-12) << A << ' ' << B;
        }
    }
}

TEST(AnalyticMinimum, LowerBoundsRandomAdmissibleConfigs) {
    std::mt19937_64 rng(31);
    for (double A = 0.0; A <= 1.2; A += 0.2) {
        for (double B = 0.0; B <= 3.5; B += 0.25) {
            const double m = min_determinant_analytic(A, B).m_value;
            for (int k = 0; k < 2000; ++k) {
                const auto r = oracle::random_admissible(rng, A, B);
                EXPECT_GE(determinant_simplified({r.alpha, r.beta, r.tau1, r.tau2}, A, B), m - 1e-12);
            }
        }
    }
}

TEST(AnalyticMinimum, AgreesWithGridOnCoarseScan) {
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            const double A = 0.95 * i / 5.0, B = 3.2 * j / 5.0;
            EXPECT_NEAR(min_determinant_grid(A, B, 1000).m_value, min_determinant_analytic(A, B).m_value, 5e-3)
                << A << ' ' << B;
        }
    }
}

TEST(AnalyticMinimum, SignMatchesExactVerdict) {
    for (double A = 0.0; A <= 1.3; A += 0.01) {
        for (double B = 0.0; B <= 3.5; B += 0.02) {
            const double m = min_determinant_analytic(A, B).m_value;
            if (std::abs(m) <= 1e-9) continue;
            EXPECT_EQ(m > 0.0, exact_verdict(A, B).solvable) << A << ' ' << B;
        }
    }
}

TEST(GeneralGridMinimum, ConstantBoundsReproduceConstantGrid) {
    for (auto [A, B] : {std::pair{0.0, 3.0}, {0.4, 1.9}, {1.2, 0.3}}) {
        expect_same_report(min_determinant_grid_general(StepFunction::constant(A), StepFunction::constant(B), 400),
                           min_determinant_grid(A, B, 400));
    }
}

TEST(GeneralGridMinimum, Examples) {
    EXPECT_NEAR(min_determinant_grid_general(StepFunction::zero(), StepFunction::indicator(0.0, 1.0, 3.0), 1000)
                    .m_value,
                0.0, 5e-3);

    // Six on the first half behaves like B = 3 on an interval of half length:
    // the minimum closes at zero. Frozen grid value at n_tau = 1001.
    const auto r = min_determinant_grid_general(StepFunction::zero(), StepFunction::indicator(0.0, 0.5, 6.0), 1001);
    EXPECT_NEAR(r.m_value, 3.9999999996709334e-06, 1e-15);
    EXPECT_EQ(r.argmin.tau2, 0.5);
    EXPECT_NEAR(r.argmin.tau1, 0.167, 1e-12);
}

TEST(GeneralGridMinimum, RejectsNegativeBounds) {
    EXPECT_THROW(min_determinant_grid_general(StepFunction::constant(-1.0), StepFunction::zero(), 10), DomainError);
    EXPECT_THROW(min_determinant_grid_general(StepFunction::zero(), StepFunction::constant(-0.5), 10), DomainError);
}
