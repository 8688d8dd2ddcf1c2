#include "bpswf/bouwkamp.hpp"
#include "bpswf/errors.hpp"
#include "bpswf/jacobi.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace bpswf;

TEST(BuildMatrix, BandwidthZeroLeavesBallPolynomialEigenvalues) {
    const auto a = build_matrix(1, 0.0, 0.0, 2);
    EXPECT_EQ(a.diag, (std::vector<double>{4.0, 18.0, 40.0}));
    EXPECT_EQ(a.off, (std::vector<double>{0.0, 0.0}));
}

TEST(BuildMatrix, EntriesFromRecurrenceCoefficients) {
    // c = 2: c^2/2 = 2 and the Jacobi exponents are (0, 3/2)
    const auto a = build_matrix(1, 0.0, 2.0, 2);
    const JacobiParams p(0.0, 1.5);
    for (int j = 0; j <= 2; ++j) {
        const auto rc = recurrence_coeffs(j, p);
        const double gamma = (1 + 2 * j) * (4.0 + 2 * j);
        EXPECT_NEAR(a.diag[static_cast<std::size_t>(j)], gamma + 2.0 * (rc.b + 1.0), 1e-13);
        if (j < 2) {
            EXPECT_NEAR(a.off[static_cast<std::size_t>(j)], 2.0 * rc.a, 1e-15);
            EXPECT_GT(a.off[static_cast<std::size_t>(j)], 0.0);
        }
    }
    EXPECT_EQ(a.order(), 3u);
    EXPECT_EQ(a.off.size(), 2u);
}

TEST(BuildMatrix, ParameterGuards) {
    EXPECT_THROW(build_matrix(0, 0.0, 1.0, 4), ParameterError);
    EXPECT_NO_THROW(build_matrix(0, 0.0, 1.0, 4, ModeKind::scalar));
    EXPECT_THROW(build_matrix(1, -1.0, 1.0, 4), ParameterError);
    EXPECT_THROW(build_matrix(1, 0.0, -1.0, 4), ParameterError);
    EXPECT_THROW(build_matrix(1, 0.0, 1.0, -1), ParameterError);
}

TEST(Truncation, RoundsNonIntegerAlphaUp) {
    EXPECT_EQ(truncation_order(3, 0.0), 36);
    EXPECT_EQ(truncation_order(3, 0.5), 37);
    EXPECT_EQ(truncation_order(3, 1.2), 39);
    EXPECT_EQ(truncation_order(3, -0.5), 35);
    EXPECT_EQ(truncation_index(1, 3, 0.0), 18); // ceil(35/2)
    EXPECT_EQ(truncation_index(2, 3, 0.0), 17);
}

TEST(SolveModes, BandwidthZeroTable) {
    const auto t = solve_modes(3, 0.0, 0.0);
    EXPECT_EQ(t.entries.size(), 4u);
    EXPECT_EQ(t.at(1, 0).chi, 4.0);
    EXPECT_EQ(t.at(1, 1).chi, 18.0);
    EXPECT_EQ(t.at(2, 0).chi, 10.0);
    EXPECT_EQ(t.at(3, 0).chi, 18.0);
    EXPECT_THROW(t.at(2, 1), std::out_of_range);
    // beta = e_k
    const auto &b = t.at(1, 1).beta;
    for (std::size_t j = 0; j < b.size(); ++j)
        EXPECT_EQ(b[j], j == 1 ? 1.0 : 0.0);
}

TEST(SolveModes, TruncationDoublingIsStable) {
    const auto t = solve_modes(3, 0.0, 2.0);
    for (const auto &[key, e] : t.entries) {
        const auto a = build_matrix(e.n, 0.0, 2.0, 2 * e.truncation());
        const auto pairs = eigen_tridiagonal(a);
        EXPECT_NEAR(pairs[static_cast<std::size_t>(e.k)].value, e.chi, 1e-10 * e.chi);
    }
}

TEST(SolveModes, StrictOrderingInK) {
    for (double alpha : {-0.5, 0.0, 1.0, 2.5})
        for (double c : {0.0, 1.0, 2.0, 10.0}) {
            const auto t = solve_modes(10, alpha, c);
            for (int n = 1; n <= 10; ++n)
                for (int k = 1; 2 * k + n <= 10; ++k)
                    EXPECT_LT(t.at(n, k - 1).chi, t.at(n, k).chi);
        }
}

TEST(SolveModes, SmallBandwidthContinuity) {
    const double c = 1e-3;
    const auto t = solve_modes(6, 1.0, c);
    for (const auto &[key, e] : t.entries) {
        const double gamma = ball_polynomial_eigenvalue(e.n + 2 * e.k, 1.0);
        EXPECT_NEAR(e.chi, gamma, 2.0 * c * c);
        EXPECT_GT(e.chi, gamma);
    }
}

TEST(SolveModes, CoefficientsHaveUnitNormAndDecayingTail) {
    for (double c : {2.0, 10.0}) {
        const auto t = solve_modes(8, 0.0, c);
        for (const auto &[key, e] : t.entries) {
            double nrm = 0.0;
            for (double b : e.beta)
                nrm += b * b;
            EXPECT_NEAR(nrm, 1.0, 1e-14);
            EXPECT_LE(std::abs(e.beta.back()), 1e-12);
            const auto a = build_matrix(e.n, 0.0, c, e.truncation());
            EXPECT_LE(residual(a, e.chi, e.beta), 1e-10);
        }
    }
}

TEST(SolveModes, SpectrumIsSimpleAndInsideGershgorin) {
    const auto a = build_matrix(2, 1.0, 10.0, 25);
    const auto pairs = eigen_tridiagonal(a);
    const auto [lo, hi] = a.gershgorin_bounds();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        EXPECT_GE(pairs[i].value, lo);
        EXPECT_LE(pairs[i].value, hi);
        if (i > 0)
            EXPECT_GT(pairs[i].value - pairs[i - 1].value, 1e-8);
    }
}

TEST(SolveModes, ScalarDegreeZeroModes) {
    const auto t = solve_modes(4, 0.0, 0.0, ModeKind::scalar);
    EXPECT_EQ(t.at(0, 0).chi, 0.0);
    EXPECT_EQ(t.at(0, 1).chi, 2.0 * 5.0);
    EXPECT_EQ(t.at(0, 2).chi, 4.0 * 7.0);
    EXPECT_THROW(solve_modes(4, 0.0, 0.0).at(0, 0), std::out_of_range);
}

TEST(SolveBouwkamp, BisectionFallbackAgreesWithQl) {
    // both routes through the public API must match on a Bouwkamp matrix
    const auto a = build_matrix(3, 0.5, 10.0, 30);
    const auto ql = eigen_tridiagonal(a);
    const auto bis = lowest_eigenvalues_bisection(a, 8);
    for (std::size_t i = 0; i < bis.size(); ++i)
        EXPECT_NEAR(bis[i], ql[i].value, 1e-11 * std::max(1.0, std::abs(ql[i].value)));
}

TEST(SolveMode, MatchesTableEntry) {
    const auto table = solve_modes(5, 1.0, 2.0);
    const auto single = solve_mode(2, 1, 1.0, 2.0);
    EXPECT_NEAR(single.chi, table.at(2, 1).chi, 1e-11 * single.chi);
    EXPECT_THROW(solve_mode(1, -1, 0.0, 1.0), ParameterError);
}
