#include "bpswf/errors.hpp"
#include "bpswf/jacobi.hpp"
#include "bpswf/quadrature.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace bpswf;
using bpswf::oracle::Rational;

TEST(JacobiParams, RejectsExponentsAtOrBelowMinusOne) {
    EXPECT_THROW(JacobiParams(-1.0, 0.0), ParameterError);
    EXPECT_THROW(JacobiParams(0.0, -1.5), ParameterError);
    EXPECT_NO_THROW(JacobiParams(-0.5, -0.5));
}

TEST(RecurrenceCoeffs, LegendreSeedValues) {
    const auto rc = recurrence_coeffs(0, JacobiParams(0.0, 0.0));
    EXPECT_EQ(rc.b, 0.0);
    EXPECT_NEAR(rc.a, 0.5773502691896258, 1e-15);
}

TEST(RecurrenceCoeffs, MatchesExactRationalOracle) {
    // (alpha, beta) pairs with rational values so the oracle is exact
    const std::vector<std::pair<Rational, Rational>> params = {
        {Rational(1), Rational(3, 2)}, {Rational(0), Rational(3, 2)}, {Rational(-1, 2), Rational(5, 2)},
        {Rational(5, 2), Rational(7, 2)}, {Rational(2), Rational(2)}};
    for (const auto &[al, be] : params) {
        const JacobiParams p(oracle::to_double(al), oracle::to_double(be));
        for (int k = 1; k <= 40; ++k) {
            const auto exact = oracle::exact_recurrence(k, al, be);
            const auto rc = recurrence_coeffs(k, p);
            EXPECT_NEAR(rc.a, std::sqrt(oracle::to_double(exact.a_squared)), 1e-15) << "k=" << k;
            EXPECT_NEAR(rc.b, oracle::to_double(exact.b), 1e-15) << "k=" << k;
            EXPECT_GT(rc.a, 0.0);
        }
    }
}

TEST(RecurrenceCoeffs, FrozenValuesAtKThree) {
    // exact: a_3^2 = 45760/192717, b_3 = 5/357 for (alpha, beta) = (1, 3/2)
    const auto rc = recurrence_coeffs(3, JacobiParams(1.0, 1.5));
    EXPECT_NEAR(rc.a, 0.48728494601920108, 1e-15);
    EXPECT_NEAR(rc.b, 0.014005602240896359, 1e-16);
    const double s = 2 * 3 + 1.0 + 1.5;
    EXPECT_NEAR(rc.b, (1.5 * 1.5 - 1.0) / (s * (s + 2.0)), 1e-16);
}

TEST(RecurrenceCoeffs, KZeroLimitWhenAlphaPlusBetaVanishes) {
    // (alpha + beta)(alpha + beta + 2) = 0 at k = 0: the cancelled form must stay finite
    const auto rc = recurrence_coeffs(0, JacobiParams(-0.5, 0.5));
    EXPECT_TRUE(std::isfinite(rc.a));
    EXPECT_NEAR(rc.b, 0.5, 1e-15);
    const auto cheb = recurrence_coeffs(0, JacobiParams(-0.5, -0.5));
    EXPECT_NEAR(cheb.a, std::sqrt(0.5), 1e-15);
}

TEST(RecurrenceCoeffs, NegativeIndexIsRejected) {
    EXPECT_THROW(recurrence_coeffs(-1, JacobiParams(0.0, 0.0)), ParameterError);
}

TEST(JacobiEval, ConstantAndOddCases) {
    const JacobiParams legendre(0.0, 0.0);
    for (double eta : {-1.0, -0.3, 0.0, 0.7, 1.0})
        EXPECT_NEAR(jacobi_eval(0, legendre, eta), std::sqrt(2.0), 1e-15);
    EXPECT_EQ(jacobi_eval(1, legendre, 0.0), 0.0);
}

TEST(JacobiEval, DomainError) {
    EXPECT_THROW(jacobi_eval(2, JacobiParams(0.0, 0.0), 1.0000001), DomainError);
    EXPECT_THROW(jacobi_eval(2, JacobiParams(0.0, 0.0), -1.5), DomainError);
    EXPECT_THROW(jacobi_derivative(2, JacobiParams(0.0, 0.0), 2.0), DomainError);
}

TEST(JacobiEval, SeedJ1AgreesWithRecurrenceFromJ0) {
    // J_1 from its closed form must equal (eta - b_0) J_0 / a_0
    for (const auto &p : {JacobiParams(0.0, 0.0), JacobiParams(1.0, 1.5), JacobiParams(-0.5, 3.5),
                          JacobiParams(2.5, -0.25)}) {
        const auto rc = recurrence_coeffs(0, p);
        for (double eta : {-0.9, -0.1, 0.4, 0.95}) {
            const double from_recurrence = (eta - rc.b) * jacobi_eval(0, p, eta) / rc.a;
            EXPECT_NEAR(jacobi_eval(1, p, eta), from_recurrence, 1e-13 * std::abs(from_recurrence) + 1e-14);
        }
    }
}

TEST(JacobiEval, GramMatrixUnderGaussJacobiQuadrature) {
    // weight (1+eta)^{3/2}: Gram = 2^{7/2} I for k, l <= 8
    const JacobiParams p(0.0, 1.5);
    const auto rule = gauss_jacobi(20, p);
    const double expected = std::exp2(3.5);
    for (int k = 0; k <= 8; ++k)
        for (int l = 0; l <= 8; ++l) {
            double g = 0.0;
            for (std::size_t i = 0; i < rule.size(); ++i)
                g += rule.weights[i] * jacobi_eval(k, p, rule.nodes[i]) * jacobi_eval(l, p, rule.nodes[i]);
            EXPECT_NEAR(g, k == l ? expected : 0.0, 1e-12 * expected) << k << "," << l;
        }
}

TEST(JacobiEval, GramPropertyAcrossParameters) {
    for (const auto &p : {JacobiParams(0.0, 0.0), JacobiParams(-0.5, -0.5), JacobiParams(1.0, 1.5),
                          JacobiParams(2.5, 0.5), JacobiParams(-0.5, 8.5), JacobiParams(3.0, 4.5)}) {
        const auto rule = gauss_jacobi(30, p);
        const double expected = gram_constant(p);
        std::vector<std::vector<double>> table(rule.size(), std::vector<double>(13));
        for (std::size_t i = 0; i < rule.size(); ++i)
            jacobi_table(12, p, rule.nodes[i], table[i]);
        for (int k = 0; k <= 12; ++k)
            for (int l = 0; l <= 12; ++l) {
                double g = 0.0;
                for (std::size_t i = 0; i < rule.size(); ++i)
                    g += rule.weights[i] * table[i][static_cast<std::size_t>(k)] * table[i][static_cast<std::size_t>(l)];
                EXPECT_LE(std::abs(g - (k == l ? expected : 0.0)), 1e-10 * expected)
                    << "alpha=" << p.alpha() << " beta=" << p.beta() << " k=" << k << " l=" << l;
            }
    }
}

TEST(JacobiEval, RecurrenceConsistencyAtRandomPoints) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const JacobiParams p(1.0, 2.5);
    std::vector<double> v(22);
    for (int trial = 0; trial < 100; ++trial) {
        const double eta = u(rng);
        jacobi_table(21, p, eta, v);
        for (int k = 1; k <= 20; ++k) {
            const auto rc = recurrence_coeffs(k, p);
            const auto prev = recurrence_coeffs(k - 1, p);
            const auto kk = static_cast<std::size_t>(k);
            const double defect = eta * v[kk] - (rc.a * v[kk + 1] + rc.b * v[kk] + prev.a * v[kk - 1]);
            EXPECT_LE(std::abs(defect), 1e-12);
        }
    }
}

TEST(JacobiDerivative, ConstantAndLinear) {
    EXPECT_EQ(jacobi_derivative(0, JacobiParams(1.0, 2.0), 0.3), 0.0);
    // J_1^{(0,0)} = eta / h_1 with h_1 = 1/sqrt(6)
    for (double eta : {-0.8, 0.0, 0.5})
        EXPECT_NEAR(jacobi_derivative(1, JacobiParams(0.0, 0.0), eta), std::sqrt(6.0), 1e-14);
}

TEST(JacobiDerivative, MatchesCentralDifferences) {
    const JacobiParams p(1.0, 2.5);
    const auto f = [&](double e) { return jacobi_eval(5, p, e); };
    const double fd = oracle::central_difference(f, 0.3, 1e-5);
    const double d = jacobi_derivative(5, p, 0.3);
    EXPECT_NEAR(d, fd, 1e-8 * std::abs(d));

    // second derivative against differences of the analytic first derivative
    for (double eta : {-0.7, 0.1, 0.6}) {
        const auto jd = jacobi_with_derivatives(7, p, eta);
        const double fd2 = oracle::central_difference([&](double e) { return jacobi_derivative(7, p, e); }, eta, 1e-5);
        EXPECT_NEAR(jd.d2, fd2, 1e-7 * std::max(1.0, std::abs(jd.d2)));
    }
}

TEST(JacobiDerivative, SatisfiesJacobiDifferentialEquation) {
    // (1-eta^2) J'' + (beta - alpha - (alpha+beta+2) eta) J' + k(k+alpha+beta+1) J = 0
    const JacobiParams p(0.5, 1.5);
    for (int k : {2, 6, 11})
        for (double eta : {-0.6, 0.2, 0.9}) {
            const auto j = jacobi_with_derivatives(k, p, eta);
            const double lhs = (1 - eta * eta) * j.d2 + (1.5 - 0.5 - 4.0 * eta) * j.d1 + k * (k + 3.0) * j.value;
            EXPECT_NEAR(lhs, 0.0, 1e-10 * (std::abs(k * (k + 3.0) * j.value) + 1.0));
        }
}
