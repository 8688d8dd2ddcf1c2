// Independent reference computations used only by the test suites.
#ifndef BPSWF_TEST_ORACLES_HPP
#define BPSWF_TEST_ORACLES_HPP

#include "bpswf/spherical_harmonics.hpp"
#include "bpswf/vec3.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace bpswf::oracle {

using Rational = boost::multiprecision::cpp_rational;

/// Exact a_k^2 and b_k of the normalized Jacobi recurrence for rational exponents.
struct ExactRecurrence {
    Rational a_squared;
    Rational b;
};

inline ExactRecurrence exact_recurrence(int k, const Rational &alpha, const Rational &beta) {
    const Rational kk = k;
    const Rational s = 2 * kk + alpha + beta;
    ExactRecurrence out;
    out.a_squared = 4 * (kk + 1) * (kk + alpha + 1) * (kk + beta + 1) * (kk + alpha + beta + 1) /
                    ((s + 1) * (s + 2) * (s + 2) * (s + 3));
    out.b = (beta * beta - alpha * alpha) / (s * (s + 2));
    return out;
}

inline double to_double(const Rational &q) { return q.convert_to<double>(); }

/// Cyclic Jacobi-rotation eigenvalues of a dense symmetric matrix, ascending.
inline std::vector<double> dense_symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += a[p][q] * a[p][q];
        if (off < 1e-30)
            break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0)
                    continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i)
        eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

inline double central_difference(const std::function<double(double)> &f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Laplace-Beltrami operator on the unit sphere in (theta, phi) by central differences.
inline double laplace_beltrami_spherical_fd(const std::function<double(double, double)> &f, double theta, double phi,
                                            double h) {
    const double s = std::sin(theta);
    const double f0 = f(theta, phi);
    const double d_theta = (f(theta + h, phi) - f(theta - h, phi)) / (2.0 * h);
    const double d2_theta = (f(theta + h, phi) - 2.0 * f0 + f(theta - h, phi)) / (h * h);
    const double d2_phi = (f(theta, phi + h) - 2.0 * f0 + f(theta, phi - h)) / (h * h);
    return d2_theta + std::cos(theta) / s * d_theta + d2_phi / (s * s);
}

/// Uniform random point of the ball of radius `radius`, rejecting the polar axis neighbourhood.
inline Vec3 random_ball_point(std::mt19937_64 &rng, double radius, double axis_clearance = 1e-3) {
    std::uniform_real_distribution<double> u(-radius, radius);
    for (;;) {
        const Vec3 x{u(rng), u(rng), u(rng)};
        if (norm(x) < radius && std::hypot(x.x, x.y) > axis_clearance)
            return x;
    }
}

} // namespace bpswf::oracle

#endif
