#ifndef BPSWF_QUADRATURE_HPP
#define BPSWF_QUADRATURE_HPP

#include "bpswf/jacobi.hpp"
#include "bpswf/spherical_harmonics.hpp"
#include "bpswf/vec3.hpp"

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

namespace bpswf {

struct WeightKind {
    enum class Family { legendre, jacobi };
    Family family = Family::legendre;
    double alpha = 0.0;
    double beta = 0.0;
};

struct QuadratureRule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
    WeightKind weight_kind;

    std::size_t size() const { return nodes.size(); }
};

/// m-point Gauss-Legendre rule on (-1, 1), exact to degree 2m-1.
QuadratureRule1D gauss_legendre(int m);

/// m-point Gauss-Jacobi rule for (1-eta)^alpha (1+eta)^beta, built by
/// Golub-Welsch from the normalized recurrence coefficients.
QuadratureRule1D gauss_jacobi(int m, const JacobiParams &p);

/// Tensor rule for integrals over the unit ball against (1-|x|^2)^alpha.
/// Node order is radial-major, then polar, then azimuthal.
struct BallQuadratureRule {
    double alpha = 0.0;
    int m_r = 0;
    int m_theta = 0;
    int m_phi = 0;
    std::vector<Vec3> points;
    std::vector<double> weights;

    std::size_t size() const { return points.size(); }
};

/// Radial nodes come from Gauss-Jacobi in eta = 2r^2 - 1 with weight
/// (1-eta)^alpha (1+eta)^(1/2), which absorbs r^2 dr; polar nodes are
/// Gauss-Legendre in cos(theta); azimuth is the m_phi-point trapezoid rule.
BallQuadratureRule ball_rule(double alpha, int m_r, int m_theta, int m_phi);

/// Exact value of the integral of (1-|x|^2)^alpha over the unit ball.
double ball_weight_mass(double alpha);

/// Tensor rule on the unit sphere for integrals against surface measure.
struct SphereQuadratureRule {
    int m_theta = 0;
    int m_phi = 0;
    std::vector<Vec3> points;
    std::vector<SphericalDirection> directions;
    std::vector<double> weights;

    std::size_t size() const { return points.size(); }
};

SphereQuadratureRule sphere_rule(int m_theta, int m_phi);

/// Sum of w_i f(x_i) in node order. f may return any type supporting
/// `value * double` and `+=` (double, Vec3, std::complex<double>, ...).
template <class Rule, class F>
auto integrate(const Rule &rule, F &&f) {
    using Value = std::decay_t<decltype(f(rule.points[0]))>;
    Value acc{};
    for (std::size_t i = 0; i < rule.points.size(); ++i)
        acc += f(rule.points[i]) * rule.weights[i];
    return acc;
}

} // namespace bpswf

#endif
