#include "bpswf/quadrature.hpp"

#include "bpswf/errors.hpp"
#include "bpswf/tridiagonal.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bpswf {

namespace {

void check_count(int m, const char *what) {
    if (m < 1)
        throw ParameterError(std::string(what) + " must be at least 1 (got " + std::to_string(m) + ")");
}

} // namespace

QuadratureRule1D gauss_jacobi(int m, const JacobiParams &p) {
    check_count(m, "quadrature point count");
    const auto n = static_cast<std::size_t>(m);
    std::vector<double> diag(n);
    std::vector<double> off(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        const auto rc = recurrence_coeffs(static_cast<int>(k), p);
        diag[k] = rc.b;
        if (k + 1 < n)
            off[k] = rc.a;
    }
    const auto pairs = eigen_tridiagonal(TridiagonalMatrix(std::move(diag), std::move(off)));
    const double mass = p.weight_mass();

    QuadratureRule1D rule;
    rule.weight_kind = {WeightKind::Family::jacobi, p.alpha(), p.beta()};
    rule.nodes.reserve(n);
    rule.weights.reserve(n);
    for (const auto &pair : pairs) {
        rule.nodes.push_back(pair.value);
        rule.weights.push_back(mass * pair.vector[0] * pair.vector[0]);
    }
    return rule;
}

QuadratureRule1D gauss_legendre(int m) {
    auto rule = gauss_jacobi(m, JacobiParams(0.0, 0.0));
    rule.weight_kind = {};
    return rule;
}

double ball_weight_mass(double alpha) {
    if (!(alpha > -1.0))
        throw ParameterError("ball weight exponent must exceed -1");
    // 4 pi int_0^1 (1-r^2)^alpha r^2 dr = 2 pi B(alpha+1, 3/2)
    return 2.0 * std::numbers::pi *
           std::exp(std::lgamma(alpha + 1.0) + std::lgamma(1.5) - std::lgamma(alpha + 2.5));
}

BallQuadratureRule ball_rule(double alpha, int m_r, int m_theta, int m_phi) {
    if (!(alpha > -1.0))
        throw ParameterError("ball weight exponent must exceed -1");
    check_count(m_r, "m_r");
    check_count(m_theta, "m_theta");
    check_count(m_phi, "m_phi");

    const auto radial = gauss_jacobi(m_r, JacobiParams(alpha, 0.5));
    const auto polar = gauss_legendre(m_theta);
    const double radial_scale = std::exp2(-alpha - 2.5);
    const double dphi = 2.0 * std::numbers::pi / m_phi;

    BallQuadratureRule rule;
    rule.alpha = alpha;
    rule.m_r = m_r;
    rule.m_theta = m_theta;
    rule.m_phi = m_phi;
    const auto total = radial.size() * polar.size() * static_cast<std::size_t>(m_phi);
    rule.points.reserve(total);
    rule.weights.reserve(total);
    for (std::size_t i = 0; i < radial.size(); ++i) {
        const double r = std::sqrt(0.5 * (1.0 + radial.nodes[i]));
        const double wr = radial.weights[i] * radial_scale;
        for (std::size_t j = 0; j < polar.size(); ++j) {
            const double ct = polar.nodes[j];
            const double st = std::sqrt((1.0 - ct) * (1.0 + ct));
            const double wrt = wr * polar.weights[j] * dphi;
            for (int l = 0; l < m_phi; ++l) {
                const double phi = dphi * l;
                rule.points.push_back({r * st * std::cos(phi), r * st * std::sin(phi), r * ct});
                rule.weights.push_back(wrt);
            }
        }
    }
    return rule;
}

SphereQuadratureRule sphere_rule(int m_theta, int m_phi) {
    check_count(m_theta, "m_theta");
    check_count(m_phi, "m_phi");
    const auto polar = gauss_legendre(m_theta);
    const double dphi = 2.0 * std::numbers::pi / m_phi;

    SphereQuadratureRule rule;
    rule.m_theta = m_theta;
    rule.m_phi = m_phi;
    for (std::size_t j = 0; j < polar.size(); ++j) {
        const double theta = std::acos(polar.nodes[j]);
        for (int l = 0; l < m_phi; ++l) {
            const SphericalDirection dir{theta, dphi * l};
            rule.directions.push_back(dir);
            rule.points.push_back(dir.unit());
            rule.weights.push_back(polar.weights[j] * dphi);
        }
    }
    return rule;
}

} // namespace bpswf
