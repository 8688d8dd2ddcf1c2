#include "bpswf/spherical_harmonics.hpp"

#include "bpswf/errors.hpp"
#include "bpswf/jacobi.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bpswf {

SphericalIndex::SphericalIndex(int n, int ell) : n_(n), ell_(ell) {
    if (n < 0)
        throw IndexError("spherical harmonic degree must be nonnegative (got " + std::to_string(n) + ")");
    if (ell < 1 || ell > 2 * n + 1)
        throw IndexError("mode index ell=" + std::to_string(ell) + " outside 1.." + std::to_string(2 * n + 1));
}

Vec3 SphericalDirection::unit() const {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

Vec3 SphericalDirection::theta_hat() const {
    const double ct = std::cos(theta);
    return {ct * std::cos(phi), ct * std::sin(phi), -std::sin(theta)};
}

Vec3 SphericalDirection::phi_hat() const { return {-std::sin(phi), std::cos(phi), 0.0}; }

SphericalDirection SphericalDirection::from_cartesian(const Vec3 &x) {
    const double rho = std::hypot(x.x, x.y);
    if (rho == 0.0 && x.z == 0.0)
        throw DomainError("direction of the zero vector is undefined");
    double phi = std::atan2(x.y, x.x);
    if (phi < 0.0)
        phi += 2.0 * std::numbers::pi;
    if (phi >= 2.0 * std::numbers::pi)
        phi = 0.0;
    return {std::atan2(rho, x.z), phi};
}

namespace {

struct HarmonicParts {
    double value;
    double d_theta;
    double d_phi;
    double d_phi_over_sin;
};

void check_direction(const SphericalDirection &dir) {
    if (!(dir.theta >= 0.0 && dir.theta <= std::numbers::pi) || !std::isfinite(dir.phi))
        throw DomainError("polar angle must lie in [0, pi]");
}

HarmonicParts evaluate(const SphericalIndex &idx, const SphericalDirection &dir) {
    check_direction(dir);
    const int n = idx.n();
    const int m = idx.order();
    const double t = std::cos(dir.theta);
    const double s = std::sin(dir.theta);

    if (idx.is_zonal()) {
        const double scale = 1.0 / std::sqrt(8.0 * std::numbers::pi);
        const auto j = jacobi_with_derivatives(n, JacobiParams(0.0, 0.0), t);
        return {scale * j.value, -scale * s * j.d1, 0.0, 0.0};
    }

    const double scale = 1.0 / (std::exp2(m + 1) * std::sqrt(std::numbers::pi));
    const auto j = jacobi_with_derivatives(n - m, JacobiParams(m, m), t);
    const double s_m1 = std::pow(s, m - 1);
    const double s_m = s_m1 * s;
    const double profile = scale * s_m * j.value;
    const double profile_dtheta = scale * (m * s_m1 * t * j.value - s_m * s * j.d1);
    const double profile_over_sin = scale * s_m1 * j.value;

    const double cm = std::cos(m * dir.phi);
    const double sm = std::sin(m * dir.phi);
    if (idx.is_cosine())
        return {profile * cm, profile_dtheta * cm, -m * profile * sm, -m * profile_over_sin * sm};
    return {profile * sm, profile_dtheta * sm, m * profile * cm, m * profile_over_sin * cm};
}

} // namespace

double spherical_harmonic(const SphericalIndex &idx, const SphericalDirection &dir) {
    return evaluate(idx, dir).value;
}

AngularGradient spherical_harmonic_grad(const SphericalIndex &idx, const SphericalDirection &dir) {
    const auto h = evaluate(idx, dir);
    return {h.d_theta, h.d_phi};
}

SurfaceGradient surface_gradient(const SphericalIndex &idx, const SphericalDirection &dir) {
    const auto h = evaluate(idx, dir);
    return {h.d_theta, h.d_phi_over_sin};
}

Vec3 vector_spherical_harmonic(const SphericalIndex &idx, VshFamily family, const SphericalDirection &dir) {
    if (family == VshFamily::radial)
        return dir.unit() * spherical_harmonic(idx, dir);
    if (idx.n() < 1)
        throw IndexError("vector spherical harmonics of families 2 and 3 require n >= 1");
    check_direction(dir);
    if (dir.theta == 0.0 || dir.theta == std::numbers::pi || std::sin(dir.theta) == 0.0)
        throw PoleError("tangential vector spherical harmonic requested on the polar axis");
    const auto g = surface_gradient(idx, dir);
    if (family == VshFamily::gradient)
        return dir.theta_hat() * g.d_theta + dir.phi_hat() * g.d_phi_over_sin;
    return dir.phi_hat() * g.d_theta - dir.theta_hat() * g.d_phi_over_sin;
}

} // namespace bpswf
