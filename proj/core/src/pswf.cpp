#include "bpswf/pswf.hpp"

#include "bpswf/errors.hpp"
#include "bpswf/jacobi.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace bpswf {

void ModeIndex::validate(ModeKind kind) const {
    if (!(alpha > -1.0) || !std::isfinite(alpha))
        throw ParameterError("alpha must exceed -1");
    if (!(c >= 0.0) || !std::isfinite(c))
        throw ParameterError("bandwidth c must be nonnegative");
    if (k < 0)
        throw ParameterError("radial index k must be nonnegative");
    if (kind == ModeKind::vectorial && n < 1)
        throw ParameterError("divergence-free modes require n >= 1");
    SphericalIndex(n, ell);
}

ScalarPswf::ScalarPswf(const ModeIndex &mode)
    : ScalarPswf(mode, solve_mode(mode.n, mode.k, mode.alpha, mode.c, ModeKind::scalar)) {}

ScalarPswf::ScalarPswf(const ModeIndex &mode, RadialExpansion radial)
    : mode_(mode), index_((mode.validate(ModeKind::scalar), mode.spherical())), radial_(std::move(radial)) {
    if (radial_.n != mode.n || radial_.k != mode.k || radial_.alpha != mode.alpha || radial_.c != mode.c)
        throw ConfigurationError("radial expansion does not belong to the requested mode");
    if (radial_.beta.empty())
        throw ConfigurationError("radial expansion has no coefficients");
}

JacobiValue ScalarPswf::radial_factor(double eta) const {
    const int K = radial_.truncation();
    const auto size = radial_.beta.size();
    std::vector<double> v(size), d1(size), d2(size);
    jacobi_table(K, JacobiParams(mode_.alpha, mode_.n + 0.5), eta, v, d1, d2);
    JacobiValue f;
    for (std::size_t j = 0; j < size; ++j) {
        f.value += radial_.beta[j] * v[j];
        f.d1 += radial_.beta[j] * d1[j];
        f.d2 += radial_.beta[j] * d2[j];
    }
    return f;
}

RadialProfile ScalarPswf::radial_profile(double r) const {
    if (!(r >= 0.0 && r <= 1.0))
        throw DomainError("radius must lie in [0, 1]");
    const int n = mode_.n;
    const auto f = radial_factor(std::min(1.0, 2.0 * r * r - 1.0));
    const double f_r = 4.0 * r * f.d1;
    const double f_rr = 4.0 * f.d1 + 16.0 * r * r * f.d2;
    const double rn = std::pow(r, n);
    RadialProfile g;
    g.value = f.value * rn;
    if (r == 0.0) {
        // only the r^0 and r^1, r^2 coefficients survive at the origin
        g.d1 = n == 1 ? f.value : 0.0;
        g.d2 = n == 0 ? f_rr : (n == 2 ? 2.0 * f.value : 0.0);
        return g;
    }
    const double rn1 = n >= 1 ? std::pow(r, n - 1) : 0.0;
    const double rn2 = n >= 2 ? std::pow(r, n - 2) : 0.0;
    g.d1 = f_r * rn + n * f.value * rn1;
    g.d2 = f_rr * rn + 2.0 * n * f_r * rn1 + n * (n - 1.0) * f.value * rn2;
    return g;
}

namespace {

double radial_value(const ScalarPswf &s, double eta) {
    const auto &beta = s.radial().beta;
    std::vector<double> v(beta.size());
    jacobi_table(s.radial().truncation(), JacobiParams(s.mode().alpha, s.mode().n + 0.5), eta, v);
    double acc = 0.0;
    for (std::size_t j = 0; j < beta.size(); ++j)
        acc += beta[j] * v[j];
    return acc;
}

double checked_radius(const Vec3 &x) {
    const double r = norm(x);
    if (!(r <= 1.0))
        throw DomainError("evaluation point lies outside the unit ball (|x| = " + std::to_string(r) + ")");
    return r;
}

double eta_of(double r) { return std::min(1.0, 2.0 * r * r - 1.0); }

} // namespace

VectorPswf::VectorPswf(ScalarPswf scalar) : scalar_(std::move(scalar)) {
    scalar_.mode().validate(ModeKind::vectorial);
}

VectorPswf::VectorPswf(const ModeIndex &mode)
    : VectorPswf(ScalarPswf(mode, (mode.validate(ModeKind::vectorial),
                                   solve_mode(mode.n, mode.k, mode.alpha, mode.c, ModeKind::vectorial)))) {}

double scalar_eval(const ScalarPswf &s, const Vec3 &x) {
    const double r = checked_radius(x);
    const int n = s.mode().n;
    const double f = radial_value(s, eta_of(r));
    if (r == 0.0)
        return n == 0 ? f * spherical_harmonic(s.mode().spherical(), {0.0, 0.0}) : 0.0;
    return f * std::pow(r, n) * spherical_harmonic(s.mode().spherical(), SphericalDirection::from_cartesian(x));
}

Vec3 vector_eval(const VectorPswf &v, const Vec3 &x) {
    const double r = checked_radius(x);
    if (r == 0.0)
        return {};
    if (x.x == 0.0 && x.y == 0.0)
        throw PoleError("vector PSWF requested on the polar axis");
    const auto &s = v.scalar();
    const auto dir = SphericalDirection::from_cartesian(x);
    const auto g = surface_gradient(s.mode().spherical(), dir);
    const double scale = radial_value(s, eta_of(r)) * std::pow(r, s.mode().n);
    return (dir.phi_hat() * g.d_theta - dir.theta_hat() * g.d_phi_over_sin) * scale;
}

double apply_L_radial(const ScalarPswf &s, double r) {
    if (!(r > 0.0 && r < 1.0))
        throw DomainError("apply_L_radial needs 0 < r < 1");
    const auto g = s.radial_profile(r);
    const double alpha = s.mode().alpha;
    const double c = s.mode().c;
    const double n = s.mode().n;
    return -(1.0 - r * r) * g.d2 - (2.0 / r) * g.d1 + (2.0 * alpha + 4.0) * r * g.d1 +
           n * (n + 1.0) / (r * r) * g.value + c * c * r * r * g.value;
}

namespace {

void check_stencil(const Vec3 &x, double reach) {
    if (!(reach > 0.0))
        throw DomainError("finite-difference step must be positive");
    if (!(norm(x) + reach < 1.0))
        throw DomainError("finite-difference stencil leaves the unit ball");
}

// d/dx_i of every component
Vec3 partial(const VectorField &f, const Vec3 &x, int i, double h) {
    const Vec3 e = unit_vector(i) * h;
    return (f(x + e) - f(x - e)) / (2.0 * h);
}

Vec3 second_partial(const VectorField &f, const Vec3 &x, const Vec3 &fx, int i, int j, double h) {
    if (i == j) {
        const Vec3 e = unit_vector(i) * h;
        return (f(x + e) - fx * 2.0 + f(x - e)) / (h * h);
    }
    const Vec3 ei = unit_vector(i) * h;
    const Vec3 ej = unit_vector(j) * h;
    return (f(x + ei + ej) - f(x + ei - ej) - f(x - ei + ej) + f(x - ei - ej)) / (4.0 * h * h);
}

Vec3 curl_fd(const VectorField &f, const Vec3 &x, double h) {
    const Vec3 dx = partial(f, x, 0, h);
    const Vec3 dy = partial(f, x, 1, h);
    const Vec3 dz = partial(f, x, 2, h);
    return {dy.z - dz.y, dz.x - dx.z, dx.y - dy.x};
}

struct SecondOrderTerms {
    Vec3 value;
    Vec3 laplacian;
    Vec3 radial_first;  // (x.grad) f
    Vec3 radial_second; // sum_ij x_i x_j d_ij f
};

SecondOrderTerms second_order_terms(const VectorField &f, const Vec3 &x, double h) {
    SecondOrderTerms t;
    t.value = f(x);
    for (int i = 0; i < 3; ++i) {
        t.radial_first += partial(f, x, i, h) * x[i];
        for (int j = i; j < 3; ++j) {
            const Vec3 dij = second_partial(f, x, t.value, i, j, h);
            if (i == j) {
                t.laplacian += dij;
                t.radial_second += dij * (x[i] * x[i]);
            } else {
                t.radial_second += dij * (2.0 * x[i] * x[j]);
            }
        }
    }
    return t;
}

VectorField as_field(const VectorPswf &v) {
    return [&v](const Vec3 &p) { return vector_eval(v, p); };
}

} // namespace

double divergence_fd(const VectorField &field, const Vec3 &x, double h) {
    check_stencil(x, h);
    return partial(field, x, 0, h).x + partial(field, x, 1, h).y + partial(field, x, 2, h).z;
}

double divergence_fd(const VectorPswf &v, const Vec3 &x, double h) { return divergence_fd(as_field(v), x, h); }

Vec3 laplace_beltrami_fd(const VectorField &field, const Vec3 &x, double h) {
    check_stencil(x, 2.0 * h);
    const auto t = second_order_terms(field, x, h);
    // |x|^2 Delta - (x.grad)^2 - (x.grad) with (x.grad)^2 = sum x_i x_j d_ij + (x.grad)
    return t.laplacian * dot(x, x) - t.radial_second - t.radial_first * 2.0;
}

Vec3 apply_L_fd(const VectorField &field, const Vec3 &x, double h, double alpha, double c) {
    check_stencil(x, 2.0 * h);
    const auto t = second_order_terms(field, x, h);
    return -t.laplacian + t.radial_second + t.radial_first * (2.0 * alpha + 4.0) + t.value * (c * c * dot(x, x));
}

Vec3 apply_L_fd(const VectorPswf &v, const Vec3 &x, double h) {
    return apply_L_fd(as_field(v), x, h, v.mode().alpha, v.mode().c);
}

Vec3 apply_D_fd(const VectorField &field, const Vec3 &x, double h, double alpha, double c) {
    check_stencil(x, 2.0 * h);
    const VectorField weighted_curl = [&](const Vec3 &p) {
        return curl_fd(field, p, h) * std::pow(1.0 - dot(p, p), alpha + 1.0);
    };
    const Vec3 curl_part = curl_fd(weighted_curl, x, h) * std::pow(1.0 - dot(x, x), -alpha);
    const auto t = second_order_terms(field, x, h);
    const Vec3 lb = t.laplacian * dot(x, x) - t.radial_second - t.radial_first * 2.0;
    return curl_part - lb + t.value * (c * c * dot(x, x));
}

Vec3 apply_D_fd(const VectorPswf &v, const Vec3 &x, double h) {
    return apply_D_fd(as_field(v), x, h, v.mode().alpha, v.mode().c);
}

} // namespace bpswf
