#ifndef BPSWF_PSWF_HPP
#define BPSWF_PSWF_HPP

#include "bpswf/bouwkamp.hpp"
#include "bpswf/jacobi.hpp"
#include "bpswf/spherical_harmonics.hpp"
#include "bpswf/vec3.hpp"

#include <functional>

namespace bpswf {

/// (alpha, c, n, k, ell) identifying one ball PSWF.
struct ModeIndex {
    double alpha = 0.0;
    double c = 0.0;
    int n = 1;
    int k = 0;
    int ell = 1;

    /// Throws ParameterError / IndexError when the index is not admissible for `kind`.
    void validate(ModeKind kind) const;
    SphericalIndex spherical() const { return {n, ell}; }

    friend bool operator==(const ModeIndex &, const ModeIndex &) = default;
};

/// g(r) = f(2r^2 - 1) r^n and its first two r-derivatives, where
/// f = sum_j beta_j J_j^{(alpha, n+1/2)}.
struct RadialProfile {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

class ScalarPswf {
  public:
    /// Solves the Bouwkamp system for the mode (truncation with N = n + 2k).
    explicit ScalarPswf(const ModeIndex &mode);
    /// Uses precomputed radial coefficients; (alpha, c, n, k) must match.
    ScalarPswf(const ModeIndex &mode, RadialExpansion radial);

    const ModeIndex &mode() const { return mode_; }
    const RadialExpansion &radial() const { return radial_; }
    double chi() const { return radial_.chi; }

    /// f(eta) = sum_j beta_j J_j(eta) with derivatives in eta.
    JacobiValue radial_factor(double eta) const;
    RadialProfile radial_profile(double r) const;

  private:
    ModeIndex mode_;
    SphericalIndex index_;
    RadialExpansion radial_;
};

class VectorPswf {
  public:
    /// Requires n >= 1.
    explicit VectorPswf(ScalarPswf scalar);
    explicit VectorPswf(const ModeIndex &mode);

    const ScalarPswf &scalar() const { return scalar_; }
    const ModeIndex &mode() const { return scalar_.mode(); }
    double chi() const { return scalar_.chi(); }

  private:
    ScalarPswf scalar_;
};

using VectorField = std::function<Vec3(const Vec3 &)>;

/// f(2r^2 - 1) r^n Y(x^); throws DomainError for |x| > 1.
double scalar_eval(const ScalarPswf &s, const Vec3 &x);

/// (x cross grad) applied to scalar_eval, i.e. f(2r^2 - 1) r^n Y^{n,3}(x^).
/// Returns zero at the origin; throws PoleError elsewhere on the polar axis.
Vec3 vector_eval(const VectorPswf &v, const Vec3 &x);

/// Radial form of the first-kind operator applied to g(r):
///   -(1-r^2) g'' - (2/r) g' + (2 alpha + 4) r g' + n(n+1)/r^2 g + c^2 r^2 g.
/// Equals chi * g(r) for an exact mode. Requires 0 < r < 1.
double apply_L_radial(const ScalarPswf &s, double r);

/// Central-difference divergence. Requires |x| + h < 1.
double divergence_fd(const VectorField &field, const Vec3 &x, double h);
double divergence_fd(const VectorPswf &v, const Vec3 &x, double h);

/// Componentwise first-kind operator -Delta + (x.grad)(x.grad + 2 alpha + 3) + c^2 |x|^2
/// by central differences. Requires |x| + 2h < 1.
Vec3 apply_L_fd(const VectorField &field, const Vec3 &x, double h, double alpha, double c);
Vec3 apply_L_fd(const VectorPswf &v, const Vec3 &x, double h);

/// Second-kind operator
///   (1-|x|^2)^(-alpha) curl (1-|x|^2)^(alpha+1) curl - Delta_0 + c^2 |x|^2
/// by nested central differences (stencil radius 2h). Requires |x| + 2h < 1.
Vec3 apply_D_fd(const VectorField &field, const Vec3 &x, double h, double alpha, double c);
Vec3 apply_D_fd(const VectorPswf &v, const Vec3 &x, double h);

/// Componentwise Laplace-Beltrami operator |x|^2 Delta - (x.grad)(x.grad + 1)
/// by central differences.
Vec3 laplace_beltrami_fd(const VectorField &field, const Vec3 &x, double h);

} // namespace bpswf

#endif
