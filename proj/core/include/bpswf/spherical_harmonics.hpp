#ifndef BPSWF_SPHERICAL_HARMONICS_HPP
#define BPSWF_SPHERICAL_HARMONICS_HPP

#include "bpswf/vec3.hpp"

namespace bpswf {

/// Degree n and mode index ell of a real spherical harmonic, 1 <= ell <= 2n+1.
/// ell = 1 is zonal, ell = 2m carries cos(m phi), ell = 2m+1 carries sin(m phi).
class SphericalIndex {
  public:
    SphericalIndex(int n, int ell);

    int n() const { return n_; }
    int ell() const { return ell_; }
    /// Azimuthal order m = floor(ell / 2).
    int order() const { return ell_ / 2; }
    bool is_zonal() const { return ell_ == 1; }
    bool is_cosine() const { return ell_ > 1 && ell_ % 2 == 0; }

    friend bool operator==(const SphericalIndex &, const SphericalIndex &) = default;

  private:
    int n_;
    int ell_;
};

struct SphericalDirection {
    double theta = 0.0;
    double phi = 0.0;

    /// (sin t cos p, sin t sin p, cos t)
    Vec3 unit() const;
    Vec3 theta_hat() const;
    Vec3 phi_hat() const;

    /// Direction of a nonzero point; phi is mapped into [0, 2 pi).
    static SphericalDirection from_cartesian(const Vec3 &x);
};

double spherical_harmonic(const SphericalIndex &idx, const SphericalDirection &dir);

struct AngularGradient {
    double d_theta = 0.0;
    double d_phi = 0.0;
};

AngularGradient spherical_harmonic_grad(const SphericalIndex &idx, const SphericalDirection &dir);

/// (dY/dtheta, (1/sin theta) dY/dphi); the second entry is formed without
/// dividing by sin theta, so it stays accurate next to the axis.
struct SurfaceGradient {
    double d_theta = 0.0;
    double d_phi_over_sin = 0.0;
};

SurfaceGradient surface_gradient(const SphericalIndex &idx, const SphericalDirection &dir);

enum class VshFamily { radial = 1, gradient = 2, toroidal = 3 };

/// Y^{n,1} = x Y, Y^{n,2} = grad_0 Y, Y^{n,3} = x cross grad_0 Y in Cartesian components.
/// Families 2 and 3 need n >= 1 and throw PoleError exactly on the polar axis.
Vec3 vector_spherical_harmonic(const SphericalIndex &idx, VshFamily family, const SphericalDirection &dir);

} // namespace bpswf

#endif
