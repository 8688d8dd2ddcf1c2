#ifndef BPSWF_VERIFICATION_HPP
#define BPSWF_VERIFICATION_HPP

#include "bpswf/pswf.hpp"
#include "bpswf/quadrature.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace bpswf {

using Complex = std::complex<double>;
using ComplexVec3 = std::array<Complex, 3>;

/// Kernel exp(sign * i c <x, tau>): forward uses -1, its adjoint +1.
enum class KernelSign { forward = -1, adjoint = 1 };

using ScalarField = std::function<double(const Vec3 &)>;

/// Quadrature value of int_B exp(sign i c <x,tau>) field(tau) (1-|tau|^2)^alpha dtau.
/// Throws ConfigurationError when the rule was built for a different alpha.
Complex finite_fourier_transform(const ScalarField &field, const Vec3 &x, const BallQuadratureRule &rule, double c,
                                 double alpha, KernelSign sign = KernelSign::forward);
ComplexVec3 finite_fourier_transform(const VectorField &field, const Vec3 &x, const BallQuadratureRule &rule,
                                     double c, double alpha, KernelSign sign = KernelSign::forward);

/// Transform of a field already sampled at the rule nodes; reused across many x.
class SampledTransform {
  public:
    SampledTransform(const BallQuadratureRule &rule, std::vector<Vec3> samples, double c, KernelSign sign);
    SampledTransform(const BallQuadratureRule &rule, std::vector<ComplexVec3> samples, double c, KernelSign sign);

    ComplexVec3 operator()(const Vec3 &x) const;

  private:
    const BallQuadratureRule *rule_;
    std::vector<ComplexVec3> samples_;
    double c_;
    double sign_;
};

/// Ratio estimate of F_c[psi] = (-i)^(n+2k) lambda psi at the given points.
struct LambdaEstimate {
    double lambda = 0.0;
    /// max relative spread |rho_i - rho_med| / |rho_med|
    double dispersion = 0.0;
    /// max |arg(rho_i / (-i)^(n+2k))| in radians
    double phase_error = 0.0;
    /// n + 2k mod 4
    int phase_index = 0;
    std::vector<Complex> ratios;
};

LambdaEstimate estimate_lambda(const VectorPswf &v, const BallQuadratureRule &rule,
                               const std::vector<Vec3> &sample_points);

struct MuEstimate {
    double mu = 0.0;
    double dispersion = 0.0;
    /// max |Im rho_i| / mu; the double transform is real for an exact mode
    double imaginary_part = 0.0;
};

/// Applies the forward transform at every node, then the adjoint at the sample
/// points, and reports Q[psi] / psi. Cost grows with the square of the rule size.
MuEstimate mu_via_double_transform(const VectorPswf &v, const BallQuadratureRule &rule,
                                   const std::vector<Vec3> &sample_points);

/// `count` Halton points of the ball (|x| <= 0.95, off-axis) where |psi| exceeds
/// the 30th percentile of a pilot set. Deterministic in `seed`.
std::vector<Vec3> ratio_sample_points(const VectorPswf &v, std::size_t count, std::uint64_t seed = 0);

using DenseMatrix = std::vector<std::vector<double>>;

/// G_ij = int_B psi_i psi_j (1-|x|^2)^alpha dx. All modes and the rule must share (alpha, c).
DenseMatrix gram_scalar(const std::vector<ScalarPswf> &modes, const BallQuadratureRule &rule);
DenseMatrix gram_vector(const std::vector<VectorPswf> &modes, const BallQuadratureRule &rule);

struct EigenReport {
    ModeIndex mode;
    double chi = 0.0;
    double lambda = 0.0;
    double mu = 0.0;
    int phase_index = 0;
    double dispersion = 0.0;
    std::map<std::string, double> residuals;
};

/// Fills every EigenReport field. `mu_rule` may be coarser than `rule` since
/// the double transform is quadratic in its size.
EigenReport eigen_report(const VectorPswf &v, const BallQuadratureRule &rule, const BallQuadratureRule &mu_rule,
                         const std::vector<Vec3> &sample_points);

/// Max scaled defect per identity, over random polynomial fields of degree
/// <= max_degree at random points of the ball. Defects are |lhs - rhs| / max(1, scale)
/// with scale the summed magnitude of the terms that enter the comparison.
struct IdentityReport {
    std::map<std::string, double> max_defect;
    int trials = 0;
};

IdentityReport identity_suite(std::uint64_t seed, int trials = 100, int max_degree = 6);

} // namespace bpswf

#endif
