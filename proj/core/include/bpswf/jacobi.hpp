#ifndef BPSWF_JACOBI_HPP
#define BPSWF_JACOBI_HPP

#include <span>

namespace bpswf {

/// Exponents of the Jacobi weight (1-eta)^alpha (1+eta)^beta on (-1, 1).
/// Both must exceed -1; the constructor throws ParameterError otherwise.
class JacobiParams {
  public:
    JacobiParams(double alpha, double beta);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

    /// Integral of the weight over (-1, 1).
    double weight_mass() const;

  private:
    double alpha_;
    double beta_;
};

/// Coefficients of eta*J_k = a_k J_{k+1} + b_k J_k + a_{k-1} J_{k-1}.
struct RecurrenceCoeffs {
    double a = 0.0;
    double b = 0.0;
};

RecurrenceCoeffs recurrence_coeffs(int k, const JacobiParams &p);

/// Normalization constant h_k; J_k = P_k / h_k with P_k the classical Jacobi polynomial.
double norm_constant(int k, const JacobiParams &p);

/// Squared norm of every J_k under the weight: 2^(alpha+beta+2).
double gram_constant(const JacobiParams &p);

/// Normalized Jacobi polynomial J_k(eta), |eta| <= 1.
double jacobi_eval(int k, const JacobiParams &p, double eta);

/// d/deta J_k(eta), carried through the differentiated recurrence.
double jacobi_derivative(int k, const JacobiParams &p, double eta);

struct JacobiValue {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

JacobiValue jacobi_with_derivatives(int k, const JacobiParams &p, double eta);

/// Fills J_0..J_kmax (and optionally first and second derivatives) at eta.
/// Each non-empty span must hold kmax + 1 entries.
void jacobi_table(int kmax, const JacobiParams &p, double eta, std::span<double> values,
                  std::span<double> d1 = {}, std::span<double> d2 = {});

} // namespace bpswf

#endif
