#include "bpswf/jacobi.hpp"

#include "bpswf/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace bpswf {

JacobiParams::JacobiParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta))
        throw ParameterError("Jacobi exponents must satisfy alpha > -1 and beta > -1 (got alpha=" +
                             std::to_string(alpha) + ", beta=" + std::to_string(beta) + ")");
}

double JacobiParams::weight_mass() const {
    const double ab = alpha_ + beta_;
    return std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha_ + 1.0) + std::lgamma(beta_ + 1.0) -
                    std::lgamma(ab + 2.0));
}

RecurrenceCoeffs recurrence_coeffs(int k, const JacobiParams &p) {
    if (k < 0)
        throw ParameterError("recurrence index must be nonnegative");
    const double al = p.alpha();
    const double be = p.beta();
    const double ab = al + be;
    const double kk = k;
    RecurrenceCoeffs rc;
    if (k == 0) {
        // (k+ab+1)/(2k+ab+1) and (be^2-al^2)/(ab (ab+2)) cancel analytically at k = 0
        rc.a = 2.0 / (ab + 2.0) * std::sqrt((al + 1.0) * (be + 1.0) / (ab + 3.0));
        rc.b = (be - al) / (ab + 2.0);
        return rc;
    }
    const double s = 2.0 * kk + ab;
    rc.a = std::sqrt(4.0 * (kk + 1.0) * (kk + al + 1.0) * (kk + be + 1.0) * (kk + ab + 1.0) /
                     ((s + 1.0) * (s + 2.0) * (s + 2.0) * (s + 3.0)));
    rc.b = (be * be - al * al) / (s * (s + 2.0));
    return rc;
}

double norm_constant(int k, const JacobiParams &p) {
    if (k < 0)
        throw ParameterError("Jacobi degree must be nonnegative");
    const double al = p.alpha();
    const double be = p.beta();
    const double ab = al + be;
    const double kk = k;
    double log_h2;
    if (k == 0) {
        // (2k+ab+1) Gamma(k+ab+1) = Gamma(ab+2) at k = 0
        log_h2 = std::lgamma(al + 1.0) + std::lgamma(be + 1.0) - std::log(2.0) - std::lgamma(ab + 2.0);
    } else {
        log_h2 = std::lgamma(kk + al + 1.0) + std::lgamma(kk + be + 1.0) -
                 std::log(2.0 * (2.0 * kk + ab + 1.0)) - std::lgamma(kk + 1.0) - std::lgamma(kk + ab + 1.0);
    }
    return std::exp(0.5 * log_h2);
}

double gram_constant(const JacobiParams &p) { return std::exp2(p.alpha() + p.beta() + 2.0); }

namespace {

void check_eta(double eta) {
    if (!(std::abs(eta) <= 1.0))
        throw DomainError("Jacobi argument must lie in [-1, 1] (got " + std::to_string(eta) + ")");
}

} // namespace

void jacobi_table(int kmax, const JacobiParams &p, double eta, std::span<double> values, std::span<double> d1,
                  std::span<double> d2) {
    if (kmax < 0)
        throw ParameterError("Jacobi degree must be nonnegative");
    check_eta(eta);
    const auto need = static_cast<std::size_t>(kmax) + 1;
    if (values.size() < need || (!d1.empty() && d1.size() < need) || (!d2.empty() && d2.size() < need))
        throw ParameterError("jacobi_table: output span too small");

    const bool want_d1 = !d1.empty() || !d2.empty();
    const bool want_d2 = !d2.empty();
    std::vector<double> scratch_d1;
    if (want_d1 && d1.empty()) {
        scratch_d1.resize(need);
        d1 = scratch_d1;
    }

    const double al = p.alpha();
    const double be = p.beta();
    values[0] = 1.0 / norm_constant(0, p);
    if (want_d1)
        d1[0] = 0.0;
    if (want_d2)
        d2[0] = 0.0;
    if (kmax == 0)
        return;

    const double inv2h1 = 1.0 / (2.0 * norm_constant(1, p));
    values[1] = ((al + be + 2.0) * eta + (al - be)) * inv2h1;
    if (want_d1)
        d1[1] = (al + be + 2.0) * inv2h1;
    if (want_d2)
        d2[1] = 0.0;

    double a_prev = recurrence_coeffs(0, p).a;
    for (int k = 1; k < kmax; ++k) {
        const auto rc = recurrence_coeffs(k, p);
        const auto i = static_cast<std::size_t>(k);
        const double shift = eta - rc.b;
        values[i + 1] = (shift * values[i] - a_prev * values[i - 1]) / rc.a;
        if (want_d1)
            d1[i + 1] = (shift * d1[i] + values[i] - a_prev * d1[i - 1]) / rc.a;
        if (want_d2)
            d2[i + 1] = (shift * d2[i] + 2.0 * d1[i] - a_prev * d2[i - 1]) / rc.a;
        a_prev = rc.a;
    }
}

JacobiValue jacobi_with_derivatives(int k, const JacobiParams &p, double eta) {
    if (k < 0)
        throw ParameterError("Jacobi degree must be nonnegative");
    const auto n = static_cast<std::size_t>(k) + 1;
    std::vector<double> v(n), d1(n), d2(n);
    jacobi_table(k, p, eta, v, d1, d2);
    return {v.back(), d1.back(), d2.back()};
}

double jacobi_eval(int k, const JacobiParams &p, double eta) {
    if (k < 0)
        throw ParameterError("Jacobi degree must be nonnegative");
    std::vector<double> v(static_cast<std::size_t>(k) + 1);
    jacobi_table(k, p, eta, v);
    return v.back();
}

double jacobi_derivative(int k, const JacobiParams &p, double eta) {
    if (k < 0)
        throw ParameterError("Jacobi degree must be nonnegative");
    const auto n = static_cast<std::size_t>(k) + 1;
    std::vector<double> v(n), d1(n);
    jacobi_table(k, p, eta, v, d1);
    return d1.back();
}

} // namespace bpswf
