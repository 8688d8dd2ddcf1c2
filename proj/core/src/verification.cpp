#include "bpswf/verification.hpp"

#include "bpswf/errors.hpp"
#include "bpswf/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <type_traits>

namespace bpswf {

namespace {

void check_alpha(const BallQuadratureRule &rule, double alpha) {
    if (rule.alpha != alpha)
        throw ConfigurationError("quadrature rule built for alpha=" + std::to_string(rule.alpha) +
                                 " used with alpha=" + std::to_string(alpha));
}

ComplexVec3 to_complex(const Vec3 &v) { return {Complex(v.x), Complex(v.y), Complex(v.z)}; }

std::vector<Vec3> sample_at_nodes(const VectorField &field, const BallQuadratureRule &rule) {
    std::vector<Vec3> out;
    out.reserve(rule.size());
    for (const auto &p : rule.points)
        out.push_back(field(p));
    return out;
}

std::vector<Vec3> sample_at_nodes(const VectorPswf &v, const BallQuadratureRule &rule) {
    return sample_at_nodes([&v](const Vec3 &p) { return vector_eval(v, p); }, rule);
}

Complex expected_phase(int index) {
    switch (index) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, -1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, 1.0};
    }
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t m = xs.size() / 2;
    return xs.size() % 2 == 1 ? xs[m] : 0.5 * (xs[m - 1] + xs[m]);
}

Complex componentwise_median(const std::vector<Complex> &zs) {
    std::vector<double> re, im;
    for (const auto &z : zs) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return {median(re), median(im)};
}

// rho(x) = F(x) . psi(x) / |psi(x)|^2
std::vector<Complex> projected_ratios(const SampledTransform &transform, const VectorPswf &v,
                                      const std::vector<Vec3> &points) {
    std::vector<Complex> ratios;
    for (const auto &x : points) {
        const Vec3 psi = vector_eval(v, x);
        const double psi2 = dot(psi, psi);
        if (!(psi2 > 1e-200))
            continue;
        const auto f = transform(x);
        ratios.push_back((f[0] * psi.x + f[1] * psi.y + f[2] * psi.z) / psi2);
    }
    if (ratios.empty())
        throw SamplingError("every sample point has a vanishing field value");
    return ratios;
}

double radical_inverse(std::uint64_t i, std::uint64_t base) {
    double inv = 1.0 / static_cast<double>(base);
    double f = inv;
    double out = 0.0;
    while (i > 0) {
        out += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return out;
}

} // namespace

SampledTransform::SampledTransform(const BallQuadratureRule &rule, std::vector<Vec3> samples, double c,
                                   KernelSign sign)
    : rule_(&rule), c_(c), sign_(static_cast<double>(static_cast<int>(sign))) {
    if (samples.size() != rule.size())
        throw ConfigurationError("sample count does not match the quadrature rule");
    samples_.reserve(samples.size());
    for (const auto &s : samples)
        samples_.push_back(to_complex(s));
}

SampledTransform::SampledTransform(const BallQuadratureRule &rule, std::vector<ComplexVec3> samples, double c,
                                   KernelSign sign)
    : rule_(&rule), samples_(std::move(samples)), c_(c), sign_(static_cast<double>(static_cast<int>(sign))) {
    if (samples_.size() != rule.size())
        throw ConfigurationError("sample count does not match the quadrature rule");
}

ComplexVec3 SampledTransform::operator()(const Vec3 &x) const {
    const auto &pts = rule_->points;
    const auto &w = rule_->weights;
    ComplexVec3 acc{};
    const double scale = sign_ * c_;
    for (std::size_t j = 0; j < pts.size(); ++j) {
        const double arg = scale * dot(x, pts[j]);
        const Complex kernel(w[j] * std::cos(arg), w[j] * std::sin(arg));
        acc[0] += kernel * samples_[j][0];
        acc[1] += kernel * samples_[j][1];
        acc[2] += kernel * samples_[j][2];
    }
    return acc;
}

Complex finite_fourier_transform(const ScalarField &field, const Vec3 &x, const BallQuadratureRule &rule, double c,
                                 double alpha, KernelSign sign) {
    check_alpha(rule, alpha);
    const double scale = static_cast<int>(sign) * c;
    Complex acc{};
    for (std::size_t j = 0; j < rule.size(); ++j) {
        const double arg = scale * dot(x, rule.points[j]);
        acc += Complex(std::cos(arg), std::sin(arg)) * (rule.weights[j] * field(rule.points[j]));
    }
    return acc;
}

ComplexVec3 finite_fourier_transform(const VectorField &field, const Vec3 &x, const BallQuadratureRule &rule,
                                     double c, double alpha, KernelSign sign) {
    check_alpha(rule, alpha);
    return SampledTransform(rule, sample_at_nodes(field, rule), c, sign)(x);
}

LambdaEstimate estimate_lambda(const VectorPswf &v, const BallQuadratureRule &rule,
                               const std::vector<Vec3> &sample_points) {
    const auto &mode = v.mode();
    check_alpha(rule, mode.alpha);
    const SampledTransform transform(rule, sample_at_nodes(v, rule), mode.c, KernelSign::forward);

    LambdaEstimate est;
    est.ratios = projected_ratios(transform, v, sample_points);
    est.phase_index = (mode.n + 2 * mode.k) % 4;
    const Complex phase = expected_phase(est.phase_index);
    const Complex centre = componentwise_median(est.ratios);
    est.lambda = std::abs(centre);
    for (const auto &rho : est.ratios) {
        est.dispersion = std::max(est.dispersion, std::abs(rho - centre) / est.lambda);
        est.phase_error = std::max(est.phase_error, std::abs(std::arg(rho * std::conj(phase))));
    }
    return est;
}

MuEstimate mu_via_double_transform(const VectorPswf &v, const BallQuadratureRule &rule,
                                   const std::vector<Vec3> &sample_points) {
    const auto &mode = v.mode();
    check_alpha(rule, mode.alpha);
    const SampledTransform forward(rule, sample_at_nodes(v, rule), mode.c, KernelSign::forward);
    std::vector<ComplexVec3> image;
    image.reserve(rule.size());
    for (const auto &p : rule.points)
        image.push_back(forward(p));
    const SampledTransform adjoint(rule, std::move(image), mode.c, KernelSign::adjoint);

    const auto ratios = projected_ratios(adjoint, v, sample_points);
    const Complex centre = componentwise_median(ratios);
    MuEstimate est;
    est.mu = centre.real();
    const double scale = std::abs(centre);
    for (const auto &rho : ratios) {
        est.dispersion = std::max(est.dispersion, std::abs(rho - centre) / scale);
        est.imaginary_part = std::max(est.imaginary_part, std::abs(rho.imag()) / scale);
    }
    return est;
}

std::vector<Vec3> ratio_sample_points(const VectorPswf &v, std::size_t count, std::uint64_t seed) {
    constexpr std::size_t pilot_size = 400;
    std::vector<Vec3> pilot;
    std::vector<double> magnitude;
    for (std::uint64_t i = 1 + seed * 4096; pilot.size() < pilot_size; ++i) {
        const Vec3 x{2.0 * radical_inverse(i, 2) - 1.0, 2.0 * radical_inverse(i, 3) - 1.0,
                     2.0 * radical_inverse(i, 5) - 1.0};
        if (norm(x) > 0.95 || std::hypot(x.x, x.y) < 1e-3)
            continue;
        pilot.push_back(x);
        magnitude.push_back(norm(vector_eval(v, x)));
    }
    std::vector<double> sorted = magnitude;
    std::sort(sorted.begin(), sorted.end());
    const double threshold = sorted[(sorted.size() * 3) / 10];
    if (!(sorted.back() > 0.0))
        throw SamplingError("field vanishes on the whole pilot set");

    std::vector<Vec3> out;
    for (std::size_t i = 0; i < pilot.size() && out.size() < count; ++i)
        if (magnitude[i] >= threshold && magnitude[i] > 0.0)
            out.push_back(pilot[i]);
    if (out.size() < count)
        throw SamplingError("not enough sample points above the magnitude threshold");
    return out;
}

namespace {

template <class Mode>
void check_same_family(const std::vector<Mode> &modes, const BallQuadratureRule &rule) {
    if (modes.empty())
        return;
    const auto &first = modes.front().mode();
    check_alpha(rule, first.alpha);
    for (const auto &m : modes)
        if (m.mode().alpha != first.alpha || m.mode().c != first.c)
            throw ConfigurationError("Gram matrix requested for modes with different (alpha, c)");
}

template <class Sample>
DenseMatrix weighted_gram(const std::vector<std::vector<Sample>> &values, const BallQuadratureRule &rule) {
    const std::size_t m = values.size();
    DenseMatrix g(m, std::vector<double>(m, 0.0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
            double acc = 0.0;
            for (std::size_t j = 0; j < rule.size(); ++j) {
                if constexpr (std::is_same_v<Sample, Vec3>)
                    acc += rule.weights[j] * dot(values[a][j], values[b][j]);
                else
                    acc += rule.weights[j] * values[a][j] * values[b][j];
            }
            g[a][b] = acc;
            g[b][a] = acc;
        }
    return g;
}

} // namespace

DenseMatrix gram_scalar(const std::vector<ScalarPswf> &modes, const BallQuadratureRule &rule) {
    check_same_family(modes, rule);
    std::vector<std::vector<double>> values;
    for (const auto &s : modes) {
        auto &row = values.emplace_back();
        row.reserve(rule.size());
        for (const auto &p : rule.points)
            row.push_back(scalar_eval(s, p));
    }
    return weighted_gram(values, rule);
}

DenseMatrix gram_vector(const std::vector<VectorPswf> &modes, const BallQuadratureRule &rule) {
    check_same_family(modes, rule);
    std::vector<std::vector<Vec3>> values;
    for (const auto &v : modes)
        values.push_back(sample_at_nodes(v, rule));
    return weighted_gram(values, rule);
}

EigenReport eigen_report(const VectorPswf &v, const BallQuadratureRule &rule, const BallQuadratureRule &mu_rule,
                         const std::vector<Vec3> &sample_points) {
    const auto lam = estimate_lambda(v, rule, sample_points);
    const auto mu = mu_via_double_transform(v, mu_rule, sample_points);
    EigenReport report;
    report.mode = v.mode();
    report.chi = v.chi();
    report.lambda = lam.lambda;
    report.mu = mu.mu;
    report.phase_index = lam.phase_index;
    report.dispersion = lam.dispersion;
    report.residuals["phase_error"] = lam.phase_error;
    report.residuals["mu_dispersion"] = mu.dispersion;
    report.residuals["mu_imaginary"] = mu.imaginary_part;
    const double lam2 = lam.lambda * lam.lambda;
    report.residuals["mu_vs_lambda_sq"] = lam2 > 0.0 ? std::abs(mu.mu - lam2) / lam2 : std::abs(mu.mu);
    return report;
}

namespace {

double scaled_defect(const Polynomial3 &lhs, const Polynomial3 &rhs, const Vec3 &x) {
    const double scale = lhs.eval_magnitude(x) + rhs.eval_magnitude(x);
    return std::abs(lhs.eval(x) - rhs.eval(x)) / std::max(1.0, scale);
}

double scaled_defect(const VectorPolynomial3 &lhs, const VectorPolynomial3 &rhs, const Vec3 &x) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        worst = std::max(worst, scaled_defect(lhs[i], rhs[i], x));
    return worst;
}

VectorPolynomial3 apply_each(const VectorPolynomial3 &v, const std::function<Polynomial3(const Polynomial3 &)> &op) {
    return {op(v[0]), op(v[1]), op(v[2])};
}

} // namespace

IdentityReport identity_suite(std::uint64_t seed, int trials, int max_degree) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> alpha_dist(-0.9, 3.0);
    std::uniform_real_distribution<double> c_dist(0.0, 10.0);

    IdentityReport report;
    report.trials = trials;
    auto record = [&](const std::string &name, double defect) {
        auto &slot = report.max_defect[name];
        slot = std::max(slot, defect);
    };

    for (int t = 0; t < trials; ++t) {
        const int degree = 1 + t % std::max(1, max_degree);
        const Polynomial3 u = Polynomial3::random(degree, rng());
        Vec3 x;
        do {
            x = {unit(rng), unit(rng), unit(rng)};
        } while (norm(x) > 1.0);
        const double alpha = alpha_dist(rng);
        const double c = c_dist(rng);

        const auto ang = angular(u);
        const auto lb = laplace_beltrami(u);
        const Polynomial3 zero;

        record("angular_square", scaled_defect(angular_dot(ang), lb, x));

        const Polynomial3 eu = euler(u);
        const auto grad = gradient(u);
        VectorPolynomial3 rhs;
        for (int i = 0; i < 3; ++i) {
            const auto ii = static_cast<std::size_t>(i);
            Polynomial3 r2_grad;
            for (int j = 0; j < 3; ++j)
                r2_grad += grad[ii].times_coordinate(j).times_coordinate(j);
            rhs[ii] = eu.times_coordinate(i) - r2_grad;
        }
        record("double_cross", scaled_defect(cross_with_x(ang), rhs, x));

        const auto curl_ang = curl(ang);
        record("div_curl_angular", scaled_defect(divergence(curl_ang), zero, x));
        record("radial_curl_angular", scaled_defect(dot_with_x(curl_ang), lb, x));
        record("angular_divergence", scaled_defect(divergence(ang), zero, x));

        const auto first_kind = [alpha, c](const Polynomial3 &p) { return first_kind_operator(p, alpha, c); };
        record("commutation_first_kind",
               scaled_defect(angular(first_kind_operator(u, alpha, c)), apply_each(ang, first_kind), x));
        record("commutation_laplace_beltrami",
               scaled_defect(angular(lb), apply_each(ang, [](const Polynomial3 &p) { return laplace_beltrami(p); }),
                             x));
    }
    return report;
}

} // namespace bpswf
