#include "bpswf/bouwkamp.hpp"

#include "bpswf/errors.hpp"
#include "bpswf/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bpswf {

namespace {

void check_mode_params(int n, double alpha, double c, ModeKind kind) {
    if (n < 0)
        throw ParameterError("degree n must be nonnegative");
    if (n == 0 && kind == ModeKind::vectorial)
        throw ParameterError("vectorial modes require n >= 1");
    if (!(alpha > -1.0) || !std::isfinite(alpha))
        throw ParameterError("alpha must exceed -1 (got " + std::to_string(alpha) + ")");
    if (!(c >= 0.0) || !std::isfinite(c))
        throw ParameterError("bandwidth c must be nonnegative (got " + std::to_string(c) + ")");
}

// Solves (T - shift I) x = b by Gaussian elimination with partial pivoting.
std::vector<double> shifted_solve(const TridiagonalMatrix &t, double shift, std::vector<double> b) {
    const std::size_t n = t.order();
    // rows stored as three bands plus a fill-in band from pivoting
    std::vector<double> lower(n, 0.0), mid(n), upper(n, 0.0), fill(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        mid[i] = t.diag[i] - shift;
        if (i + 1 < n) {
            upper[i] = t.off[i];
            lower[i + 1] = t.off[i];
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(lower[i + 1]) > std::abs(mid[i])) {
            std::swap(mid[i], lower[i + 1]);
            std::swap(upper[i], mid[i + 1]);
            std::swap(fill[i], upper[i + 1]);
            std::swap(b[i], b[i + 1]);
        }
        if (mid[i] == 0.0)
            mid[i] = 1e-300;
        const double f = lower[i + 1] / mid[i];
        mid[i + 1] -= f * upper[i];
        upper[i + 1] -= f * fill[i];
        b[i + 1] -= f * b[i];
    }
    if (mid[n - 1] == 0.0)
        mid[n - 1] = 1e-300;
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        if (i + 1 < n)
            acc -= upper[i] * x[i + 1];
        if (i + 2 < n)
            acc -= fill[i] * x[i + 2];
        x[i] = acc / mid[i];
    }
    return x;
}

std::vector<EigenPair> bisection_with_inverse_iteration(const TridiagonalMatrix &t) {
    const auto values = lowest_eigenvalues_bisection(t, t.order());
    const double eps_shift = 1e-13 * std::max(1.0, t.norm());
    std::vector<EigenPair> out;
    for (double chi : values) {
        std::vector<double> v(t.order(), 1.0);
        for (int it = 0; it < 4; ++it) {
            v = shifted_solve(t, chi + eps_shift, v);
            double nrm = 0.0;
            for (double x : v)
                nrm += x * x;
            nrm = std::sqrt(nrm);
            for (double &x : v)
                x /= nrm;
        }
        normalize_sign(v);
        out.push_back({chi, std::move(v)});
    }
    return out;
}

} // namespace

double ball_polynomial_eigenvalue(int m, double alpha) { return m * (m + 2.0 * alpha + 3.0); }

int truncation_order(int N, double alpha) { return 2 * N + static_cast<int>(std::ceil(2.0 * alpha)) + 30; }

int truncation_index(int n, int N, double alpha) {
    const int M = truncation_order(N, alpha);
    const int span = M - n;
    return span <= 0 ? 0 : (span + 1) / 2;
}

TridiagonalMatrix build_matrix(int n, double alpha, double c, int K, ModeKind kind) {
    check_mode_params(n, alpha, c, kind);
    if (K < 0)
        throw ParameterError("truncation K must be nonnegative");
    const JacobiParams p(alpha, n + 0.5);
    const double half_c2 = 0.5 * c * c;
    const auto order = static_cast<std::size_t>(K) + 1;
    std::vector<double> diag(order);
    std::vector<double> off(order - 1);
    for (std::size_t j = 0; j < order; ++j) {
        const auto rc = recurrence_coeffs(static_cast<int>(j), p);
        diag[j] = ball_polynomial_eigenvalue(n + 2 * static_cast<int>(j), alpha) + (rc.b + 1.0) * half_c2;
        if (j + 1 < order)
            off[j] = rc.a * half_c2;
    }
    return TridiagonalMatrix(std::move(diag), std::move(off));
}

const RadialExpansion &ModeTable::at(int n, int k) const {
    const auto it = entries.find({n, k});
    if (it == entries.end())
        throw std::out_of_range("mode (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ") not in table");
    return it->second;
}

std::vector<EigenPair> solve_bouwkamp(const TridiagonalMatrix &a) {
    try {
        return eigen_tridiagonal(a);
    } catch (const std::runtime_error &) {
        return bisection_with_inverse_iteration(a);
    }
}

ModeTable solve_modes(int N, double alpha, double c, ModeKind kind) {
    if (N < 1)
        throw ParameterError("N must be at least 1");
    ModeTable table;
    table.alpha = alpha;
    table.c = c;
    table.N = N;
    const int n_first = kind == ModeKind::scalar ? 0 : 1;
    for (int n = n_first; n <= N; ++n) {
        const int K = truncation_index(n, N, alpha);
        const auto pairs = solve_bouwkamp(build_matrix(n, alpha, c, K, kind));
        const int kcount = (N - n) / 2 + 1;
        for (int k = 0; k < kcount; ++k) {
            const auto &pair = pairs[static_cast<std::size_t>(k)];
            table.entries.emplace(std::pair{n, k}, RadialExpansion{alpha, c, n, k, pair.value, pair.vector});
        }
    }
    return table;
}

RadialExpansion solve_mode(int n, int k, double alpha, double c, ModeKind kind) {
    if (k < 0)
        throw ParameterError("radial index k must be nonnegative");
    const int N = n + 2 * k;
    const int K = truncation_index(n, std::max(N, 1), alpha);
    const auto pairs = solve_bouwkamp(build_matrix(n, alpha, c, K, kind));
    const auto &pair = pairs[static_cast<std::size_t>(k)];
    return {alpha, c, n, k, pair.value, pair.vector};
}

} // namespace bpswf
