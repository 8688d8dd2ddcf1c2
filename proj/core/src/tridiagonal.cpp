#include "bpswf/tridiagonal.hpp"

#include "bpswf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace bpswf {

TridiagonalMatrix::TridiagonalMatrix(std::vector<double> d, std::vector<double> e)
    : diag(std::move(d)), off(std::move(e)) {
    if (diag.empty() || off.size() + 1 != diag.size())
        throw ParameterError("tridiagonal matrix needs order >= 1 and order-1 off-diagonal entries");
}

double TridiagonalMatrix::norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double row = std::abs(diag[i]);
        if (i > 0)
            row += std::abs(off[i - 1]);
        if (i + 1 < diag.size())
            row += std::abs(off[i]);
        best = std::max(best, row);
    }
    return best;
}

std::vector<double> TridiagonalMatrix::multiply(std::span<const double> v) const {
    if (v.size() != diag.size())
        throw ParameterError("dimension mismatch in tridiagonal multiply");
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        double acc = diag[i] * v[i];
        if (i > 0)
            acc += off[i - 1] * v[i - 1];
        if (i + 1 < v.size())
            acc += off[i] * v[i + 1];
        out[i] = acc;
    }
    return out;
}

std::pair<double, double> TridiagonalMatrix::gershgorin_bounds() const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double radius = 0.0;
        if (i > 0)
            radius += std::abs(off[i - 1]);
        if (i + 1 < diag.size())
            radius += std::abs(off[i]);
        lo = std::min(lo, diag[i] - radius);
        hi = std::max(hi, diag[i] + radius);
    }
    return {lo, hi};
}

void normalize_sign(std::span<double> v) {
    for (double x : v) {
        if (std::abs(x) > 1e-12) {
            if (x < 0.0)
                for (double &y : v)
                    y = -y;
            return;
        }
    }
}

std::vector<EigenPair> eigen_tridiagonal(const TridiagonalMatrix &t) {
    const std::size_t n = t.order();
    if (n == 0)
        throw ParameterError("empty tridiagonal matrix");
    std::vector<double> d = t.diag;
    std::vector<double> e(n, 0.0);
    std::copy(t.off.begin(), t.off.end(), e.begin());
    // z[col * n + row]: column col holds the eigenvector belonging to d[col]
    std::vector<double> z(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        z[i * n + i] = 1.0;

    constexpr int max_iter = 100;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd)
                    break;
            }
            if (m == l)
                break;
            if (++iter > max_iter)
                throw std::runtime_error("tridiagonal QL iteration failed to converge");

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                double *zi = &z[i * n];
                double *zi1 = &z[(i + 1) * n];
                for (std::size_t k = 0; k < n; ++k) {
                    const double zf = zi1[k];
                    zi1[k] = s * zi[k] + c * zf;
                    zi[k] = c * zi[k] - s * zf;
                }
            }
            if (underflow)
                continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    std::vector<EigenPair> out;
    out.reserve(n);
    for (std::size_t idx : order) {
        EigenPair pair;
        pair.value = d[idx];
        pair.vector.assign(z.begin() + static_cast<std::ptrdiff_t>(idx * n),
                           z.begin() + static_cast<std::ptrdiff_t>((idx + 1) * n));
        double nrm = 0.0;
        for (double x : pair.vector)
            nrm += x * x;
        nrm = std::sqrt(nrm);
        for (double &x : pair.vector)
            x /= nrm;
        normalize_sign(pair.vector);
        out.push_back(std::move(pair));
    }
    return out;
}

std::size_t sturm_count(const TridiagonalMatrix &t, double x) {
    const std::size_t n = t.order();
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    std::size_t count = 0;
    double q = t.diag[0] - x;
    for (std::size_t i = 0;; ++i) {
        if (q == 0.0)
            q = -tiny;
        if (q < 0.0)
            ++count;
        if (i + 1 == n)
            break;
        q = t.diag[i + 1] - x - t.off[i] * t.off[i] / q;
    }
    return count;
}

std::vector<double> lowest_eigenvalues_bisection(const TridiagonalMatrix &t, std::size_t count) {
    if (count > t.order())
        throw ParameterError("requested more eigenvalues than the matrix order");
    const auto [glo, ghi] = t.gershgorin_bounds();
    const double scale = std::max({std::abs(glo), std::abs(ghi), std::numeric_limits<double>::min()});
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        double lo = glo - 1e-14 * scale;
        double hi = ghi + 1e-14 * scale;
        // invariant: sturm_count(lo) <= k < sturm_count(hi)
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            if (sturm_count(t, mid) > k)
                hi = mid;
            else
                lo = mid;
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

double residual(const TridiagonalMatrix &t, double chi, std::span<const double> v) {
    if (v.size() != t.order())
        throw ParameterError("dimension mismatch: vector has " + std::to_string(v.size()) +
                             " entries, matrix order is " + std::to_string(t.order()));
    const auto tv = t.multiply(v);
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double r = tv[i] - chi * v[i];
        acc += r * r;
    }
    return std::sqrt(acc);
}

} // namespace bpswf
