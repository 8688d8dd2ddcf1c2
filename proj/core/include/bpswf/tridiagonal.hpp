#ifndef BPSWF_TRIDIAGONAL_HPP
#define BPSWF_TRIDIAGONAL_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace bpswf {

/// Symmetric tridiagonal matrix; off[j] couples rows j and j+1.
struct TridiagonalMatrix {
    std::vector<double> diag;
    std::vector<double> off;

    TridiagonalMatrix() = default;
    /// Throws ParameterError unless off.size() + 1 == diag.size().
    TridiagonalMatrix(std::vector<double> d, std::vector<double> e);

    std::size_t order() const { return diag.size(); }

    /// Infinity norm (maximum absolute row sum).
    double norm() const;

    std::vector<double> multiply(std::span<const double> v) const;

    /// Gershgorin interval [lo, hi] containing the whole spectrum.
    std::pair<double, double> gershgorin_bounds() const;
};

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
};

/// Full spectrum by implicit-shift QL, ascending. Eigenvectors have unit norm
/// and a positive first significant entry (|v_i| > 1e-12).
std::vector<EigenPair> eigen_tridiagonal(const TridiagonalMatrix &t);

/// Lowest `count` eigenvalues by Sturm-sequence bisection, ascending.
std::vector<double> lowest_eigenvalues_bisection(const TridiagonalMatrix &t, std::size_t count);

/// Number of eigenvalues strictly below x (Sturm count).
std::size_t sturm_count(const TridiagonalMatrix &t, double x);

/// ||T v - chi v||_2; throws ParameterError on dimension mismatch.
double residual(const TridiagonalMatrix &t, double chi, std::span<const double> v);

/// Flips v so that its first entry above 1e-12 in magnitude is positive.
void normalize_sign(std::span<double> v);

} // namespace bpswf

#endif
