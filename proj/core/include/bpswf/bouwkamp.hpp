#ifndef BPSWF_BOUWKAMP_HPP
#define BPSWF_BOUWKAMP_HPP

#include "bpswf/tridiagonal.hpp"

#include <map>
#include <utility>
#include <vector>

namespace bpswf {

/// Vectorial modes need n >= 1; scalar modes also admit n = 0.
enum class ModeKind { vectorial, scalar };

/// gamma_m = m (m + 2 alpha + 3), the ball-polynomial eigenvalue.
double ball_polynomial_eigenvalue(int m, double alpha);

/// M = 2N + ceil(2 alpha) + 30.
int truncation_order(int N, double alpha);

/// K = ceil((M - n) / 2); the expansion keeps coefficients 0..K.
int truncation_index(int n, int N, double alpha);

/// Bouwkamp matrix of order K + 1 for degree n:
///   A_jj = gamma_{n+2j} + (b_j + 1) c^2 / 2,  A_j,j+1 = a_j c^2 / 2
/// with (a_j, b_j) the recurrence coefficients for exponents (alpha, n + 1/2).
TridiagonalMatrix build_matrix(int n, double alpha, double c, int K, ModeKind kind = ModeKind::vectorial);

/// Jacobi coefficients of the radial factor of one mode, together with chi.
struct RadialExpansion {
    double alpha = 0.0;
    double c = 0.0;
    int n = 0;
    int k = 0;
    double chi = 0.0;
    std::vector<double> beta;

    int truncation() const { return static_cast<int>(beta.size()) - 1; }
};

struct ModeTable {
    double alpha = 0.0;
    double c = 0.0;
    int N = 0;
    std::map<std::pair<int, int>, RadialExpansion> entries;

    /// Throws std::out_of_range when (n, k) was not computed.
    const RadialExpansion &at(int n, int k) const;
};

/// Eigenpairs of a Bouwkamp matrix, ascending. QL is the primary solver;
/// if it fails to converge the spectrum comes from Sturm bisection with
/// inverse-iteration eigenvectors.
std::vector<EigenPair> solve_bouwkamp(const TridiagonalMatrix &a);

/// All modes with 2k + n <= N, truncated per truncation_index.
ModeTable solve_modes(int N, double alpha, double c, ModeKind kind = ModeKind::vectorial);

/// A single mode, truncated with N = n + 2k.
RadialExpansion solve_mode(int n, int k, double alpha, double c, ModeKind kind = ModeKind::vectorial);

} // namespace bpswf

#endif
