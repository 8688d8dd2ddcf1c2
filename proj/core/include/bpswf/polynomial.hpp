#ifndef BPSWF_POLYNOMIAL_HPP
#define BPSWF_POLYNOMIAL_HPP

#include "bpswf/vec3.hpp"

#include <array>
#include <cstdint>
#include <map>

namespace bpswf {

/// Sparse trivariate polynomial with exact (monomial-wise) differentiation.
class Polynomial3 {
  public:
    using Exponent = std::array<int, 3>;

    Polynomial3() = default;
    static Polynomial3 constant(double value);
    static Polynomial3 monomial(double coeff, int i, int j, int k);
    /// Uniform random coefficients in [-1, 1] for every monomial of total degree <= degree.
    static Polynomial3 random(int degree, std::uint64_t seed);

    double eval(const Vec3 &x) const;
    /// Sum of |term| at x; the natural scale for roundoff in eval.
    double eval_magnitude(const Vec3 &x) const;
    int degree() const;
    const std::map<Exponent, double> &terms() const { return terms_; }

    Polynomial3 derivative(int axis) const;
    Polynomial3 times_coordinate(int axis) const;

    Polynomial3 &operator+=(const Polynomial3 &o);
    Polynomial3 &operator-=(const Polynomial3 &o);
    Polynomial3 &operator*=(double s);

  private:
    void add_term(const Exponent &e, double coeff);
    std::map<Exponent, double> terms_;
};

Polynomial3 operator+(Polynomial3 a, const Polynomial3 &b);
Polynomial3 operator-(Polynomial3 a, const Polynomial3 &b);
Polynomial3 operator*(Polynomial3 a, double s);
Polynomial3 operator*(double s, Polynomial3 a);

using VectorPolynomial3 = std::array<Polynomial3, 3>;

Vec3 eval(const VectorPolynomial3 &v, const Vec3 &x);

Polynomial3 laplacian(const Polynomial3 &u);
/// x . grad u
Polynomial3 euler(const Polynomial3 &u);
/// Laplace-Beltrami operator |x|^2 Delta - (x.grad)(x.grad + 1).
Polynomial3 laplace_beltrami(const Polynomial3 &u);
/// -Delta + (x.grad)(x.grad + 2 alpha + 3) + c^2 |x|^2.
Polynomial3 first_kind_operator(const Polynomial3 &u, double alpha, double c);

VectorPolynomial3 gradient(const Polynomial3 &u);
/// x cross grad u
VectorPolynomial3 angular(const Polynomial3 &u);
VectorPolynomial3 curl(const VectorPolynomial3 &v);
Polynomial3 divergence(const VectorPolynomial3 &v);
/// sum_i (x cross grad)_i v_i
Polynomial3 angular_dot(const VectorPolynomial3 &v);
VectorPolynomial3 cross_with_x(const VectorPolynomial3 &v);
Polynomial3 dot_with_x(const VectorPolynomial3 &v);

} // namespace bpswf

#endif
