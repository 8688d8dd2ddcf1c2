#include "bpswf/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace bpswf {

Polynomial3 Polynomial3::constant(double value) { return monomial(value, 0, 0, 0); }

Polynomial3 Polynomial3::monomial(double coeff, int i, int j, int k) {
    Polynomial3 p;
    p.add_term({i, j, k}, coeff);
    return p;
}

Polynomial3 Polynomial3::random(int degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    Polynomial3 p;
    for (int total = 0; total <= degree; ++total)
        for (int i = total; i >= 0; --i)
            for (int j = total - i; j >= 0; --j)
                p.add_term({i, j, total - i - j}, coeff(rng));
    return p;
}

void Polynomial3::add_term(const Exponent &e, double coeff) {
    if (coeff == 0.0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0.0)
            terms_.erase(it);
    }
}

double Polynomial3::eval(const Vec3 &x) const {
    double acc = 0.0;
    for (const auto &[e, c] : terms_)
        acc += c * std::pow(x.x, e[0]) * std::pow(x.y, e[1]) * std::pow(x.z, e[2]);
    return acc;
}

double Polynomial3::eval_magnitude(const Vec3 &x) const {
    double acc = 0.0;
    for (const auto &[e, c] : terms_)
        acc += std::abs(c * std::pow(x.x, e[0]) * std::pow(x.y, e[1]) * std::pow(x.z, e[2]));
    return acc;
}

int Polynomial3::degree() const {
    int d = -1;
    for (const auto &[e, c] : terms_)
        d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

Polynomial3 Polynomial3::derivative(int axis) const {
    Polynomial3 out;
    for (const auto &[e, c] : terms_) {
        const auto a = static_cast<std::size_t>(axis);
        if (e[a] == 0)
            continue;
        Exponent d = e;
        --d[a];
        out.add_term(d, c * e[a]);
    }
    return out;
}

Polynomial3 Polynomial3::times_coordinate(int axis) const {
    Polynomial3 out;
    for (const auto &[e, c] : terms_) {
        Exponent d = e;
        ++d[static_cast<std::size_t>(axis)];
        out.add_term(d, c);
    }
    return out;
}

Polynomial3 &Polynomial3::operator+=(const Polynomial3 &o) {
    for (const auto &[e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial3 &Polynomial3::operator-=(const Polynomial3 &o) {
    for (const auto &[e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial3 &Polynomial3::operator*=(double s) {
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, c] : terms_)
        c *= s;
    return *this;
}

Polynomial3 operator+(Polynomial3 a, const Polynomial3 &b) { return a += b; }
Polynomial3 operator-(Polynomial3 a, const Polynomial3 &b) { return a -= b; }
Polynomial3 operator*(Polynomial3 a, double s) { return a *= s; }
Polynomial3 operator*(double s, Polynomial3 a) { return a *= s; }

Vec3 eval(const VectorPolynomial3 &v, const Vec3 &x) { return {v[0].eval(x), v[1].eval(x), v[2].eval(x)}; }

Polynomial3 laplacian(const Polynomial3 &u) {
    Polynomial3 out;
    for (int i = 0; i < 3; ++i)
        out += u.derivative(i).derivative(i);
    return out;
}

Polynomial3 euler(const Polynomial3 &u) {
    Polynomial3 out;
    for (int i = 0; i < 3; ++i)
        out += u.derivative(i).times_coordinate(i);
    return out;
}

namespace {

Polynomial3 times_r2(const Polynomial3 &u) {
    Polynomial3 out;
    for (int i = 0; i < 3; ++i)
        out += u.times_coordinate(i).times_coordinate(i);
    return out;
}

} // namespace

Polynomial3 laplace_beltrami(const Polynomial3 &u) {
    const Polynomial3 eu = euler(u);
    return times_r2(laplacian(u)) - euler(eu) - eu;
}

Polynomial3 first_kind_operator(const Polynomial3 &u, double alpha, double c) {
    const Polynomial3 eu = euler(u);
    return euler(eu) + eu * (2.0 * alpha + 3.0) - laplacian(u) + times_r2(u) * (c * c);
}

VectorPolynomial3 gradient(const Polynomial3 &u) { return {u.derivative(0), u.derivative(1), u.derivative(2)}; }

VectorPolynomial3 angular(const Polynomial3 &u) {
    const auto g = gradient(u);
    return {g[2].times_coordinate(1) - g[1].times_coordinate(2), g[0].times_coordinate(2) - g[2].times_coordinate(0),
            g[1].times_coordinate(0) - g[0].times_coordinate(1)};
}

VectorPolynomial3 curl(const VectorPolynomial3 &v) {
    return {v[2].derivative(1) - v[1].derivative(2), v[0].derivative(2) - v[2].derivative(0),
            v[1].derivative(0) - v[0].derivative(1)};
}

Polynomial3 divergence(const VectorPolynomial3 &v) {
    return v[0].derivative(0) + v[1].derivative(1) + v[2].derivative(2);
}

Polynomial3 angular_dot(const VectorPolynomial3 &v) {
    Polynomial3 out;
    for (int i = 0; i < 3; ++i)
        out += angular(v[static_cast<std::size_t>(i)])[static_cast<std::size_t>(i)];
    return out;
}

VectorPolynomial3 cross_with_x(const VectorPolynomial3 &v) {
    return {v[2].times_coordinate(1) - v[1].times_coordinate(2), v[0].times_coordinate(2) - v[2].times_coordinate(0),
            v[1].times_coordinate(0) - v[0].times_coordinate(1)};
}

Polynomial3 dot_with_x(const VectorPolynomial3 &v) {
    return v[0].times_coordinate(0) + v[1].times_coordinate(1) + v[2].times_coordinate(2);
}

} // namespace bpswf
