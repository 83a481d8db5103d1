#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusioncheck {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral
    BigInt num = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(num);
    if (exp >= 0) {
        r *= Rational(BigInt(1) << exp);
    } else {
        r /= Rational(BigInt(1) << (-exp));
    }
    return r;
}

inline double rational_to_double(const Rational& r) {
    return static_cast<double>(r);
}

/// Dense polynomial with rational coefficients, lowest degree first.
using RatPoly = std::vector<Rational>;

/// Lagrange interpolation through (x_i, y_i); returns polynomial of degree < #points.
RatPoly rat_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Polynomial division; throws if the remainder is nonzero.
RatPoly rat_poly_exact_divide(const RatPoly& num, const RatPoly& den);

Rational rat_poly_eval(const RatPoly& p, const Rational& x);

/// Determinant of a dense rational matrix (row-major, n x n) by Gaussian elimination.
Rational rat_det(std::vector<Rational> a, int n);

}  // namespace fusioncheck
