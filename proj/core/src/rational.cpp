#include "fusioncheck/rational.hpp"

namespace fusioncheck {

RatPoly rat_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const size_t n = xs.size();
    if (ys.size() != n || n == 0) throw std::invalid_argument("rat_interpolate: size mismatch");
    // Newton's divided differences, then expand to monomial basis.
    std::vector<Rational> coef(ys);
    for (size_t j = 1; j < n; ++j) {
        for (size_t i = n - 1; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    }
    RatPoly p{coef[n - 1]};
    for (size_t i = n - 1; i-- > 0;) {
        // p = p*(x - xs[i]) + coef[i]
        p.insert(p.begin(), Rational(0));
        for (size_t k = 0; k + 1 < p.size(); ++k) p[k] -= xs[i] * p[k + 1];
        p[0] += coef[i];
    }
    return p;
}

RatPoly rat_poly_exact_divide(const RatPoly& num, const RatPoly& den) {
    if (den.empty() || den.back() == 0) throw std::invalid_argument("rat_poly_exact_divide: bad divisor");
    if (num.size() < den.size()) throw std::invalid_argument("rat_poly_exact_divide: degree mismatch");
    RatPoly rem(num);
    RatPoly quot(num.size() - den.size() + 1, Rational(0));
    for (size_t i = quot.size(); i-- > 0;) {
        Rational q = rem[i + den.size() - 1] / den.back();
        quot[i] = q;
        for (size_t k = 0; k < den.size(); ++k) rem[i + k] -= q * den[k];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("rat_poly_exact_divide: nonzero remainder");
    return quot;
}

Rational rat_poly_eval(const RatPoly& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

Rational rat_det(std::vector<Rational> a, int n) {
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r * n + col] != 0) { pivot = r; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
            det = -det;
        }
        det *= a[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r * n + col] == 0) continue;
            Rational f = a[r * n + col] / a[col * n + col];
            for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
        }
    }
    return det;
}

}  // namespace fusioncheck
