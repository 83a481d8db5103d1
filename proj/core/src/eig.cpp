#include "fusioncheck/eig.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace fusioncheck {

namespace {

/// Householder reduction of a dense symmetric matrix to tridiagonal form.
/// a: row-major n*n, overwritten with the Householder vectors.
/// d: diagonal, e: subdiagonal (e[0] unused).
template <typename Real>
void tridiagonalize(std::vector<Real>& a, int n, std::vector<Real>& d, std::vector<Real>& e) {
    d.assign(n, Real(0));
    e.assign(n, Real(0));
    using std::abs;
    using std::sqrt;
    for (int k = 0; k < n - 2; ++k) {
        Real scale(0);
        for (int i = k + 1; i < n; ++i) scale += abs(a[static_cast<size_t>(i) * n + k]);
        if (scale == Real(0)) {
            e[k + 1] = a[static_cast<size_t>(k + 1) * n + k];
            continue;
        }
        Real h(0);
        for (int i = k + 1; i < n; ++i) {
            a[static_cast<size_t>(i) * n + k] /= scale;
            h += a[static_cast<size_t>(i) * n + k] * a[static_cast<size_t>(i) * n + k];
        }
        Real f = a[static_cast<size_t>(k + 1) * n + k];
        Real g = (f >= Real(0)) ? -sqrt(h) : sqrt(h);
        e[k + 1] = scale * g;
        h -= f * g;
        a[static_cast<size_t>(k + 1) * n + k] = f - g;
        // p = A u / h
        std::vector<Real> p(n, Real(0));
        for (int i = k + 1; i < n; ++i) {
            Real sum(0);
            for (int j = k + 1; j <= i; ++j)
                sum += a[static_cast<size_t>(i) * n + j] * a[static_cast<size_t>(j) * n + k];
            for (int j = i + 1; j < n; ++j)
                sum += a[static_cast<size_t>(j) * n + i] * a[static_cast<size_t>(j) * n + k];
            p[i] = sum / h;
        }
        Real kappa(0);
        for (int i = k + 1; i < n; ++i) kappa += p[i] * a[static_cast<size_t>(i) * n + k];
        kappa /= (Real(2) * h);
        for (int i = k + 1; i < n; ++i) p[i] -= kappa * a[static_cast<size_t>(i) * n + k];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j <= i; ++j)
                a[static_cast<size_t>(i) * n + j] -= p[i] * a[static_cast<size_t>(j) * n + k] +
                                                     p[j] * a[static_cast<size_t>(i) * n + k];
        a[static_cast<size_t>(k) * n + k + 1] = h;  // stash h for the back-transform
    }
    if (n >= 2) e[n - 1] = a[static_cast<size_t>(n - 1) * n + (n - 2)];
    for (int i = 0; i < n; ++i) d[i] = a[static_cast<size_t>(i) * n + i];
}

/// Number of eigenvalues of the tridiagonal (d, e) strictly below x,
/// by the standard Sturm count with underflow-safeguarded pivots.
template <typename Real>
int sturm_count(const std::vector<Real>& d, const std::vector<Real>& e, int n, Real x) {
    using std::abs;
    int count = 0;
    Real q = d[0] - x;
    const Real tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    for (int i = 0;;) {
        if (q < Real(0)) ++count;
        if (++i >= n) break;
        Real denom = q;
        if (abs(denom) < Real(tiny)) denom = (denom < Real(0)) ? -Real(tiny) : Real(tiny);
        q = d[i] - x - e[i] * e[i] / denom;
    }
    return count;
}

template <typename Real>
struct TriWork {
    std::vector<Real> house;  // overwritten matrix with Householder data
    std::vector<Real> d, e;
    int n = 0;
    Real scale{0};
};

template <typename Real>
TriWork<Real> build_tridiag(const SymMatrixR& a) {
    const int n = a.order();
    TriWork<Real> w;
    w.n = n;
    w.house.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w.house[static_cast<size_t>(i) * n + j] = Real(a.at(i, j));
    tridiagonalize(w.house, n, w.d, w.e);
    using std::abs;
    Real scale(0);
    for (int i = 0; i < n; ++i) {
        Real row = abs(w.d[i]);
        if (i > 0) row += abs(w.e[i]);
        if (i + 1 < n) row += abs(w.e[i + 1]);
        scale = std::max(scale, row);
    }
    w.scale = scale;
    return w;
}

/// Bisect for the k-th smallest eigenvalue (0-based) of the tridiagonal.
template <typename Real>
std::pair<Real, Real> bisect_kth(const TriWork<Real>& w, int k, const EigConfig& cfg) {
    Real lo = -w.scale - Real(1), hi = w.scale + Real(1);
    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real width_target = std::max(Real(cfg.target_width) * (w.scale + Real(1)),
                                       Real(4) * eps * (w.scale + Real(1)));
    for (int it = 0; it < cfg.max_bisect && (hi - lo) > width_target; ++it) {
        Real mid = (lo + hi) / Real(2);
        if (sturm_count(w.d, w.e, w.n, mid) >= k + 1)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

/// Slack covering the tridiagonalization backward error and Sturm-count
/// roundoff; the bracketing property is exercised against an exact
/// characteristic-polynomial oracle in the test suite.
template <typename Real>
Real cert_slack(const TriWork<Real>& w) {
    const Real eps = std::numeric_limits<Real>::epsilon();
    return Real(16) * Real(w.n) * eps * (w.scale + Real(1));
}

template <typename Real>
std::pair<double, double> min_eig_bounds_impl(const SymMatrixR& a, const EigConfig& cfg) {
    TriWork<Real> w = build_tridiag<Real>(a);
    auto [lo, hi] = bisect_kth(w, 0, cfg);
    Real slack = cert_slack(w) + Real(a.entry_bound()) * Real(a.order());
    return {static_cast<double>(lo - slack), static_cast<double>(hi + slack)};
}

/// Eigenvector for an isolated eigenvalue estimate: inverse iteration on the
/// tridiagonal followed by the Householder back-transform.
std::vector<double> tri_eigenvector(const TriWork<double>& w, double lambda) {
    const int n = w.n;
    std::vector<double> v(n);
    std::uint64_t state = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(n);
    for (int i = 0; i < n; ++i) {
        state ^= state << 13; state ^= state >> 7; state ^= state << 17;
        v[i] = static_cast<double>(state % 1000003) / 1000003.0 - 0.5;
    }
    const double tiny = 1e-30;
    for (int iter = 0; iter < 4; ++iter) {
        // solve (T - lambda I) x = v by LU without pivoting (perturbing tiny pivots)
        std::vector<double> diag(n), sub(n), sup(n);
        for (int i = 0; i < n; ++i) diag[i] = w.d[i] - lambda;
        for (int i = 1; i < n; ++i) sub[i] = sup[i] = w.e[i];
        std::vector<double> x(v);
        for (int i = 0; i < n - 1; ++i) {
            if (std::abs(diag[i]) < tiny) diag[i] = (diag[i] < 0 ? -tiny : tiny);
            double f = sub[i + 1] / diag[i];
            diag[i + 1] -= f * sup[i + 1];
            x[i + 1] -= f * x[i];
        }
        if (std::abs(diag[n - 1]) < tiny) diag[n - 1] = (diag[n - 1] < 0 ? -tiny : tiny);
        x[n - 1] /= diag[n - 1];
        for (int i = n - 2; i >= 0; --i) x[i] = (x[i] - sup[i + 1] * x[i + 1]) / diag[i];
        double norm = 0.0;
        for (double t : x) norm += t * t;
        norm = std::sqrt(norm);
        if (norm == 0.0 || !std::isfinite(norm)) break;
        for (int i = 0; i < n; ++i) v[i] = x[i] / norm;
    }
    // back-transform through the stored Householder reflectors
    for (int k = n - 3; k >= 0; --k) {
        double h = w.house[static_cast<size_t>(k) * n + k + 1];
        if (h == 0.0) continue;
        double dot = 0.0;
        for (int i = k + 1; i < n; ++i) dot += w.house[static_cast<size_t>(i) * n + k] * v[i];
        dot /= h;
        for (int i = k + 1; i < n; ++i) v[i] -= dot * w.house[static_cast<size_t>(i) * n + k];
    }
    double norm = 0.0;
    for (double t : v) norm += t * t;
    norm = std::sqrt(norm);
    if (norm > 0)
        for (double& t : v) t /= norm;
    return v;
}

using HiFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>>;

}  // namespace

const char* to_string(PsdVerdict::Kind k) {
    switch (k) {
        case PsdVerdict::Kind::Holds: return "holds";
        case PsdVerdict::Kind::Violated: return "violated";
        case PsdVerdict::Kind::Inconclusive: return "inconclusive";
    }
    return "?";
}

double default_tol(const SymMatrixR& a) {
    return 64.0 * std::numeric_limits<double>::epsilon() * a.order() * std::max(1.0, a.max_abs());
}

std::pair<double, double> min_eig_bounds(const SymMatrixR& a, const EigConfig& cfg) {
    if (a.order() == 0) return {0.0, 0.0};
    if (a.order() == 1) {
        double v = a.at(0, 0);
        return {v - a.entry_bound(), v + a.entry_bound()};
    }
    return min_eig_bounds_impl<double>(a, cfg);
}

void eig_all(const SymMatrixR& a, std::vector<double>& values,
             std::vector<std::vector<double>>& vectors) {
    const int n = a.order();
    values.assign(n, 0.0);
    vectors.assign(n, {});
    if (n == 0) return;
    if (n == 1) {
        values[0] = a.at(0, 0);
        vectors[0] = {1.0};
        return;
    }
    TriWork<double> w = build_tridiag<double>(a);
    EigConfig cfg;
    for (int k = 0; k < n; ++k) {
        auto [lo, hi] = bisect_kth(w, k, cfg);
        values[k] = 0.5 * (lo + hi);
    }
    for (int k = 0; k < n; ++k) {
        // nudge apart exact ties so inverse iteration targets distinct vectors
        double lambda = values[k];
        if (k > 0 && lambda - values[k - 1] < 1e-12 * (w.scale + 1.0))
            lambda += 1e-11 * (w.scale + 1.0) * k;
        vectors[k] = tri_eigenvector(w, lambda);
    }
    // Gram-Schmidt within near-degenerate clusters
    for (int k = 1; k < n; ++k) {
        for (int j = std::max(0, k - 8); j < k; ++j) {
            if (std::abs(values[k] - values[j]) > 1e-6 * (w.scale + 1.0)) continue;
            double dot = 0.0;
            for (int i = 0; i < n; ++i) dot += vectors[k][i] * vectors[j][i];
            for (int i = 0; i < n; ++i) vectors[k][i] -= dot * vectors[j][i];
        }
        double norm = 0.0;
        for (double t : vectors[k]) norm += t * t;
        norm = std::sqrt(norm);
        if (norm > 1e-300)
            for (double& t : vectors[k]) t /= norm;
    }
}

std::pair<double, double> certified_rayleigh(const SymMatrixR& a, const std::vector<double>& v) {
    const int n = a.order();
    if (a.exact()) {
        Rational num(0), den(0);
        std::vector<Rational> rv(n);
        for (int i = 0; i < n; ++i) rv[i] = rational_from_double(v[i]);
        for (int i = 0; i < n; ++i) {
            den += rv[i] * rv[i];
            for (int j = 0; j < n; ++j) num += rv[i] * a.exact_at(i, j) * rv[j];
        }
        if (den == 0) return {0.0, 0.0};
        Rational q = num / den;
        // exact sign; the double view is within one ulp of the true quotient
        double qd = rational_to_double(q);
        return {qd, std::abs(qd) * 4 * std::numeric_limits<double>::epsilon()};
    }
    // floating path: propagate entry bounds and summation roundoff
    double num = 0.0, absnum = 0.0, den = 0.0, abs_v_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        abs_v_sum += std::abs(v[i]);
        den += v[i] * v[i];
        for (int j = 0; j < n; ++j) {
            num += v[i] * a.at(i, j) * v[j];
            absnum += std::abs(v[i] * a.at(i, j) * v[j]);
        }
    }
    if (den == 0.0) return {0.0, 0.0};
    const double eps = std::numeric_limits<double>::epsilon();
    double err = (2.0 * n + 4.0) * eps * absnum + a.entry_bound() * abs_v_sum * abs_v_sum;
    double q = num / den;
    double qerr = (err + std::abs(q) * 2.0 * n * eps * den) / den;
    return {q, qerr};
}

PsdVerdict psd_verdict(const SymMatrixR& a, double tol, const EigConfig& cfg) {
    PsdVerdict out;
    out.tol = tol < 0 ? default_tol(a) : tol;
    if (a.order() == 0) {
        out.kind = PsdVerdict::Kind::Holds;
        return out;
    }
    auto [lo, hi] = min_eig_bounds(a, cfg);
    out.min_eig_lower = lo;
    out.min_eig_upper = hi;

    if (lo >= -out.tol) {
        out.kind = PsdVerdict::Kind::Holds;
        return out;
    }
    if (hi < -out.tol) {
        // extract and certify a witness
        TriWork<double> w = build_tridiag<double>(a);
        std::vector<double> v = tri_eigenvector(w, 0.5 * (lo + hi));
        auto [q, qerr] = certified_rayleigh(a, v);
        if (q + qerr < 0.0) {
            out.kind = PsdVerdict::Kind::Violated;
            out.witness = std::move(v);
            out.rayleigh = q;
            out.exact_certificate = a.exact();
            return out;
        }
        // Rayleigh certificate failed to confirm; fall through to Inconclusive
        out.detail = "witness certification inconclusive";
    }
    if (cfg.high_precision_fallback && a.order() >= 2) {
        auto [hlo, hhi] = min_eig_bounds_impl<HiFloat>(a, cfg);
        out.min_eig_lower = hlo;
        out.min_eig_upper = hhi;
        if (hlo >= -out.tol) {
            out.kind = PsdVerdict::Kind::Holds;
            return out;
        }
        if (hhi < -out.tol) {
            TriWork<double> w = build_tridiag<double>(a);
            std::vector<double> v = tri_eigenvector(w, 0.5 * (hlo + hhi));
            auto [q, qerr] = certified_rayleigh(a, v);
            if (q + qerr < 0.0) {
                out.kind = PsdVerdict::Kind::Violated;
                out.witness = std::move(v);
                out.rayleigh = q;
                out.exact_certificate = a.exact();
                return out;
            }
        }
    }
    out.kind = PsdVerdict::Kind::Inconclusive;
    return out;
}

}  // namespace fusioncheck
