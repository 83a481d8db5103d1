#include "fusioncheck/kron.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace fusioncheck {

namespace {

/// Applies the m x m factor A on tensor slot `slot` of x (n slots total).
void apply_slot(const std::vector<double>& A, int m, int n, int slot,
                const std::vector<double>& x, std::vector<double>& y) {
    // index = outer * (m * inner_sz) + a * inner_sz + inner, slot counted from the left
    std::size_t inner_sz = 1;
    for (int t = slot + 1; t < n; ++t) inner_sz *= static_cast<std::size_t>(m);
    std::size_t outer_sz = x.size() / (inner_sz * m);
    for (std::size_t outer = 0; outer < outer_sz; ++outer) {
        const double* xin = x.data() + outer * m * inner_sz;
        double* yout = y.data() + outer * m * inner_sz;
        for (int a = 0; a < m; ++a) {
            double* dst = yout + static_cast<std::size_t>(a) * inner_sz;
            std::memset(dst, 0, inner_sz * sizeof(double));
            const double* arow = A.data() + static_cast<std::size_t>(a) * m;
            for (int b = 0; b < m; ++b) {
                const double coef = arow[b];
                if (coef == 0.0) continue;
                const double* src = xin + static_cast<std::size_t>(b) * inner_sz;
                for (std::size_t t = 0; t < inner_sz; ++t) dst[t] += coef * src[t];
            }
        }
    }
}

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t KronOperator::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(m));
    mix(static_cast<std::uint64_t>(n));
    auto mixd = [&mix](double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        mix(bits);
    };
    for (double w : weights) mixd(w);
    for (const auto& f : factors)
        for (double v : f) mixd(v);
    return h;
}

std::vector<double> kron_apply(const KronOperator& op, const std::vector<double>& x) {
    if (x.size() != op.dim()) throw std::invalid_argument("kron_apply: dimension mismatch");
    std::vector<double> acc(x.size(), 0.0), cur, next(x.size());
    for (std::size_t i = 0; i < op.weights.size(); ++i) {
        cur = x;
        for (int slot = 0; slot < op.n; ++slot) {
            apply_slot(op.factors[i], op.m, op.n, slot, cur, next);
            cur.swap(next);
        }
        const double w = op.weights[i];
        for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += w * cur[t];
    }
    return acc;
}

std::pair<double, double> kron_min_eig(const KronOperator& op, const EigConfig& cfg) {
    const std::size_t dim = op.dim();
    if (dim == 0) return {0.0, 0.0};
    const int max_iter = static_cast<int>(std::min<std::size_t>(dim, cfg.lanczos_iters));

    // deterministic start seeded by (m, n, operator content)
    std::uint64_t seed = op.fingerprint();
    std::vector<double> v(dim);
    double norm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        v[i] = static_cast<double>(splitmix64(seed) % 1000003) / 1000003.0 - 0.5;
        norm += v[i] * v[i];
    }
    norm = std::sqrt(norm);
    for (auto& t : v) t /= norm;

    std::vector<std::vector<double>> basis;
    std::vector<double> alpha, beta;  // Lanczos tridiagonal
    basis.push_back(v);
    std::vector<double> w;
    double prev_theta = std::numeric_limits<double>::max();
    for (int it = 0; it < max_iter; ++it) {
        w = kron_apply(op, basis.back());
        double a = 0.0;
        for (std::size_t i = 0; i < dim; ++i) a += w[i] * basis.back()[i];
        alpha.push_back(a);
        // full reorthogonalization, twice for stability
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : basis) {
                double dot = 0.0;
                for (std::size_t i = 0; i < dim; ++i) dot += w[i] * q[i];
                for (std::size_t i = 0; i < dim; ++i) w[i] -= dot * q[i];
            }
        double b = 0.0;
        for (double t : w) b += t * t;
        b = std::sqrt(b);
        if (b < 1e-14 * (std::abs(a) + 1.0)) break;  // invariant subspace found
        beta.push_back(b);
        for (auto& t : w) t /= b;
        basis.push_back(w);
        // stop once the smallest Ritz value stalls
        if (it >= 32 && (it & 15) == 0) {
            const int k = static_cast<int>(alpha.size());
            SymMatrixR tri(k, SymMatrixR::EntryKind::FloatWithBound);
            double scale = 0.0;
            for (int i = 0; i < k; ++i) {
                tri.set(i, i, alpha[i]);
                if (i + 1 < k) tri.set(i, i + 1, beta[i]);
                scale = std::max(scale, std::abs(alpha[i]));
            }
            auto [lo, hi] = min_eig_bounds(tri, cfg);
            double theta = 0.5 * (lo + hi);
            if (std::abs(theta - prev_theta) < 1e-13 * (scale + 1.0)) break;
            prev_theta = theta;
        }
    }

    // smallest Ritz value of the Lanczos tridiagonal
    const int k = static_cast<int>(alpha.size());
    SymMatrixR tri(k, SymMatrixR::EntryKind::FloatWithBound);
    for (int i = 0; i < k; ++i) {
        tri.set(i, i, alpha[i]);
        if (i + 1 < k) tri.set(i, i + 1, beta[i]);
    }
    std::vector<double> vals;
    std::vector<std::vector<double>> vecs;
    eig_all(tri, vals, vecs);
    double theta = vals[0];
    // Ritz vector in the original space and its residual
    std::vector<double> y(dim, 0.0);
    for (int j = 0; j < k; ++j)
        for (std::size_t i = 0; i < dim; ++i) y[i] += vecs[0][j] * basis[j][i];
    double ynorm = 0.0;
    for (double t : y) ynorm += t * t;
    ynorm = std::sqrt(ynorm);
    for (auto& t : y) t /= ynorm;
    std::vector<double> Ay = kron_apply(op, y);
    double resid = 0.0, q = 0.0;
    for (std::size_t i = 0; i < dim; ++i) q += Ay[i] * y[i];
    for (std::size_t i = 0; i < dim; ++i) {
        double r = Ay[i] - q * y[i];
        resid += r * r;
    }
    resid = std::sqrt(resid);
    // An eigenvalue lies within resid of q; q itself upper-bounds lambda_min.
    return {std::min(theta, q) - resid, q};
}

}  // namespace fusioncheck
