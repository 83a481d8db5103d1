#include "oracle.hpp"

#include "fusioncheck/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

using fusioncheck::FusionCoeffs;
using fusioncheck::FusionRing;
using fusioncheck::KronOperator;
using fusioncheck::SymMatrixR;

std::uint64_t next_rand(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::vector<Rational> char_poly(const std::vector<Rational>& a, int n) {
    // Faddeev-LeVerrier: integer-friendly and fully exact.
    std::vector<Rational> M(a), c(n + 1, Rational(0));
    c[n] = 1;
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += M[i * n + i];
    c[n - 1] = -tr;
    std::vector<Rational> tmp(n * n);
    for (int k = 2; k <= n; ++k) {
        // M <- A (M + c_{n-k+1} I)
        std::vector<Rational> shifted(M);
        for (int i = 0; i < n; ++i) shifted[i * n + i] += c[n - k + 1];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational acc(0);
                for (int t = 0; t < n; ++t) acc += a[i * n + t] * shifted[t * n + j];
                tmp[i * n + j] = acc;
            }
        M.swap(tmp);
        Rational trk(0);
        for (int i = 0; i < n; ++i) trk += M[i * n + i];
        c[n - k] = -trk / k;
    }
    return c;  // p(x) = sum c_i x^i, monic
}

namespace {

Rational eval(const std::vector<Rational>& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

/// Sturm chain sign-variation count at x.
int variations(const std::vector<std::vector<Rational>>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

std::vector<Rational> derivative(const std::vector<Rational>& p) {
    std::vector<Rational> d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return d;
}

std::vector<Rational> poly_neg_rem(const std::vector<Rational>& num,
                                   const std::vector<Rational>& den) {
    std::vector<Rational> rem(num);
    while (rem.size() >= den.size()) {
        Rational q = rem.back() / den.back();
        size_t off = rem.size() - den.size();
        for (size_t i = 0; i < den.size(); ++i) rem[off + i] -= q * den[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.empty()) break;
    }
    for (auto& r : rem) r = -r;
    return rem;
}

}  // namespace

std::pair<Rational, Rational> smallest_root(const std::vector<Rational>& poly,
                                            const Rational& width) {
    std::vector<Rational> p(poly);
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.size() < 2) throw std::invalid_argument("smallest_root: constant polynomial");

    std::vector<std::vector<Rational>> chain{p, derivative(p)};
    while (chain.back().size() > 1) {
        auto rem = poly_neg_rem(chain[chain.size() - 2], chain.back());
        if (rem.empty()) break;
        chain.push_back(std::move(rem));
    }

    // Cauchy bound on root magnitudes
    Rational bound(1);
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Rational q = abs(p[i] / p.back());
        if (q > bound) bound = q;
    }
    bound += 1;
    Rational lo = -bound, hi = bound;
    const int total = variations(chain, lo) - variations(chain, hi);
    if (total < 1) throw std::runtime_error("smallest_root: no real roots located");
    // keep at least one root in (lo, mid]; the smallest one stays bracketed
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        int left = variations(chain, lo) - variations(chain, mid);
        if (left >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

std::pair<double, double> char_poly_min_eig(const SymMatrixR& a, double width) {
    const int n = a.order();
    std::vector<Rational> ra(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            ra[static_cast<size_t>(i) * n + j] = fusioncheck::rational_from_double(a.at(i, j));
    auto poly = char_poly(ra, n);
    auto [lo, hi] = smallest_root(poly, fusioncheck::rational_from_double(width));
    return {fusioncheck::rational_to_double(lo), fusioncheck::rational_to_double(hi)};
}

std::vector<double> materialize(const KronOperator& op) {
    const std::size_t dim = op.dim();
    std::vector<double> out(dim * dim, 0.0);
    std::vector<std::size_t> digits(op.n);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            double acc = 0.0;
            for (size_t i = 0; i < op.weights.size(); ++i) {
                double prod = op.weights[i];
                std::size_t rr = r, cc = c;
                for (int t = op.n - 1; t >= 0; --t) {
                    std::size_t rd = rr % op.m, cd = cc % op.m;
                    rr /= op.m;
                    cc /= op.m;
                    prod *= op.factors[i][rd * op.m + cd];
                }
                acc += prod;
            }
            out[r * dim + c] = acc;
        }
    return out;
}

namespace {

/// Exhaustive self-dual rank-3 candidates with entries <= 3; unit, trace and
/// Frobenius constraints are built in, associativity filtered by the validator.
void enumerate_rank3(std::vector<FusionRing>& pool) {
    for (int n222 = 0; n222 <= 3; ++n222)
        for (int n223 = 0; n223 <= 3; ++n223)
            for (int n233 = 0; n233 <= 3; ++n233)
                for (int n333 = 0; n333 <= 3; ++n333) {
                    std::vector<int> N(27, 0);
                    auto at = [&N](int i, int j, int k) -> int& { return N[(i * 3 + j) * 3 + k]; };
                    for (int j = 0; j < 3; ++j) at(0, j, j) = at(j, 0, j) = 1;
                    at(1, 1, 0) = 1;
                    at(2, 2, 0) = 1;
                    at(1, 1, 1) = n222;
                    at(1, 1, 2) = n223;
                    at(1, 2, 1) = n223;
                    at(2, 1, 1) = n223;
                    at(1, 2, 2) = n233;
                    at(2, 1, 2) = n233;
                    at(2, 2, 1) = n233;
                    at(2, 2, 2) = n333;
                    try {
                        pool.push_back(fusioncheck::validate(FusionCoeffs::from_ints(3, N, {1, 2, 3})));
                        pool.back().set_name("rank3_" + std::to_string(n222) + std::to_string(n223) +
                                             std::to_string(n233) + std::to_string(n333));
                    } catch (const fusioncheck::ValidationError&) {
                        // rejected
                    }
                }
}

FusionRing fib_family(int a) {
    // x2^2 = 1 + a x2
    std::vector<int> N = {1, 0, 0, 1, 0, 1, 1, a};
    FusionRing r = fusioncheck::validate(FusionCoeffs::from_ints(2, N, {1, 2}));
    r.set_name("rank2_a" + std::to_string(a));
    return r;
}

FusionRing z2z2() {
    std::vector<int> N(64, 0);
    auto at = [&N](int i, int j, int k) -> int& { return N[(i * 4 + j) * 4 + k]; };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) at(i, j, i ^ j) = 1;
    FusionRing r = fusioncheck::validate(FusionCoeffs::from_ints(4, N, {1, 2, 3, 4}));
    r.set_name("z2z2");
    return r;
}

}  // namespace

std::vector<FusionRing> small_ring_pool() {
    std::vector<FusionRing> pool;
    for (int n = 1; n <= 5; ++n) pool.push_back(fusioncheck::fixture_cyclic(n));
    pool.push_back(z2z2());
    for (int a = 0; a <= 3; ++a) pool.push_back(fib_family(a));
    for (int n = 2; n <= 4; ++n) pool.push_back(fusioncheck::fixture_near_group(n));
    enumerate_rank3(pool);
    return pool;
}

std::vector<FusionRing> random_small_rings(int count, std::uint64_t seed) {
    std::vector<FusionRing> pool = small_ring_pool();
    std::vector<FusionRing> out;
    std::uint64_t state = seed;
    for (int i = 0; i < count; ++i)
        out.push_back(pool[next_rand(state) % pool.size()]);
    return out;
}

}  // namespace oracle
