#include "fusioncheck/obstructions.hpp"

#include "fusioncheck/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace fusioncheck {

namespace {

double ipow(double b, int e) {
    double acc = 1.0;
    for (int i = 0; i < e; ++i) acc *= b;
    return acc;
}

/// The corner quadratics of the k7-local determinant, A_i d6^2 + B_i d6 + C_i.
struct CornerQuadratics {
    double A1, B1, C1, A2, B2, C2;
};

CornerQuadratics corner_quadratics(double d2, double d3, double d4, double d5, double d7) {
    CornerQuadratics q;
    q.A1 = d5 * d5 * d7 * d7 + 25 * d5 * d5 * d7 + 12 * d5 * d7 * d7 + 125 * d5 * d5 +
           120 * d5 * d7 + 27 * d7 * d7;
    q.B1 = -9 * (d5 * d7 - 15 * d5 - 12 * d7) * d5 * d7;
    q.C1 = -729 * d5 * d5 * d7 * d7;

    const double d5_2 = d5 * d5, d5_3 = d5_2 * d5;
    const double d7_2 = d7 * d7, d7_3 = d7_2 * d7;
    const double p234 = d2 * d3 * d4;
    const double p23 = d2 * d3, p24 = d2 * d4, p34 = d3 * d4;
    q.A2 = p234 * d5_3 * d7_3 + 67 * p234 * d5_3 * d7_2 + 32 * p234 * d5_2 * d7_3 +
           7 * p23 * d5_3 * d7_3 + 7 * p24 * d5_3 * d7_3 + 7 * p34 * d5_3 * d7_3 +
           1025 * p234 * d5_3 * d7 + 962 * p234 * d5_2 * d7_2 + 172 * p23 * d5_3 * d7_2 +
           172 * p24 * d5_3 * d7_2 + 172 * p34 * d5_3 * d7_2 + 195 * p234 * d5 * d7_3 +
           54 * p23 * d5_2 * d7_3 + 54 * p24 * d5_2 * d7_3 + 54 * p34 * d5_2 * d7_3 +
           3375 * p234 * d5_3 + 4600 * p234 * d5_2 * d7 + 665 * p23 * d5_3 * d7 +
           665 * p24 * d5_3 * d7 + 665 * p34 * d5_3 * d7 + 1833 * p234 * d5 * d7_2 +
           432 * p23 * d5_2 * d7_2 + 432 * p24 * d5_2 * d7_2 + 432 * p34 * d5_2 * d7_2 +
           216 * p234 * d7_3 + 63 * p23 * d5 * d7_3 + 63 * p24 * d5 * d7_3 + 63 * p34 * d5 * d7_3;
    q.B2 = 18 *
           (p234 * d5_2 * d7_2 + 12 * p234 * d5_2 * d7 - 7 * p234 * d5 * d7_2 -
            5 * p23 * d5_2 * d7_2 - 5 * p24 * d5_2 * d7_2 - 5 * p34 * d5_2 * d7_2 -
            405 * p234 * d5_2 - 471 * p234 * d5 * d7 - 123 * p23 * d5_2 * d7 -
            123 * p24 * d5_2 * d7 - 123 * p34 * d5_2 * d7 - 96 * p234 * d7_2 -
            33 * p23 * d5 * d7_2 - 33 * p24 * d5 * d7_2 - 33 * p34 * d5 * d7_2) *
           d5 * d7;
    q.C2 = -729 *
           (p234 * d5 * d7 + 27 * p234 * d5 + 8 * p234 * d7 + p23 * d5 * d7 + p24 * d5 * d7 +
            p34 * d5 * d7) *
           d5_2 * d7_2;
    return q;
}

/// Exact-rational mirrors of the quadratics at dims (d5, d7) = (6, 7), divided
/// by 9 as they appear squared in the full-determinant factorization.
const long long kQ1At67[3] = {-142884, 5544, 2495};  // lowest degree first

LocalData k7_local_data(const std::array<double, 6>& d2_to_d7) {
    auto blocks = k7_local_blocks_s67();
    LocalData L;
    L.labels = {6, 7};
    L.block_count = 7;
    L.s = 2;
    L.blocks.resize(7);
    for (int i = 0; i < 7; ++i) {
        L.blocks[i].resize(4);
        for (int t = 0; t < 4; ++t) L.blocks[i][t] = {static_cast<double>(blocks[i][t]), true};
    }
    L.dims = {1.0};
    for (double d : d2_to_d7) L.dims.push_back(d);
    L.dual = {0, 1, 2, 3, 4, 5, 6};
    bool integral = true;
    for (double d : L.dims) integral &= std::abs(d - std::round(d)) < 1e-12;
    L.dims_integral = integral;
    if (integral)
        for (double d : L.dims) L.dims_int.push_back(std::llround(d));
    return L;
}

}  // namespace

std::optional<std::array<int, 3>> two_gen_obstruction(const TwoGenParams& p, int n_max) {
    if (p.l < 1 || p.d2 < 1 || p.d3 < 1 || p.s < 0 || p.t < 0 || p.k < 0 || n_max < 2)
        throw CriteriaError(CriteriaError::Kind::InvalidParams, "two_gen_obstruction: invalid parameters");
    for (int n = 2; n <= n_max; ++n) {
        const double pow2 = ipow(p.d2, n - 2), pow3 = ipow(p.d3, n - 2);
        for (int a = 1; a <= n - 1; ++a) {
            const int b = n - a;
            double lhs = (ipow(p.s, a) * ipow(p.t, b) / pow2 + ipow(p.l, a) * ipow(p.k, b) / pow3 + 1.0) *
                         (ipow(p.s, b) * ipow(p.t, a) / pow2 + ipow(p.l, b) * ipow(p.k, a) / pow3 + 1.0);
            double rhs = ipow(p.l, n) / pow2 + ipow(p.t, n) / pow3;
            if (lhs - rhs * rhs < 0.0) return std::array<int, 3>{n, a, b};
        }
    }
    return std::nullopt;
}

std::optional<std::array<int, 3>> two_gen_obstruction_nsd(double s, double tau3, double d2,
                                                          int n_max) {
    if (s < 0 || tau3 < 0 || d2 < 1 || n_max < 2)
        throw CriteriaError(CriteriaError::Kind::InvalidParams, "two_gen_obstruction_nsd: invalid parameters");
    for (int n = 2; n <= n_max; ++n) {
        const double pw = ipow(d2, n - 2);
        for (int a = 1; a <= n - 1; ++a) {
            const int b = n - a;
            double v = 2.0 * ipow(s, n) / pw + 1.0 -
                       (ipow(s, a) * ipow(tau3, b) + ipow(s, b) * ipow(tau3, a)) / pw;
            if (v < 0.0) return std::array<int, 3>{n, a, b};
        }
    }
    return std::nullopt;
}

FusionRing r4k_ring(int k) {
    if (k < 1) throw CriteriaError(CriteriaError::Kind::InvalidParams, "r4k: k >= 1 required");
    // N_{i,j}^t tensors from the family's fusion rules
    const int m = 4;
    std::vector<int> N(m * m * m, 0);
    auto at = [&N](int i, int j, int t) -> int& { return N[(i * 4 + j) * 4 + t]; };
    for (int j = 0; j < 4; ++j) at(0, j, j) = at(j, 0, j) = 1;
    // x2^2 = 1 + k x2 + x4
    at(1, 1, 0) = 1; at(1, 1, 1) = k; at(1, 1, 3) = 1;
    // x2 x3 = k x3 + x4 = x3 x2
    at(1, 2, 2) = k; at(1, 2, 3) = 1;
    at(2, 1, 2) = k; at(2, 1, 3) = 1;
    // x2 x4 = x2 + x3 + k x4 = x4 x2
    at(1, 3, 1) = 1; at(1, 3, 2) = 1; at(1, 3, 3) = k;
    at(3, 1, 1) = 1; at(3, 1, 2) = 1; at(3, 1, 3) = k;
    // x3^2 = 1 + k x2
    at(2, 2, 0) = 1; at(2, 2, 1) = k;
    // x3 x4 = x2 + k x4 = x4 x3
    at(2, 3, 1) = 1; at(2, 3, 3) = k;
    at(3, 2, 1) = 1; at(3, 2, 3) = k;
    // x4^2 = 1 + k x2 + k x3 + x4
    at(3, 3, 0) = 1; at(3, 3, 1) = k; at(3, 3, 2) = k; at(3, 3, 3) = 1;
    FusionRing ring = validate(FusionCoeffs::from_ints(4, N, {1, 2, 3, 4}));
    ring.set_name("r4_" + std::to_string(k));
    return ring;
}

double r4k_f(int k, double d3) {
    const double k3 = ipow(static_cast<double>(k), 3);
    return d3 * d3 * d3 - k3 * d3 * d3 + (ipow(static_cast<double>(k), 4) - 1.0) * d3 + k3;
}

R4kReport r4k_check(int k, const EvalConfig& cfg) {
    FusionRing ring = r4k_ring(k);
    R4kReport rep;
    rep.d2 = ring.dim(1);
    rep.d3 = ring.dim(2);
    rep.f_value = r4k_f(k, rep.d3);

    // relabel x2 <-> x3 so that x2 x2* = 1 + l x3 matches the two-generator form
    const int perm[4] = {0, 2, 1, 3};
    std::vector<int> N(4 * 4 * 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int t = 0; t < 4; ++t) {
                int pi = perm[i], pj = perm[j], pt = perm[t];
                N[(i * 4 + j) * 4 + t] =
                    static_cast<int>(std::llround(ring.coeffs().n(pi, pj, pt)));
            }
    FusionRing rel = validate(FusionCoeffs::from_ints(4, N, {1, 2, 3, 4}));

    // parameters read off the relabeled ring, then the inequality scan
    TwoGenParams p;
    p.s = rel.coeffs().n(1, 1, 1);
    p.l = rel.coeffs().n(1, 1, 2);
    p.t = rel.coeffs().n(2, 2, 1);
    p.k = rel.coeffs().n(2, 2, 2);
    p.d2 = rel.dim(1);
    p.d3 = rel.dim(2);
    auto nab = two_gen_obstruction(p, 6);
    if (nab) {
        rep.nab = *nab;
        rep.scan_found = true;
    }

    // direct reduced-twisted evaluation at the witness pattern (full data, no unknowns)
    int n = rep.scan_found ? rep.nab[0] : 3;
    int a = rep.scan_found ? rep.nab[1] : 1;
    std::vector<std::vector<int>> perms;
    for (int j = 0; j < n; ++j)
        perms.push_back(j < a ? std::vector<int>{0, 1} : std::vector<int>{1, 0});
    LocalData L = local_data(rel, {2, 3});
    SymMatrixR mat = reduced_twisted_matrix(L, n, TwistPattern::from_permutations(2, perms), cfg);
    rep.verdict = check_matrix(mat, cfg);
    return rep;
}

K7Perturbation k7_perturbation(double d2, double d3, double d4, double d5, double d7) {
    if (d2 < 1 || d3 < 1 || d4 < 1 || d5 < 1 || d7 < 1)
        throw CriteriaError(CriteriaError::Kind::InvalidParams, "k7_perturbation: dimensions must be >= 1");
    CornerQuadratics q = corner_quadratics(d2, d3, d4, d5, d7);
    K7Perturbation out;
    double disc1 = q.B1 * q.B1 - 4 * q.A1 * q.C1;
    double disc2 = q.B2 * q.B2 - 4 * q.A2 * q.C2;
    out.disc1_ok = disc1 >= 0;
    out.disc2_ok = disc2 >= 0;
    if (out.disc1_ok) out.Q1p = (-q.B1 + std::sqrt(disc1)) / (2 * q.A1);
    if (out.disc2_ok) out.Q2p = (-q.B2 + std::sqrt(disc2)) / (2 * q.A2);
    out.threshold = std::max(out.Q1p, out.Q2p);
    return out;
}

double k7_corner_det(double d2, double d3, double d4, double d5, double d6, double d7) {
    CornerQuadratics q = corner_quadratics(d2, d3, d4, d5, d7);
    double f1 = q.A1 * d6 * d6 + q.B1 * d6 + q.C1;
    double f2 = q.A2 * d6 * d6 + q.B2 * d6 + q.C2;
    return f1 * f1 * f2 /
           (d2 * d3 * d4 * ipow(d5, 7) * ipow(d6, 6) * ipow(d7, 7));
}

Rational k7_corner_det_exact(const Rational& d2, const Rational& d3, const Rational& d4,
                             const Rational& d5, const Rational& d6, const Rational& d7) {
    // same factored form, evaluated exactly
    Rational A1 = d5 * d5 * d7 * d7 + 25 * d5 * d5 * d7 + 12 * d5 * d7 * d7 + 125 * d5 * d5 +
                  120 * d5 * d7 + 27 * d7 * d7;
    Rational B1 = -9 * (d5 * d7 - 15 * d5 - 12 * d7) * d5 * d7;
    Rational C1 = -729 * d5 * d5 * d7 * d7;
    Rational d5_2 = d5 * d5, d5_3 = d5_2 * d5, d7_2 = d7 * d7, d7_3 = d7_2 * d7;
    Rational p234 = d2 * d3 * d4, p23 = d2 * d3, p24 = d2 * d4, p34 = d3 * d4;
    Rational A2 = p234 * d5_3 * d7_3 + 67 * p234 * d5_3 * d7_2 + 32 * p234 * d5_2 * d7_3 +
                  7 * p23 * d5_3 * d7_3 + 7 * p24 * d5_3 * d7_3 + 7 * p34 * d5_3 * d7_3 +
                  1025 * p234 * d5_3 * d7 + 962 * p234 * d5_2 * d7_2 + 172 * p23 * d5_3 * d7_2 +
                  172 * p24 * d5_3 * d7_2 + 172 * p34 * d5_3 * d7_2 + 195 * p234 * d5 * d7_3 +
                  54 * p23 * d5_2 * d7_3 + 54 * p24 * d5_2 * d7_3 + 54 * p34 * d5_2 * d7_3 +
                  3375 * p234 * d5_3 + 4600 * p234 * d5_2 * d7 + 665 * p23 * d5_3 * d7 +
                  665 * p24 * d5_3 * d7 + 665 * p34 * d5_3 * d7 + 1833 * p234 * d5 * d7_2 +
                  432 * p23 * d5_2 * d7_2 + 432 * p24 * d5_2 * d7_2 + 432 * p34 * d5_2 * d7_2 +
                  216 * p234 * d7_3 + 63 * p23 * d5 * d7_3 + 63 * p24 * d5 * d7_3 +
                  63 * p34 * d5 * d7_3;
    Rational B2 = 18 *
                  (p234 * d5_2 * d7_2 + 12 * p234 * d5_2 * d7 - 7 * p234 * d5 * d7_2 -
                   5 * p23 * d5_2 * d7_2 - 5 * p24 * d5_2 * d7_2 - 5 * p34 * d5_2 * d7_2 -
                   405 * p234 * d5_2 - 471 * p234 * d5 * d7 - 123 * p23 * d5_2 * d7 -
                   123 * p24 * d5_2 * d7 - 123 * p34 * d5_2 * d7 - 96 * p234 * d7_2 -
                   33 * p23 * d5 * d7_2 - 33 * p24 * d5 * d7_2 - 33 * p34 * d5 * d7_2) *
                  d5 * d7;
    Rational C2 = -729 *
                  (p234 * d5 * d7 + 27 * p234 * d5 + 8 * p234 * d7 + p23 * d5 * d7 +
                   p24 * d5 * d7 + p34 * d5 * d7) *
                  d5_2 * d7_2;
    Rational f1 = A1 * d6 * d6 + B1 * d6 + C1;
    Rational f2 = A2 * d6 * d6 + B2 * d6 + C2;
    Rational denom = d2 * d3 * d4;
    Rational d5p = 1, d6p = 1, d7p = 1;
    for (int i = 0; i < 7; ++i) d5p *= d5;
    for (int i = 0; i < 6; ++i) d6p *= d6;
    for (int i = 0; i < 7; ++i) d7p *= d7;
    return f1 * f1 * f2 / (denom * d5p * d6p * d7p);
}

SymMatrixR k7_local_t3(const std::array<double, 6>& d2_to_d7) {
    LocalData L = k7_local_data(d2_to_d7);
    EvalConfig cfg;
    return localized_matrix(L, 3, cfg);
}

std::vector<Rational> k7_local_t3_exact(const std::array<Rational, 6>& d2_to_d7) {
    auto blocks = k7_local_blocks_s67();
    std::vector<Rational> dims = {Rational(1)};
    for (const auto& d : d2_to_d7) dims.push_back(d);
    std::vector<Rational> T(64, Rational(0));
    for (int i = 0; i < 7; ++i) {
        const auto& B = blocks[i];
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) {
                long long prod = B[((r >> 2) & 1) * 2 + ((c >> 2) & 1)] *
                                 B[((r >> 1) & 1) * 2 + ((c >> 1) & 1)] *
                                 B[(r & 1) * 2 + (c & 1)];
                if (prod) T[r * 8 + c] += Rational(prod) / dims[i];
            }
    }
    return T;
}

std::array<double, 5> k7_full_det_quartic() {
    // p(x) = det(T_3^S at dims (1,5,5,5,6,x,7)) * x^8 is a degree-8 polynomial;
    // interpolate it exactly, peel off the known squared quadratic factor, and
    // normalize. Nine nodes pin the polynomial; the division enforces the
    // factorization, failing loudly on any transcription drift.
    std::vector<Rational> xs, ys;
    for (int x = 1; x <= 9; ++x) {
        Rational rx(x);
        std::array<Rational, 6> dims = {Rational(5), Rational(5), Rational(5),
                                        Rational(6), rx,         Rational(7)};
        std::vector<Rational> T = k7_local_t3_exact(dims);
        Rational det = rat_det(T, 8);
        Rational x8 = 1;
        for (int i = 0; i < 8; ++i) x8 *= rx;
        xs.push_back(rx);
        ys.push_back(det * x8);
    }
    RatPoly p = rat_interpolate(xs, ys);
    while (p.size() > 9) p.pop_back();
    RatPoly q1{Rational(kQ1At67[0]), Rational(kQ1At67[1]), Rational(kQ1At67[2])};
    RatPoly q1sq(5, Rational(0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q1sq[i + j] += q1[i] * q1[j];
    RatPoly quartic = rat_poly_exact_divide(p, q1sq);
    // scale so the leading coefficient is 1 in doubles of the printed size
    std::array<double, 5> out{};
    for (int i = 0; i < 5; ++i) out[i] = rational_to_double(quartic[i]);
    return out;
}

double k7_sign_change_d6(double lo, double hi, const EvalConfig& cfg) {
    auto lam_min_neg = [&cfg](double d6) {
        SymMatrixR T = k7_local_t3({5, 5, 5, 6, d6, 7});
        auto [l, h] = min_eig_bounds(T, cfg.eig);
        return 0.5 * (l + h) < 0.0;
    };
    if (!lam_min_neg(lo) || lam_min_neg(hi))
        throw CriteriaError(CriteriaError::Kind::InvalidParams,
                            "k7_sign_change_d6: bracket does not straddle the sign change");
    for (int it = 0; it < 100 && hi - lo > 1e-10; ++it) {
        double mid = 0.5 * (lo + hi);
        if (lam_min_neg(mid))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

SymMatrixR orbifold_scaled(const LocalData& L, long long n, int ell, const EvalConfig& cfg) {
    if (ell < 1) throw CriteriaError(CriteriaError::Kind::InvalidParams, "orbifold: ell >= 1");
    SymMatrixR base = localized_matrix(L, n, cfg);
    return base.scaled(static_cast<double>(ell) * ell);
}

std::optional<std::array<int, 3>> graph_family_check(const GraphFamilyParams& p, int n_max) {
    if (p.ell < 1 || p.d2 <= 1 || n_max < 2)
        throw CriteriaError(CriteriaError::Kind::InvalidParams, "graph_family_check: invalid parameters");
    const double M = p.M();
    const double l = p.ell;
    const double dd = p.d2 * p.d2 - 1.0;
    for (int n = 2; n <= n_max; ++n) {
        for (int a = 1; a <= n - 1; ++a) {
            const int b = n - a;
            double lhs = (ipow(l, 2 * a - 2) * ipow(M, b) / ipow(dd, n - 2) + 1.0) *
                         (ipow(l, 2 * b - 2) * ipow(M, a) / ipow(dd, n - 2) + 1.0);
            double rhs = ipow(l, 2 * n) / ipow(p.d2, 2 * n - 4);
            if (lhs - rhs < 0.0) return std::array<int, 3>{n, a, b};
        }
    }
    return std::nullopt;
}

bool cor56_check(const GraphFamilyParams& p) {
    const double M = p.M();
    const double lhs = std::sqrt(2.0) * M / p.ell;
    const double mid = p.d2 - 1.0 / p.d2;
    const double top = p.ell * p.ell / std::sqrt(2.0);
    return lhs < mid && mid < p.d2 && p.d2 < top;
}

double remark55_dim_bound(double delta_sq, int ell) {
    const double l2 = static_cast<double>(ell) * ell;
    if (l2 * l2 < delta_sq)
        throw GraphError(GraphError::Kind::HypothesisFailed, "remark55: requires ell^2 >= delta");
    return (delta_sq - 1.0) / ell * std::sqrt(l2 * l2 / delta_sq - 1.0) + l2 * l2 + l2 + 2.0;
}

namespace {

struct GraphIndex {
    std::vector<std::string> order;      // even then odd
    std::map<std::string, int> id;      // label -> index
    std::vector<std::map<int, int>> adj;  // neighbor -> multiplicity
    int root = -1;
};

GraphIndex index_graph(const BipartiteGraph& g) {
    GraphIndex gi;
    for (const auto& v : g.even) gi.order.push_back(v);
    for (const auto& v : g.odd) gi.order.push_back(v);
    for (size_t i = 0; i < gi.order.size(); ++i) {
        if (gi.id.count(gi.order[i]))
            throw GraphError(GraphError::Kind::NotBipartite, "duplicate vertex " + gi.order[i]);
        gi.id[gi.order[i]] = static_cast<int>(i);
    }
    gi.adj.resize(gi.order.size());
    const int n_even = static_cast<int>(g.even.size());
    for (const auto& e : g.edges) {
        auto iu = gi.id.find(e.u), iv = gi.id.find(e.v);
        if (iu == gi.id.end() || iv == gi.id.end())
            throw GraphError(GraphError::Kind::NotBipartite, "edge references unknown vertex");
        bool ue = iu->second < n_even, ve = iv->second < n_even;
        if (ue == ve)
            throw GraphError(GraphError::Kind::NotBipartite,
                             "edge " + e.u + "-" + e.v + " joins same-color vertices");
        if (e.mult < 0) throw GraphError(GraphError::Kind::NotBipartite, "negative multiplicity");
        gi.adj[iu->second][iv->second] += e.mult;
        gi.adj[iv->second][iu->second] += e.mult;
    }
    auto ir = gi.id.find(g.root);
    if (ir == gi.id.end()) throw GraphError(GraphError::Kind::BadRoot, "root vertex not found");
    gi.root = ir->second;
    return gi;
}

}  // namespace

DimensionVector graph_dims(const BipartiteGraph& g) {
    GraphIndex gi = index_graph(g);
    const int n = static_cast<int>(gi.order.size());
    // connectivity
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {gi.root};
    seen[gi.root] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [w, mult] : gi.adj[v])
            if (mult > 0 && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    for (bool s : seen)
        if (!s) throw GraphError(GraphError::Kind::Disconnected, "graph is not connected");

    std::vector<double> v(n, 1.0), w(n);
    double mu = 0.0;
    for (int it = 0; it < 200000; ++it) {
        for (int r = 0; r < n; ++r) {
            double acc = 0.0;
            for (const auto& [t, mult] : gi.adj[r]) acc += mult * v[t];
            w[r] = acc;
        }
        double norm = 0.0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        double diff = 0.0;
        for (int r = 0; r < n; ++r) {
            w[r] /= norm;
            diff = std::max(diff, std::abs(w[r] - v[r]));
        }
        v.swap(w);
        mu = norm;
        if (diff < 1e-14) break;
    }
    (void)mu;
    DimensionVector out;
    out.d.resize(n);
    for (int r = 0; r < n; ++r) out.d[r] = v[r] / v[gi.root];
    out.precision = 1e-12;
    out.integral = false;
    return out;
}

PsdVerdict graph_local_check(const LocalData& L, long long n, const EvalConfig& cfg) {
    return check_matrix(localized_matrix(L, n, cfg), cfg);
}

std::optional<GraphFamilyParams> extract_family(const BipartiteGraph& g) {
    GraphIndex gi;
    try {
        gi = index_graph(g);
    } catch (const GraphError&) {
        return std::nullopt;
    }
    // root must have a single neighbor x2 joined by a simple edge
    const auto& rn = gi.adj[gi.root];
    if (rn.size() != 1 || rn.begin()->second != 1) return std::nullopt;
    int x2 = rn.begin()->first;
    // x2 sees exactly the root and x3
    if (gi.adj[x2].size() != 2) return std::nullopt;
    int x3 = -1, ell = 0;
    for (const auto& [vtx, mult] : gi.adj[x2])
        if (vtx != gi.root) {
            x3 = vtx;
            ell = mult;
        }
    if (x3 < 0 || ell < 1) return std::nullopt;
    GraphFamilyParams p;
    p.ell = ell;
    for (const auto& [vtx, mult] : gi.adj[x3])
        if (vtx != x2) p.mults.push_back(mult);
    std::sort(p.mults.begin(), p.mults.end());
    DimensionVector dims = graph_dims(g);
    p.d2 = dims.d[x2];
    return p;
}

}  // namespace fusioncheck
