#include "fusioncheck/schur.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace fusioncheck {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

using CVec = std::vector<std::complex<double>>;

/// Recursively splits a real invariant subspace (columns of basis, dim x k)
/// by seeded symmetric combinations until every block is 1-dimensional or an
/// irreducible conjugate pair handled by the skew part.
struct SimDiag {
    const FusionRing& ring;
    int m;
    std::uint64_t seed;
    std::vector<CVec> eigvecs;  // collected complex simultaneous eigenvectors

    explicit SimDiag(const FusionRing& r) : ring(r), m(r.rank()), seed(0xfc0ffee ^ (77ull * m)) {}

    std::vector<double> mat_combo_sym(const std::vector<double>& c) const {
        std::vector<double> A(static_cast<size_t>(m) * m, 0.0);
        for (int i = 0; i < m; ++i)
            for (int r = 0; r < m; ++r)
                for (int t = 0; t < m; ++t)
                    A[static_cast<size_t>(r) * m + t] +=
                        c[i] * 0.5 * (ring.m_entry(i, r, t) + ring.m_entry(i, t, r));
        return A;
    }

    std::vector<double> mat_combo_skew(const std::vector<double>& c) const {
        std::vector<double> A(static_cast<size_t>(m) * m, 0.0);
        for (int i = 0; i < m; ++i)
            for (int r = 0; r < m; ++r)
                for (int t = 0; t < m; ++t)
                    A[static_cast<size_t>(r) * m + t] +=
                        c[i] * 0.5 * (ring.m_entry(i, r, t) - ring.m_entry(i, t, r));
        return A;
    }

    std::vector<double> seeded_coeffs() {
        std::vector<double> c(m);
        for (int i = 0; i < m; ++i)
            c[i] = 1.0 + static_cast<double>(splitmix64(seed) % 1000003) / 1000003.0;
        return c;
    }

    /// basis: columns spanning an invariant subspace (size m * k, column-major)
    void split(const std::vector<std::vector<double>>& basis, int depth) {
        const int k = static_cast<int>(basis.size());
        if (k == 0) return;
        if (k == 1) {
            CVec v(m);
            for (int i = 0; i < m; ++i) v[i] = basis[0][i];
            eigvecs.push_back(std::move(v));
            return;
        }
        if (depth > 8)
            throw SchurError(SchurError::Kind::DegenerateCluster,
                             "could not split a degenerate eigenspace");

        // restrict a fresh symmetric combination to the subspace
        std::vector<double> c = seeded_coeffs();
        std::vector<double> A = mat_combo_sym(c);
        SymMatrixR R(k, SymMatrixR::EntryKind::FloatWithBound);
        std::vector<std::vector<double>> Ab(k, std::vector<double>(m, 0.0));
        for (int j = 0; j < k; ++j)
            for (int r = 0; r < m; ++r)
                for (int t = 0; t < m; ++t) Ab[j][r] += A[static_cast<size_t>(r) * m + t] * basis[j][t];
        for (int a = 0; a < k; ++a)
            for (int b = a; b < k; ++b) {
                double dot = 0.0;
                for (int r = 0; r < m; ++r) dot += basis[a][r] * Ab[b][r];
                R.set(a, b, dot);
            }
        std::vector<double> vals;
        std::vector<std::vector<double>> vecs;
        eig_all(R, vals, vecs);

        double scale = 0.0;
        for (double v : vals) scale = std::max(scale, std::abs(v));
        const double gap = 1e-7 * (scale + 1.0);

        int start = 0;
        bool made_progress = false;
        while (start < k) {
            int end = start + 1;
            while (end < k && vals[end] - vals[end - 1] <= gap) ++end;
            const int cluster = end - start;
            std::vector<std::vector<double>> sub;
            for (int t = start; t < end; ++t) {
                std::vector<double> col(m, 0.0);
                for (int j = 0; j < k; ++j)
                    for (int r = 0; r < m; ++r) col[r] += vecs[t][j] * basis[j][r];
                double norm = std::sqrt(std::inner_product(col.begin(), col.end(), col.begin(), 0.0));
                for (double& x : col) x /= norm;
                sub.push_back(std::move(col));
            }
            if (cluster < k) made_progress = true;
            if (cluster == 1) {
                split(sub, depth + 1);
            } else if (cluster == 2 && try_skew_pair(sub)) {
                // handled as a conjugate pair
            } else {
                split(sub, made_progress ? depth + 1 : depth + 2);
            }
            start = end;
        }
    }

    /// For a 2-dimensional block, the skew part of the algebra either vanishes
    /// (genuine degeneracy, retry with other coefficients) or pairs the block
    /// into conjugate complex eigenvectors.
    bool try_skew_pair(const std::vector<std::vector<double>>& basis) {
        std::vector<double> c = seeded_coeffs();
        std::vector<double> B = mat_combo_skew(c);
        double r01 = 0.0;
        std::vector<double> Bb(m, 0.0);
        for (int r = 0; r < m; ++r)
            for (int t = 0; t < m; ++t) Bb[r] += B[static_cast<size_t>(r) * m + t] * basis[1][t];
        for (int r = 0; r < m; ++r) r01 += basis[0][r] * Bb[r];
        if (std::abs(r01) < 1e-8) return false;
        CVec u(m), v(m);
        const double inv = 1.0 / std::sqrt(2.0);
        for (int r = 0; r < m; ++r) {
            u[r] = std::complex<double>(basis[0][r], -basis[1][r]) * inv;
            v[r] = std::complex<double>(basis[0][r], basis[1][r]) * inv;
        }
        eigvecs.push_back(std::move(u));
        eigvecs.push_back(std::move(v));
        return true;
    }
};

}  // namespace

CharacterTable character_table(const FusionRing& ring) {
    if (!ring.commutative())
        throw SchurError(SchurError::Kind::NotCommutative,
                         "character table requires a commutative ring");
    const int m = ring.rank();
    SimDiag sd(ring);
    std::vector<std::vector<double>> full;
    for (int j = 0; j < m; ++j) {
        std::vector<double> e(m, 0.0);
        e[j] = 1.0;
        full.push_back(std::move(e));
    }
    sd.split(full, 0);
    if (static_cast<int>(sd.eigvecs.size()) != m)
        throw SchurError(SchurError::Kind::DegenerateCluster, "eigenbasis is incomplete");

    // eigenvalues per matrix as Rayleigh quotients, with residual tracking
    CharacterTable table;
    table.m = m;
    table.lam.assign(static_cast<size_t>(m) * m, {0.0, 0.0});
    double worst = 0.0;
    for (int j = 0; j < m; ++j) {
        const CVec& v = sd.eigvecs[j];
        double vnorm2 = 0.0;
        for (const auto& x : v) vnorm2 += std::norm(x);
        for (int i = 0; i < m; ++i) {
            CVec Mv(m, {0.0, 0.0});
            for (int r = 0; r < m; ++r)
                for (int t = 0; t < m; ++t) Mv[r] += ring.m_entry(i, r, t) * v[t];
            std::complex<double> lam{0.0, 0.0};
            for (int r = 0; r < m; ++r) lam += std::conj(v[r]) * Mv[r];
            lam /= vnorm2;
            double res = 0.0;
            for (int r = 0; r < m; ++r) res += std::norm(Mv[r] - lam * v[r]);
            worst = std::max(worst, std::sqrt(res / vnorm2));
            table.lam[static_cast<size_t>(i) * m + j] = lam;
        }
    }
    table.residual = worst;
    if (worst > 1e-9 * std::max(1.0, ring.dims().d.back()))
        throw SchurError(SchurError::Kind::DegenerateCluster,
                         "simultaneous eigenvector residual too large: " + std::to_string(worst));

    // locate the Perron column (lambda_{i,j} = d_i for every i)
    int perron = -1;
    for (int j = 0; j < m; ++j) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            std::complex<double> l = table.at(i, j);
            ok = std::abs(l - std::complex<double>(ring.dim(i), 0.0)) <= 1e-6 * (1.0 + ring.dim(i));
        }
        if (ok) {
            perron = j;
            break;
        }
    }
    if (perron < 0)
        throw SchurError(SchurError::Kind::DegenerateCluster, "Perron column not identified");

    // column order: Perron first, then descending lexicographic on
    // (Re lam_{2,j}, Im lam_{2,j}, Re lam_{3,j}, ...)
    std::vector<int> order;
    for (int j = 0; j < m; ++j)
        if (j != perron) order.push_back(j);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        for (int i = 1; i < m; ++i) {
            auto la = table.at(i, a), lb = table.at(i, b);
            if (std::abs(la.real() - lb.real()) > 1e-10) return la.real() > lb.real();
            if (std::abs(la.imag() - lb.imag()) > 1e-10) return la.imag() > lb.imag();
        }
        return false;
    });
    order.insert(order.begin(), perron);

    CharacterTable sorted;
    sorted.m = m;
    sorted.residual = table.residual;
    sorted.lam.assign(static_cast<size_t>(m) * m, {0.0, 0.0});
    bool real = true;
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) {
            auto l = table.at(i, order[j]);
            if (std::abs(l.imag()) > 1e-9) real = false;
            sorted.lam[static_cast<size_t>(i) * m + j] = l;
        }
    sorted.real_valued = real;
    return sorted;
}

double nu_value(const CharacterTable& table, const std::vector<int>& jvec) {
    const int m = table.m;
    const int n = static_cast<int>(jvec.size());
    if (n < 1) throw SchurError(SchurError::Kind::IndexOutOfRange, "tuple must be nonempty");
    for (int j : jvec)
        if (j < 1 || j > m)
            throw SchurError(SchurError::Kind::IndexOutOfRange,
                             "column index " + std::to_string(j) + " out of range");
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < m; ++i) {
        std::complex<double> prod{1.0, 0.0};
        for (int k = 0; k < n; ++k) prod *= table.at(i, jvec[k] - 1);
        std::complex<double> denom = std::pow(table.at(i, 0), n - 2);
        acc += prod / denom;
    }
    double scale = std::abs(acc) + 1.0;
    if (std::abs(acc.imag()) > 1e-8 * scale)
        throw SchurError(SchurError::Kind::DegenerateCluster,
                         "nu has a non-negligible imaginary part (tuple not conjugate-closed?)");
    return acc.real();
}

SchurScanResult check_schur_full(const FusionRing& ring, const EvalConfig& cfg) {
    CharacterTable table = character_table(ring);
    const int m = table.m;
    double fp = 0.0;
    for (int i = 0; i < m; ++i) fp += ring.dim(i) * ring.dim(i);
    double tol = cfg.tol < 0
                     ? 64.0 * std::numeric_limits<double>::epsilon() * m * std::max(1.0, fp)
                     : cfg.tol;

    SchurScanResult out;
    out.min_nu = std::numeric_limits<double>::max();
    // nu is symmetric in the tuple; scanning sorted 3-tuples covers all of them
    for (int a = 1; a <= m; ++a)
        for (int b = a; b <= m; ++b)
            for (int c = b; c <= m; ++c) {
                double nu = nu_value(table, {a, b, c});
                if (nu < out.min_nu) {
                    out.min_nu = nu;
                    out.min_tuple = {a, b, c};
                }
            }
    out.verdict.tol = tol;
    out.verdict.min_eig_lower = out.min_nu;
    out.verdict.min_eig_upper = out.min_nu;
    if (out.min_nu < -tol) {
        out.verdict.kind = PsdVerdict::Kind::Violated;
        out.verdict.rayleigh = out.min_nu;
        out.verdict.detail = "nu minimized at tuple";
    } else {
        out.verdict.kind = PsdVerdict::Kind::Holds;
    }
    return out;
}

PsdVerdict check_schur(const FusionRing& ring, const EvalConfig& cfg) {
    return check_schur_full(ring, cfg).verdict;
}

}  // namespace fusioncheck
