#include "fusioncheck/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace fusioncheck {

namespace {

constexpr double kAxiomTol = 1e-12;   // equality tolerance for real-coefficient rings
constexpr double kResidualTol = 1e-9; // ||M_i d - d_i d|| <= tol * ||d||

std::string tuple_msg(const char* what, std::initializer_list<int> idx) {
    std::string s(what);
    s += " at (";
    bool first = true;
    for (int v : idx) {
        if (!first) s += ",";
        s += std::to_string(v + 1);  // 1-based in messages
        first = false;
    }
    s += ")";
    return s;
}

bool near(double a, double b) { return std::abs(a - b) <= kAxiomTol * std::max(1.0, std::abs(b)); }

}  // namespace

FusionCoeffs::FusionCoeffs(int rank, std::vector<double> tensor, std::vector<int> dual_one_based)
    : rank_(rank), tensor_(std::move(tensor)) {
    if (rank < 1) throw ValidationError(ValidationError::Kind::InvalidParams, "rank must be >= 1");
    if (tensor_.size() != static_cast<size_t>(rank) * rank * rank)
        throw ValidationError(ValidationError::Kind::InvalidParams, "tensor size != rank^3");
    if (dual_one_based.size() != static_cast<size_t>(rank))
        throw ValidationError(ValidationError::Kind::InvalidParams, "dual permutation size != rank");
    dual_.resize(rank);
    std::vector<bool> seen(rank, false);
    for (int i = 0; i < rank; ++i) {
        int d = dual_one_based[i] - 1;
        if (d < 0 || d >= rank || seen[d])
            throw ValidationError(ValidationError::Kind::InvalidParams, "dual is not a permutation");
        seen[d] = true;
        dual_[i] = d;
    }
    for (int i = 0; i < rank; ++i)
        if (dual_[dual_[i]] != i)
            throw ValidationError(ValidationError::Kind::DualAntiInvolution,
                                  tuple_msg("dual o dual != id", {i}));
    integer_entries_ = true;
    for (double v : tensor_) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw ValidationError(ValidationError::Kind::InvalidParams, "coefficients must be nonnegative finite");
        if (std::abs(v - std::round(v)) > kAxiomTol) integer_entries_ = false;
    }
}

FusionCoeffs FusionCoeffs::from_ints(int rank, const std::vector<int>& tensor,
                                     std::vector<int> dual_one_based) {
    std::vector<double> t(tensor.begin(), tensor.end());
    return FusionCoeffs(rank, std::move(t), std::move(dual_one_based));
}

long long FusionCoeffs::n_int(int i, int j, int k) const {
    return static_cast<long long>(std::llround(n(i, j, k)));
}

DimensionVector fp_dimensions(int rank, const std::vector<std::vector<double>>& matrices) {
    const int m = rank;
    // Power iteration on sum(M_i); primitive for valid rings, so convergence is geometric.
    std::vector<double> sum(static_cast<size_t>(m) * m, 0.0);
    for (const auto& M : matrices)
        for (size_t t = 0; t < sum.size(); ++t) sum[t] += M[t];

    std::vector<double> v(m, 1.0), w(m);
    const double rel_tol = 1e-13;
    const long max_iter = 1000000;
    bool converged = false;
    for (long it = 0; it < max_iter; ++it) {
        for (int r = 0; r < m; ++r) {
            double acc = 0.0;
            for (int c = 0; c < m; ++c) acc += sum[static_cast<size_t>(r) * m + c] * v[c];
            w[r] = acc;
        }
        double norm = 0.0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        if (norm == 0.0)
            throw ValidationError(ValidationError::Kind::NonIrreducible, "sum of fusion matrices is nilpotent");
        double diff = 0.0;
        for (int r = 0; r < m; ++r) {
            w[r] /= norm;
            diff = std::max(diff, std::abs(w[r] - v[r]));
        }
        v.swap(w);
        if (diff <= rel_tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw ValidationError(ValidationError::Kind::NoConvergence, "Perron iteration did not converge");
    for (double x : v)
        if (!(x > 0.0))
            throw ValidationError(ValidationError::Kind::NonIrreducible, "Perron vector not strictly positive");

    DimensionVector out;
    out.d.resize(m);
    double vnorm2 = std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
    for (int i = 0; i < m; ++i) {
        // v is the common Perron eigenvector; Rayleigh quotient is exact on it.
        double acc = 0.0;
        for (int r = 0; r < m; ++r) {
            double mv = 0.0;
            for (int c = 0; c < m; ++c) mv += matrices[i][static_cast<size_t>(r) * m + c] * v[c];
            acc += mv * v[r];
        }
        out.d[i] = acc / vnorm2;
    }
    // normalize d_1 = 1 (it already is, up to roundoff)
    for (int i = m - 1; i >= 0; --i) out.d[i] /= out.d[0];

    double vnorm = std::sqrt(vnorm2);
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
        double res = 0.0;
        for (int r = 0; r < m; ++r) {
            double mv = 0.0;
            for (int c = 0; c < m; ++c) mv += matrices[i][static_cast<size_t>(r) * m + c] * v[c];
            res += (mv - out.d[i] * v[r]) * (mv - out.d[i] * v[r]);
        }
        worst = std::max(worst, std::sqrt(res) / vnorm);
    }
    if (worst > kResidualTol)
        throw ValidationError(ValidationError::Kind::NoConvergence,
                              "dimension residual " + std::to_string(worst) + " exceeds tolerance");
    out.precision = worst;

    for (int i = 0; i < m; ++i)
        if (out.d[i] < 1.0 - 1e-9)
            throw ValidationError(ValidationError::Kind::NonIrreducible,
                                  tuple_msg("dimension below 1", {i}));

    // Certify integral dimensions: round, then require M_i d = d_i d exactly in integers.
    bool integral = true;
    std::vector<long long> di(m);
    for (int i = 0; i < m; ++i) {
        di[i] = std::llround(out.d[i]);
        if (std::abs(out.d[i] - static_cast<double>(di[i])) >= 1e-9) integral = false;
    }
    if (integral) {
        for (int i = 0; i < m && integral; ++i)
            for (int r = 0; r < m && integral; ++r) {
                long long acc = 0;
                bool int_row = true;
                for (int c = 0; c < m; ++c) {
                    double e = matrices[i][static_cast<size_t>(r) * m + c];
                    if (std::abs(e - std::round(e)) > kAxiomTol) { int_row = false; break; }
                    acc += std::llround(e) * di[c];
                }
                if (!int_row || acc != di[i] * di[r]) integral = false;
            }
    }
    out.integral = integral;
    if (integral) {
        out.d_int = di;
        for (int i = 0; i < m; ++i) out.d[i] = static_cast<double>(di[i]);
        out.precision = 0.0;
    }
    return out;
}

FusionRing validate(const FusionCoeffs& coeffs) {
    const int m = coeffs.rank();
    auto N = [&coeffs](int i, int j, int k) { return coeffs.n(i, j, k); };

    // x_1 is the unit: N_{1,j}^k = delta_{jk} and N_{i,1}^k = delta_{ik}
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
            if (!near(N(0, j, k), j == k ? 1.0 : 0.0))
                throw ValidationError(ValidationError::Kind::UnitAxiom, tuple_msg("UnitAxiom", {0, j, k}));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k)
            if (!near(N(i, 0, k), i == k ? 1.0 : 0.0))
                throw ValidationError(ValidationError::Kind::UnitAxiom, tuple_msg("UnitAxiom", {i, 0, k}));

    // trace axiom: N_{i,j}^1 = delta_{j, dual(i)}
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (!near(N(i, j, 0), j == coeffs.dual(i) ? 1.0 : 0.0))
                throw ValidationError(ValidationError::Kind::TraceAxiom, tuple_msg("TraceAxiom", {i, j}));

    // dual anti-involution: N_{i,j}^k = N_{j*,i*}^{k*}
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                if (!near(N(i, j, k), N(coeffs.dual(j), coeffs.dual(i), coeffs.dual(k))))
                    throw ValidationError(ValidationError::Kind::DualAntiInvolution,
                                          tuple_msg("DualAntiInvolution", {i, j, k}));

    // Frobenius reciprocity: N_{i,j}^k = N_{j,k*}^{i*} (derivable, validated anyway)
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                if (!near(N(i, j, k), N(j, coeffs.dual(k), coeffs.dual(i))))
                    throw ValidationError(ValidationError::Kind::FrobeniusReciprocity,
                                          tuple_msg("FrobeniusReciprocity", {i, j, k}));

    // associativity: sum_t N_{i,j}^t N_{t,k}^s = sum_t N_{j,k}^t N_{i,t}^s
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int s = 0; s < m; ++s) {
                    double lhs = 0.0, rhs = 0.0;
                    for (int t = 0; t < m; ++t) {
                        lhs += N(i, j, t) * N(t, k, s);
                        rhs += N(j, k, t) * N(i, t, s);
                    }
                    if (!near(lhs, rhs))
                        throw ValidationError(ValidationError::Kind::Associativity,
                                              tuple_msg("Associativity", {i, j, k, s}));
                }

    // cache fusion matrices, (M_i)[r][c] = N_{i,c}^r
    std::vector<std::vector<double>> matrices(m, std::vector<double>(static_cast<size_t>(m) * m));
    for (int i = 0; i < m; ++i)
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                matrices[i][static_cast<size_t>(r) * m + c] = N(i, c, r);

    // transpose(M_i) = M_{dual(i)} must hold entrywise
    for (int i = 0; i < m; ++i)
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                if (!near(matrices[i][static_cast<size_t>(r) * m + c],
                          matrices[coeffs.dual(i)][static_cast<size_t>(c) * m + r]))
                    throw ValidationError(ValidationError::Kind::DualAntiInvolution,
                                          tuple_msg("transpose(M_i) != M_dual(i)", {i, r, c}));

    DimensionVector dims = fp_dimensions(m, matrices);

    // spectral norm of M_i must match d_i (power iteration on M_i^T M_i)
    for (int i = 0; i < m; ++i) {
        std::vector<double> u(m, 1.0), t(m), w(m);
        double sigma2 = 0.0;
        for (int it = 0; it < 20000; ++it) {
            for (int r = 0; r < m; ++r) {
                double acc = 0.0;
                for (int c = 0; c < m; ++c) acc += matrices[i][static_cast<size_t>(r) * m + c] * u[c];
                t[r] = acc;
            }
            for (int c = 0; c < m; ++c) {
                double acc = 0.0;
                for (int r = 0; r < m; ++r) acc += matrices[i][static_cast<size_t>(r) * m + c] * t[r];
                w[c] = acc;
            }
            double norm = 0.0;
            for (double x : w) norm += x * x;
            norm = std::sqrt(norm);
            if (norm == 0.0) { sigma2 = 0.0; break; }
            double diff = 0.0;
            for (int c = 0; c < m; ++c) {
                w[c] /= norm;
                diff = std::max(diff, std::abs(w[c] - u[c]));
            }
            u.swap(w);
            sigma2 = norm;
            if (diff <= 1e-13) break;
        }
        double sigma = std::sqrt(sigma2);
        if (std::abs(sigma - dims.d[i]) > 1e-7 * std::max(1.0, dims.d[i]))
            throw ValidationError(ValidationError::Kind::NoConvergence,
                                  tuple_msg("operator norm disagrees with dimension", {i}));
    }

    // commutativity flag: all pairs commute
    bool comm = true;
    for (int i = 0; i < m && comm; ++i)
        for (int j = i + 1; j < m && comm; ++j) {
            for (int r = 0; r < m && comm; ++r)
                for (int c = 0; c < m; ++c) {
                    double ab = 0.0, ba = 0.0;
                    for (int t = 0; t < m; ++t) {
                        ab += matrices[i][static_cast<size_t>(r) * m + t] * matrices[j][static_cast<size_t>(t) * m + c];
                        ba += matrices[j][static_cast<size_t>(r) * m + t] * matrices[i][static_cast<size_t>(t) * m + c];
                    }
                    if (!near(ab, ba)) { comm = false; break; }
                }
        }

    return FusionRing(coeffs, std::move(matrices), std::move(dims), comm);
}

bool LocalData::all_known() const {
    for (const auto& b : blocks)
        for (const auto& e : b)
            if (!e.known) return false;
    return true;
}

LocalData local_data(const FusionRing& ring, const std::vector<int>& S) {
    if (S.empty()) throw ValidationError(ValidationError::Kind::EmptySubset, "EmptySubset");
    const int m = ring.rank();
    LocalData out;
    out.labels = S;
    std::sort(out.labels.begin(), out.labels.end());
    out.labels.erase(std::unique(out.labels.begin(), out.labels.end()), out.labels.end());
    for (int lbl : out.labels)
        if (lbl < 1 || lbl > m)
            throw ValidationError(ValidationError::Kind::IndexOutOfRange,
                                  "IndexOutOfRange: label " + std::to_string(lbl));
    out.block_count = m;
    out.s = static_cast<int>(out.labels.size());
    out.blocks.assign(m, std::vector<LocalData::Entry>(static_cast<size_t>(out.s) * out.s));
    for (int i = 0; i < m; ++i)
        for (int r = 0; r < out.s; ++r)
            for (int c = 0; c < out.s; ++c)
                out.blocks[i][static_cast<size_t>(r) * out.s + c] = {
                    ring.m_entry(i, out.labels[r] - 1, out.labels[c] - 1), true};
    out.dims = ring.dims().d;
    out.dims_integral = ring.dims().integral;
    out.dims_int = ring.dims().d_int;
    out.dual.resize(m);
    for (int i = 0; i < m; ++i) out.dual[i] = ring.dual(i);
    return out;
}

void validate_grading(const FusionRing& ring, const GradingMap& grading) {
    const int m = ring.rank();
    const int k = grading.modulus;
    if (k < 1 || grading.g.size() != static_cast<size_t>(m))
        throw ValidationError(ValidationError::Kind::InvalidParams, "grading size/modulus invalid");
    auto norm = [k](int x) { return ((x % k) + k) % k; };
    if (norm(grading.g[0]) != 0)
        throw ValidationError(ValidationError::Kind::InvalidParams, "grading: g(1) != 0");
    for (int i = 0; i < m; ++i)
        if (norm(grading.g[ring.dual(i)]) != norm(-grading.g[i]))
            throw ValidationError(ValidationError::Kind::InvalidParams,
                                  tuple_msg("grading: duality violated", {i}));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int t = 0; t < m; ++t)
                if (ring.coeffs().n(i, j, t) > 0.0 &&
                    norm(grading.g[i] + grading.g[j]) != norm(grading.g[t]))
                    throw ValidationError(ValidationError::Kind::InvalidParams,
                                          tuple_msg("grading: not multiplicative", {i, j, t}));
}

}  // namespace fusioncheck
