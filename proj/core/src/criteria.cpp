#include "fusioncheck/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <sstream>

namespace fusioncheck {

namespace {

constexpr double kZeroTol = 1e-14;

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

/// Decomposes packed tensor indices into base-m digit strings once.
std::vector<int> digit_table(std::size_t count, int m, int n) {
    std::vector<int> digits(count * n);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t rest = idx;
        for (int t = n - 1; t >= 0; --t) {
            digits[idx * n + t] = static_cast<int>(rest % m);
            rest /= m;
        }
    }
    return digits;
}

bool blocks_integral(const LocalData& L) {
    for (const auto& b : L.blocks)
        for (const auto& e : b) {
            if (!e.known) return false;
            if (std::abs(e.value - std::round(e.value)) > 1e-12) return false;
        }
    return true;
}

double pow_by_squaring(double base, long long n) {
    double acc = 1.0, p = base;
    while (n > 0) {
        if (n & 1) acc *= p;
        p *= p;
        n >>= 1;
    }
    return acc;
}

Rational rat_pow(Rational base, long long n) {
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

/// Generic dense tensor-power sum over blocks: sum_i w_i B_i^{tensor n}.
/// Blocks are s*s row-major; entries fully known.
template <typename Scalar, typename Weight>
SymMatrixR tensor_power_sum(int s, long long n, const std::vector<std::vector<Scalar>>& blocks,
                            const std::vector<Weight>& weights, bool exact, double entry_bound) {
    std::size_t order = 1;
    for (long long t = 0; t < n; ++t) order *= static_cast<std::size_t>(s);
    SymMatrixR out(static_cast<int>(order),
                   exact ? SymMatrixR::EntryKind::ExactRational : SymMatrixR::EntryKind::FloatWithBound);
    std::vector<int> digits = digit_table(order, s, static_cast<int>(n));
    const int nn = static_cast<int>(n);
    for (std::size_t r = 0; r < order; ++r) {
        const int* rd = digits.data() + r * nn;
        for (std::size_t c = r; c < order; ++c) {
            const int* cd = digits.data() + c * nn;
            Scalar acc{};
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                Scalar prod = weights[i];
                for (int t = 0; t < nn; ++t) {
                    prod = prod * blocks[i][static_cast<std::size_t>(rd[t]) * s + cd[t]];
                    if (prod == Scalar{}) break;
                }
                acc = acc + prod;
            }
            if constexpr (std::is_same_v<Scalar, Rational>)
                out.set_exact(static_cast<int>(r), static_cast<int>(c), acc);
            else
                out.set(static_cast<int>(r), static_cast<int>(c), acc);
        }
    }
    out.set_entry_bound(exact ? 0.0 : entry_bound);
    return out;
}

struct BlockView {
    std::vector<std::vector<double>> vals;  // s*s per block
    std::vector<double> dims;
    int s = 0;
    bool integral = false;  // dims and entries integral
    std::vector<long long> dims_int;
};

BlockView view_of(const LocalData& L, bool require_known) {
    if (require_known && !L.all_known())
        throw CriteriaError(CriteriaError::Kind::UnknownEntries,
                            "local data has Unknown entries; use the reduced twisted or det-bound path");
    BlockView v;
    v.s = L.s;
    v.dims = L.dims;
    v.integral = L.dims_integral && blocks_integral(L);
    v.dims_int = L.dims_int;
    v.vals.resize(L.blocks.size());
    for (size_t i = 0; i < L.blocks.size(); ++i) {
        v.vals[i].resize(L.blocks[i].size());
        for (size_t t = 0; t < L.blocks[i].size(); ++t) v.vals[i][t] = L.blocks[i][t].value;
    }
    return v;
}

bool within_exact_caps(const EvalConfig& cfg, long long n, std::size_t order) {
    return n <= cfg.exact_n_cap && order <= static_cast<std::size_t>(cfg.exact_order_cap);
}

std::size_t pow_size(int s, long long n, int cap) {
    std::size_t order = 1;
    for (long long t = 0; t < n; ++t) {
        order *= static_cast<std::size_t>(s);
        if (order > static_cast<std::size_t>(cap))
            throw CriteriaError(CriteriaError::Kind::DenseCapExceeded,
                                "matrix order exceeds the dense cap; use the matrix-free path");
    }
    return order;
}

SymMatrixR tensor_sum_dispatch(const BlockView& bv, long long n, const EvalConfig& cfg,
                               const std::vector<double>& signs = {}) {
    const int s = bv.s;
    std::size_t order = pow_size(s, n, cfg.eig.dense_cap);
    double fp = 0.0;
    for (double d : bv.dims) fp += d * d;
    if (bv.integral && signs.empty() && within_exact_caps(cfg, n, order)) {
        std::vector<std::vector<Rational>> blocks(bv.vals.size());
        std::vector<Rational> weights(bv.vals.size());
        for (size_t i = 0; i < bv.vals.size(); ++i) {
            blocks[i].resize(bv.vals[i].size());
            for (size_t t = 0; t < bv.vals[i].size(); ++t)
                blocks[i][t] = Rational(static_cast<long long>(std::llround(bv.vals[i][t])));
            Rational d(bv.dims_int[i]);
            weights[i] = (n >= 2) ? Rational(1) / rat_pow(d, n - 2) : rat_pow(d, 2 - n);
        }
        return tensor_power_sum<Rational, Rational>(s, n, blocks, weights, true, 0.0);
    }
    std::vector<std::vector<double>> blocks(bv.vals.size());
    std::vector<double> weights(bv.vals.size());
    for (size_t i = 0; i < bv.vals.size(); ++i) {
        blocks[i] = bv.vals[i];
        double d = bv.dims[i];
        for (auto& x : blocks[i]) x /= d;
        weights[i] = d * d * (signs.empty() ? 1.0 : signs[i]);
    }
    double bound = (static_cast<double>(n) + 3.0) * blocks.size() *
                   std::numeric_limits<double>::epsilon() * std::max(1.0, fp);
    return tensor_power_sum<double, double>(s, n, blocks, weights, false, bound);
}

enum class EClass { Zero, Known, Unknown };

/// Classification plus value of (U_j B_i U_j^*)[p][q] over the three-valued
/// entry algebra. Zero must be structural: a known zero entry under a
/// permutation, or a coefficient pattern that never touches unknown entries
/// and sums to zero from known zeros alone.
struct TwistedEntry {
    EClass cls = EClass::Known;
    std::complex<double> value{0.0, 0.0};
};

TwistedEntry twisted_entry(const LocalData& L, int i, const TwistPattern& pat, int j, int p, int q) {
    const int s = L.s;
    TwistedEntry out;
    if (pat.is_permutation(j)) {
        const auto& perm = pat.perm(j);
        // U e_t = e_{perm[t]} gives (U B U^*)[p][q] = B[perm^{-1}(p)][perm^{-1}(q)]
        int pi = -1, qi = -1;
        for (int t = 0; t < s; ++t) {
            if (perm[t] == p) pi = t;
            if (perm[t] == q) qi = t;
        }
        const auto& e = L.entry(i, pi, qi);
        if (!e.known) {
            out.cls = EClass::Unknown;
            return out;
        }
        out.value = e.value;
        out.cls = (e.value == 0.0) ? EClass::Zero : EClass::Known;
        return out;
    }
    const auto& U = pat.unitary(j);
    std::complex<double> acc{0.0, 0.0};
    bool structural_zero = true;
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) {
            std::complex<double> coef = U[static_cast<size_t>(p) * s + a] *
                                        std::conj(U[static_cast<size_t>(q) * s + b]);
            if (std::abs(coef) <= kZeroTol) continue;
            const auto& e = L.entry(i, a, b);
            if (!e.known) {
                out.cls = EClass::Unknown;
                return out;
            }
            if (e.value != 0.0) structural_zero = false;
            acc += coef * e.value;
        }
    out.value = acc;
    out.cls = structural_zero ? EClass::Zero : EClass::Known;
    return out;
}

void require_pattern_fits(const LocalData& L, long long n, const TwistPattern& pat) {
    if (pat.s() != L.s || pat.n() != n)
        throw CriteriaError(CriteriaError::Kind::InvalidParams,
                            "twist pattern shape does not match the local data / n");
}

}  // namespace

std::uint64_t EvalConfig::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    auto mixd = [&mix](double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        mix(bits);
    };
    mixd(eig.target_width);
    mix(static_cast<std::uint64_t>(eig.max_bisect));
    mix(static_cast<std::uint64_t>(eig.high_precision_fallback));
    mix(static_cast<std::uint64_t>(eig.mantissa_bits));
    mix(static_cast<std::uint64_t>(eig.dense_cap));
    mix(static_cast<std::uint64_t>(eig.lanczos_iters));
    mix(static_cast<std::uint64_t>(exact_n_cap));
    mix(static_cast<std::uint64_t>(exact_order_cap));
    mixd(tol);
    return h;
}

// --- TwistPattern -------------------------------------------------------------

TwistPattern TwistPattern::identity(int s, int n) {
    std::vector<int> id(s);
    for (int i = 0; i < s; ++i) id[i] = i;
    return from_permutations(s, std::vector<std::vector<int>>(n, id));
}

TwistPattern TwistPattern::from_permutations(int s, const std::vector<std::vector<int>>& perms) {
    TwistPattern p;
    p.s_ = s;
    std::string tag;
    for (const auto& perm : perms) {
        if (static_cast<int>(perm.size()) != s)
            throw CriteriaError(CriteriaError::Kind::InvalidParams, "permutation size mismatch");
        std::vector<bool> seen(s, false);
        bool is_id = true, is_rev = true;
        for (int t = 0; t < s; ++t) {
            if (perm[t] < 0 || perm[t] >= s || seen[perm[t]])
                throw CriteriaError(CriteriaError::Kind::NonUnitaryTwist, "not a permutation");
            seen[perm[t]] = true;
            if (perm[t] != t) is_id = false;
            if (perm[t] != s - 1 - t) is_rev = false;
        }
        p.perms_.push_back(perm);
        std::vector<std::complex<double>> u(static_cast<size_t>(s) * s, 0.0);
        for (int t = 0; t < s; ++t) u[static_cast<size_t>(perm[t]) * s + t] = 1.0;
        p.unitaries_.push_back(std::move(u));
        if (!tag.empty()) tag += ",";
        if (is_id)
            tag += "I";
        else if (is_rev && s == 2)
            tag += "swap";
        else {
            tag += "(";
            for (int t = 0; t < s; ++t) tag += (t ? "," : "") + std::to_string(perm[t] + 1);
            tag += ")";
        }
    }
    p.tag_ = tag;
    return p;
}

TwistPattern TwistPattern::from_unitaries(int s,
                                          const std::vector<std::vector<std::complex<double>>>& us) {
    TwistPattern p;
    p.s_ = s;
    for (const auto& u : us) {
        if (u.size() != static_cast<size_t>(s) * s)
            throw CriteriaError(CriteriaError::Kind::InvalidParams, "unitary size mismatch");
        // || U U^* - I ||_max <= 1e-12
        for (int r = 0; r < s; ++r)
            for (int c = 0; c < s; ++c) {
                std::complex<double> acc{0.0, 0.0};
                for (int t = 0; t < s; ++t)
                    acc += u[static_cast<size_t>(r) * s + t] * std::conj(u[static_cast<size_t>(c) * s + t]);
                std::complex<double> want = (r == c) ? 1.0 : 0.0;
                if (std::abs(acc - want) > 1e-12)
                    throw CriteriaError(CriteriaError::Kind::NonUnitaryTwist,
                                        "twist matrix is not unitary within 1e-12");
            }
        p.perms_.emplace_back();  // not a permutation
        p.unitaries_.push_back(u);
    }
    p.tag_ = "custom";
    return p;
}

TwistPattern TwistPattern::parse(const std::string& text, int s) {
    std::vector<std::vector<int>> perms;
    std::vector<int> id(s), rev(s);
    for (int i = 0; i < s; ++i) {
        id[i] = i;
        rev[i] = s - 1 - i;
    }
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        if (text[pos] == 'I') {
            perms.push_back(id);
            ++pos;
        } else if (text.compare(pos, 4, "swap") == 0) {
            perms.push_back(rev);
            pos += 4;
        } else if (text[pos] == '(') {
            size_t end = text.find(')', pos);
            if (end == std::string::npos)
                throw CriteriaError(CriteriaError::Kind::InvalidParams, "unterminated permutation");
            std::vector<int> perm;
            std::stringstream ss(text.substr(pos + 1, end - pos - 1));
            std::string tok;
            while (std::getline(ss, tok, ',')) perm.push_back(std::stoi(tok) - 1);
            perms.push_back(perm);
            pos = end + 1;
        } else {
            throw CriteriaError(CriteriaError::Kind::InvalidParams,
                                "cannot parse twist token at: " + text.substr(pos));
        }
    }
    if (perms.empty()) throw CriteriaError(CriteriaError::Kind::InvalidParams, "empty twist pattern");
    return from_permutations(s, perms);
}

bool TwistPattern::all_identity() const {
    for (int j = 0; j < n(); ++j) {
        if (!is_permutation(j)) return false;
        for (int t = 0; t < s_; ++t)
            if (perms_[j][t] != t) return false;
    }
    return true;
}

std::string CriterionSpec::render() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Primary: os << "primary(n=" << n << ")"; break;
        case Kind::Localized: os << "localized(S={" << join_ints(set) << "},n=" << n << ")"; break;
        case Kind::Reduced: os << "reduced(S={" << join_ints(set) << "},n=" << n << ")"; break;
        case Kind::Twisted:
            os << "twisted(S={" << join_ints(set) << "},n=" << n << ",pattern=" << pattern << ")";
            break;
        case Kind::ReducedTwisted:
            os << "reduced_twisted(S={" << join_ints(set) << "},n=" << n << ",pattern=" << pattern
               << ")";
            break;
        case Kind::Limit: os << "limit(S={" << join_ints(set) << "})"; break;
        case Kind::Graded: os << "graded(S={" << join_ints(set) << "},n=" << n << ")"; break;
        case Kind::Schur: os << "schur"; break;
    }
    return os.str();
}

// --- builders ------------------------------------------------------------------

SymMatrixR primary_matrix(const FusionRing& ring, long long n, const EvalConfig& cfg) {
    if (n < 1) throw CriteriaError(CriteriaError::Kind::InvalidParams, "n >= 1 required");
    std::vector<int> full(ring.rank());
    for (int i = 0; i < ring.rank(); ++i) full[i] = i + 1;
    return localized_matrix(local_data(ring, full), n, cfg);
}

SymMatrixR localized_matrix(const LocalData& L, long long n, const EvalConfig& cfg) {
    if (n < 1) throw CriteriaError(CriteriaError::Kind::InvalidParams, "n >= 1 required");
    return tensor_sum_dispatch(view_of(L, /*require_known=*/true), n, cfg);
}

SymMatrixR reduced_matrix(const LocalData& L, long long n, const EvalConfig& cfg) {
    if (n < 1) throw CriteriaError(CriteriaError::Kind::InvalidParams, "n >= 1 required");
    BlockView bv = view_of(L, /*require_known=*/true);
    const int s = bv.s;
    if (bv.integral && n <= cfg.exact_n_cap && s <= cfg.exact_order_cap) {
        SymMatrixR out(s, SymMatrixR::EntryKind::ExactRational);
        for (int r = 0; r < s; ++r)
            for (int c = r; c < s; ++c) {
                Rational acc(0);
                for (size_t i = 0; i < bv.vals.size(); ++i) {
                    Rational d(bv.dims_int[i]);
                    Rational b(static_cast<long long>(std::llround(bv.vals[i][static_cast<size_t>(r) * s + c])));
                    acc += d * d * rat_pow(b / d, n);
                }
                out.set_exact(r, c, acc);
            }
        return out;
    }
    SymMatrixR out(s, SymMatrixR::EntryKind::FloatWithBound);
    double fp = 0.0;
    for (double d : bv.dims) fp += d * d;
    for (int r = 0; r < s; ++r)
        for (int c = r; c < s; ++c) {
            double acc = 0.0;
            for (size_t i = 0; i < bv.vals.size(); ++i) {
                double d = bv.dims[i];
                acc += d * d * pow_by_squaring(bv.vals[i][static_cast<size_t>(r) * s + c] / d, n);
            }
            out.set(r, c, acc);
        }
    out.set_entry_bound(4.0 * std::log2(static_cast<double>(n) + 2.0) * bv.vals.size() *
                        std::numeric_limits<double>::epsilon() * std::max(1.0, fp));
    return out;
}

SymMatrixR reduced_twisted_matrix(const LocalData& L, long long n, const TwistPattern& pattern,
                                  const EvalConfig& cfg) {
    if (n < 1) throw CriteriaError(CriteriaError::Kind::InvalidParams, "n >= 1 required");
    require_pattern_fits(L, n, pattern);
    const int s = L.s;
    const int m = L.block_count;

    bool perms_only = true;
    for (int j = 0; j < pattern.n(); ++j) perms_only &= pattern.is_permutation(j);
    bool exact = perms_only && L.dims_integral && blocks_integral(L) && n <= cfg.exact_n_cap &&
                 s <= cfg.exact_order_cap && L.all_known();

    SymMatrixR out(s, exact ? SymMatrixR::EntryKind::ExactRational
                            : SymMatrixR::EntryKind::FloatWithBound);
    double fp = 0.0;
    for (double d : L.dims) fp += d * d;

    for (int p = 0; p < s; ++p)
        for (int q = p; q < s; ++q) {
            std::complex<double> acc{0.0, 0.0};
            Rational racc(0);
            for (int i = 0; i < m; ++i) {
                std::complex<double> prod{1.0, 0.0};
                bool zero = false, unknown = false;
                for (int j = 0; j < static_cast<int>(n); ++j) {
                    TwistedEntry e = twisted_entry(L, i, pattern, j, p, q);
                    if (e.cls == EClass::Zero) {
                        zero = true;
                        break;
                    }
                    if (e.cls == EClass::Unknown) {
                        unknown = true;
                        continue;  // keep scanning for a structural zero
                    }
                    prod *= e.value;
                }
                if (zero) continue;
                if (unknown)
                    throw CriteriaError(
                        CriteriaError::Kind::UnknownNotAnnihilated,
                        "Unknown entry not annihilated in block " + std::to_string(i + 1) +
                            " at position (" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")");
                if (exact) {
                    Rational rp(1);
                    for (int j = 0; j < static_cast<int>(n); ++j) {
                        TwistedEntry e = twisted_entry(L, i, pattern, j, p, q);
                        rp *= Rational(static_cast<long long>(std::llround(e.value.real())));
                    }
                    Rational d(L.dims_int[i]);
                    racc += (n >= 2 ? Rational(1) / rat_pow(d, n - 2) : rat_pow(d, 2 - n)) * rp;
                } else {
                    double w = std::pow(L.dims[i], 2.0 - static_cast<double>(n));
                    acc += w * prod;
                }
            }
            if (exact) {
                out.set_exact(p, q, racc);
            } else {
                if (std::abs(acc.imag()) > 1e-9 * (std::abs(acc.real()) + 1.0))
                    throw CriteriaError(CriteriaError::Kind::NonRealResult,
                                        "twisted criterion matrix has a non-real entry");
                out.set(p, q, acc.real());
            }
        }
    if (!exact)
        out.set_entry_bound((static_cast<double>(n) + 3.0) * m *
                            std::numeric_limits<double>::epsilon() * std::max(1.0, fp));
    return out;
}

SymMatrixR twisted_tensor_matrix(const LocalData& L, long long n, const TwistPattern& pattern,
                                 const EvalConfig& cfg) {
    if (n < 1) throw CriteriaError(CriteriaError::Kind::InvalidParams, "n >= 1 required");
    require_pattern_fits(L, n, pattern);
    if (!L.all_known())
        throw CriteriaError(CriteriaError::Kind::UnknownEntries,
                            "twisted tensor criterion requires fully known blocks");
    const int s = L.s;
    const int m = L.block_count;
    std::size_t order = pow_size(s, n, cfg.eig.dense_cap);

    // conjugated blocks per (i, j)
    std::vector<std::vector<std::complex<double>>> conj_blocks(static_cast<size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < static_cast<int>(n); ++j) {
            auto& B = conj_blocks[static_cast<size_t>(i) * n + j];
            B.resize(static_cast<size_t>(s) * s);
            for (int p = 0; p < s; ++p)
                for (int q = 0; q < s; ++q)
                    B[static_cast<size_t>(p) * s + q] = twisted_entry(L, i, pattern, j, p, q).value;
        }

    SymMatrixR out(static_cast<int>(order), SymMatrixR::EntryKind::FloatWithBound);
    std::vector<int> digits = digit_table(order, s, static_cast<int>(n));
    double fp = 0.0;
    for (double d : L.dims) fp += d * d;
    const int nn = static_cast<int>(n);
    for (std::size_t r = 0; r < order; ++r) {
        const int* rd = digits.data() + r * nn;
        for (std::size_t c = r; c < order; ++c) {
            const int* cd = digits.data() + c * nn;
            std::complex<double> acc{0.0, 0.0};
            for (int i = 0; i < m; ++i) {
                std::complex<double> prod = std::pow(L.dims[i], 2.0 - static_cast<double>(n));
                for (int t = 0; t < nn && prod != std::complex<double>{}; ++t)
                    prod *= conj_blocks[static_cast<size_t>(i) * nn + t]
                                       [static_cast<std::size_t>(rd[t]) * s + cd[t]];
                acc += prod;
            }
            if (std::abs(acc.imag()) > 1e-9 * (std::abs(acc.real()) + 1.0))
                throw CriteriaError(CriteriaError::Kind::NonRealResult,
                                    "twisted criterion matrix has a non-real entry");
            out.set(static_cast<int>(r), static_cast<int>(c), acc.real());
        }
    }
    out.set_entry_bound((static_cast<double>(n) + 3.0) * m *
                        std::numeric_limits<double>::epsilon() * std::max(1.0, fp));
    return out;
}

PsdVerdict det2_bound_check(const LocalData& L, long long n, const TwistPattern& pattern) {
    if (L.s != 2)
        throw CriteriaError(CriteriaError::Kind::PreconditionViolated, "det2 bound requires |S| = 2");
    require_pattern_fits(L, n, pattern);
    for (size_t i = 0; i < L.blocks.size(); ++i)
        for (int p = 0; p < 2; ++p)
            if (!L.entry(static_cast<int>(i), p, p).known)
                throw CriteriaError(CriteriaError::Kind::PreconditionViolated,
                                    "det2 bound: Unknown entries must be off-diagonal");

    double K[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            for (size_t i = 0; i < L.blocks.size(); ++i) {
                std::complex<double> prod{1.0, 0.0};
                bool zero = false, unknown = false;
                for (int j = 0; j < static_cast<int>(n); ++j) {
                    TwistedEntry e = twisted_entry(L, static_cast<int>(i), pattern, j, p, q);
                    if (e.cls == EClass::Zero) { zero = true; break; }
                    if (e.cls == EClass::Unknown) { unknown = true; continue; }
                    prod *= e.value;
                }
                if (zero) continue;
                if (unknown) {
                    if (p == q)
                        throw CriteriaError(CriteriaError::Kind::PreconditionViolated,
                                            "det2 bound: diagonal Unknown product not annihilated");
                    continue;  // off-diagonal unknown mass is nonnegative; dropped from the known part
                }
                if (p != q && prod.real() < 0.0)
                    throw CriteriaError(CriteriaError::Kind::PreconditionViolated,
                                        "det2 bound: negative known off-diagonal contribution");
                double w = std::pow(L.dims[i], 2.0 - static_cast<double>(n));
                K[p][q] += w * prod.real();
            }
        }

    PsdVerdict out;
    out.tol = 0.0;
    double det = K[0][0] * K[1][1] - K[0][1] * K[1][0];
    out.min_eig_lower = std::numeric_limits<double>::lowest();
    out.min_eig_upper = std::numeric_limits<double>::max();
    if (det < 0.0) {
        out.kind = PsdVerdict::Kind::Violated;
        out.rayleigh = det;  // determinant certificate; unknown mass only decreases it
        out.detail = "det2 bound: known-part determinant " + std::to_string(det);
    } else {
        out.kind = PsdVerdict::Kind::Inconclusive;
        out.detail = "det2 bound one-sided: known part is positive semidefinite";
    }
    return out;
}

SymMatrixR limit_matrix(const FusionRing& ring, const std::vector<int>& S) {
    const int m = ring.rank();
    std::vector<bool> in_s(m, false);
    for (int lbl : S) {
        if (lbl < 1 || lbl > m)
            throw ValidationError(ValidationError::Kind::IndexOutOfRange,
                                  "limit_matrix: label " + std::to_string(lbl));
        in_s[lbl - 1] = true;
    }
    const double tol_int = 1e-9;
    SymMatrixR out(m, SymMatrixR::EntryKind::FloatWithBound);
    for (int k = 0; k < m; ++k)
        for (int j = k; j < m; ++j) {
            if (!(in_s[j] && in_s[k])) continue;
            double acc = 0.0;
            for (int i = 0; i < m; ++i)
                if (std::abs(ring.m_entry(i, k, j) - ring.dim(i)) <= tol_int)
                    acc += ring.dim(i) * ring.dim(i);
            out.set(k, j, acc);
        }
    return out;
}

SymMatrixR graded_matrix(const FusionRing& ring, const GradingMap& grading,
                         const std::vector<int>& S, long long n, const EvalConfig& cfg) {
    if (grading.modulus != 2)
        throw CriteriaError(CriteriaError::Kind::UnsupportedModulus,
                            "graded criterion implemented for modulus 2 only");
    validate_grading(ring, grading);
    LocalData L = local_data(ring, S);
    BlockView bv = view_of(L, true);
    std::vector<double> signs(ring.rank());
    for (int i = 0; i < ring.rank(); ++i)
        signs[i] = (((grading.g[i] % 2) + 2) % 2 == 0) ? 1.0 : -1.0;
    return tensor_sum_dispatch(bv, n, cfg, signs);
}

// --- verdicts -------------------------------------------------------------------

PsdVerdict check_matrix(const SymMatrixR& a, const EvalConfig& cfg) {
    return psd_verdict(a, cfg.tol, cfg.eig);
}

KronOperator primary_operator(const FusionRing& ring, int n) {
    KronOperator op;
    op.m = ring.rank();
    op.n = n;
    for (int i = 0; i < ring.rank(); ++i) {
        double d = ring.dim(i);
        op.weights.push_back(d * d);
        std::vector<double> f = ring.matrix(i);
        for (auto& x : f) x /= d;
        op.factors.push_back(std::move(f));
    }
    return op;
}

PsdVerdict check_primary(const FusionRing& ring, long long n, const EvalConfig& cfg) {
    if (n < 1) throw CriteriaError(CriteriaError::Kind::InvalidParams, "n >= 1 required");
    bool dense = true;
    std::size_t order = 1;
    for (long long t = 0; t < n; ++t) {
        order *= static_cast<std::size_t>(ring.rank());
        if (order > static_cast<std::size_t>(cfg.eig.dense_cap)) {
            dense = false;
            break;
        }
    }
    if (dense) return check_matrix(primary_matrix(ring, n, cfg), cfg);

    KronOperator op = primary_operator(ring, static_cast<int>(n));
    auto [lo, hi] = kron_min_eig(op, cfg.eig);
    PsdVerdict out;
    double fp = 0.0;
    for (int i = 0; i < ring.rank(); ++i) fp += ring.dim(i) * ring.dim(i);
    out.tol = cfg.tol < 0
                  ? 64.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(op.dim()) * fp
                  : cfg.tol;
    out.min_eig_lower = lo;
    out.min_eig_upper = hi;
    if (lo >= -out.tol)
        out.kind = PsdVerdict::Kind::Holds;
    else if (hi < -out.tol) {
        out.kind = PsdVerdict::Kind::Violated;
        out.rayleigh = hi;
        out.detail = "matrix-free Rayleigh certificate";
    } else
        out.kind = PsdVerdict::Kind::Inconclusive;
    return out;
}

// --- search ---------------------------------------------------------------------

namespace {

void subsets_of_size(int m, int size, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur(size);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == size) {
            fn(cur);
            return;
        }
        for (int v = start; v <= m; ++v) {
            cur[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(1, 0);
}

/// All pattern tuples over {identity, reversal}, identity-first lexicographic.
std::vector<TwistPattern> catalog_patterns(int s, int n, bool swap_patterns) {
    std::vector<TwistPattern> out;
    std::vector<int> id(s), rev(s);
    for (int i = 0; i < s; ++i) {
        id[i] = i;
        rev[i] = s - 1 - i;
    }
    if (!swap_patterns || s < 2) {
        out.push_back(TwistPattern::identity(s, n));
        return out;
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::vector<int>> perms;
        for (int j = 0; j < n; ++j) perms.push_back((mask >> j) & 1 ? rev : id);
        out.push_back(TwistPattern::from_permutations(s, perms));
    }
    return out;
}

}  // namespace

std::optional<Witness> search_violation(const FusionRing& ring, const SearchBudget& budget,
                                        const EvalConfig& cfg) {
    if (budget.max_subset_size < 1 || budget.max_n < 1)
        throw CriteriaError(CriteriaError::Kind::BudgetZero, "search budget is empty");
    std::optional<Witness> found;
    for (int size = 1; size <= std::min(budget.max_subset_size, ring.rank()) && !found; ++size) {
        subsets_of_size(ring.rank(), size, [&](const std::vector<int>& S) {
            if (found) return;
            LocalData L = local_data(ring, S);
            for (int n = 1; n <= budget.max_n && !found; ++n) {
                for (const TwistPattern& pat : catalog_patterns(size, n, budget.swap_patterns)) {
                    SymMatrixR mat = pat.all_identity() ? localized_matrix(L, n, cfg)
                                                        : reduced_twisted_matrix(L, n, pat, cfg);
                    PsdVerdict v = check_matrix(mat, cfg);
                    if (v.violated()) {
                        Witness w;
                        w.spec.kind = pat.all_identity() ? CriterionSpec::Kind::Localized
                                                         : CriterionSpec::Kind::ReducedTwisted;
                        w.spec.n = n;
                        w.spec.set = S;
                        w.spec.pattern = pat.tag();
                        w.matrix_fingerprint = mat.fingerprint();
                        w.certificate = Witness::Certificate::Rayleigh;
                        w.value = v.rayleigh;
                        w.vector = v.witness;
                        w.exact = v.exact_certificate;
                        found = std::move(w);
                        return;
                    }
                }
            }
        });
    }
    return found;
}

}  // namespace fusioncheck
