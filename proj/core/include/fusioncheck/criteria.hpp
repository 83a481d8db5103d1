#pragma once

#include "fusioncheck/eig.hpp"
#include "fusioncheck/fusion_ring.hpp"
#include "fusioncheck/kron.hpp"
#include "fusioncheck/sym_matrix.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fusioncheck {

class CriteriaError : public std::runtime_error {
public:
    enum class Kind {
        DenseCapExceeded,
        UnknownEntries,
        UnknownNotAnnihilated,
        NonUnitaryTwist,
        NonRealResult,
        UnsupportedModulus,
        BudgetZero,
        PreconditionViolated,
        InvalidParams,
    };
    CriteriaError(Kind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct EvalConfig {
    EigConfig eig;
    long long exact_n_cap = 64;   // exact rationals for powers up to this
    int exact_order_cap = 2048;   // and orders up to this
    double tol = -1.0;            // psd decision tolerance; < 0 means default_tol
    std::uint64_t hash() const;
};

/// Tuple of s x s unitaries conjugating the tensor / Hadamard factors.
/// Permutation twists (the built-in catalog) keep everything exact and allow
/// the structural-zero analysis that annihilates Unknown entries.
class TwistPattern {
public:
    static TwistPattern identity(int s, int n);
    /// perms[j] is 0-based: U_j maps e_t to e_{perms[j][t]}.
    static TwistPattern from_permutations(int s, const std::vector<std::vector<int>>& perms);
    static TwistPattern from_unitaries(int s, const std::vector<std::vector<std::complex<double>>>& us);
    /// Comma-separated tokens: "I", "swap" (reversal), or an explicit image
    /// list like "2,1" wrapped in parens: "(2,1)". Example: "I,I,swap".
    static TwistPattern parse(const std::string& text, int s);

    int n() const { return static_cast<int>(perms_.size()); }
    int s() const { return s_; }
    bool all_identity() const;
    bool is_permutation(int j) const { return !perms_[j].empty(); }
    const std::vector<int>& perm(int j) const { return perms_[j]; }
    const std::vector<std::complex<double>>& unitary(int j) const { return unitaries_[j]; }
    const std::string& tag() const { return tag_; }

private:
    int s_ = 0;
    std::vector<std::vector<int>> perms_;  // empty when not a permutation
    std::vector<std::vector<std::complex<double>>> unitaries_;  // row-major s*s
    std::string tag_;
};

struct CriterionSpec {
    enum class Kind { Primary, Localized, Reduced, Twisted, ReducedTwisted, Limit, Graded, Schur };
    Kind kind = Kind::Primary;
    long long n = 1;
    std::vector<int> set;  // 1-based
    std::string pattern;
    std::string render() const;
};

struct Witness {
    CriterionSpec spec;
    std::uint64_t matrix_fingerprint = 0;
    enum class Certificate { Rayleigh, Determinant, SchurTuple };
    Certificate certificate = Certificate::Rayleigh;
    double value = 0.0;  // certified negative quantity
    std::vector<double> vector;
    std::vector<int> tuple;  // 1-based column tuple for Schur witnesses
    bool exact = false;
};

// --- criterion matrices -----------------------------------------------------

/// T_n = sum_i d_i^2 (M_i / d_i)^{tensor n}; exact rational entries when the
/// dimensions are certified integers and the size stays within the exact caps.
SymMatrixR primary_matrix(const FusionRing& ring, long long n, const EvalConfig& cfg = {});

/// T_n^S built from local blocks; all entries must be known.
SymMatrixR localized_matrix(const LocalData& L, long long n, const EvalConfig& cfg = {});

/// sum_i d_i^2 (M_i^S / d_i)^{hadamard n}, order s; entrywise powers by
/// exponentiation-by-squaring, so cost is O(m s^2 log n).
SymMatrixR reduced_matrix(const LocalData& L, long long n, const EvalConfig& cfg = {});

/// sum_i d_i^{2-n} hadamard-product over j of U_j M_i^S U_j^*; every Unknown
/// entry must meet a structural zero in its product, else the build fails.
SymMatrixR reduced_twisted_matrix(const LocalData& L, long long n, const TwistPattern& pattern,
                                  const EvalConfig& cfg = {});

/// sum_i d_i^2 tensor-product over j of (U_j M_i^S U_j^* / d_i), order s^n.
SymMatrixR twisted_tensor_matrix(const LocalData& L, long long n, const TwistPattern& pattern,
                                 const EvalConfig& cfg = {});

/// One-sided 2x2 determinant bound for local data with unknown off-diagonal
/// mass: Violated when the known part already has negative determinant.
PsdVerdict det2_bound_check(const LocalData& L, long long n, const TwistPattern& pattern);

/// Large-n limit of the reduced criterion: indicator of entries N_{i,j}^k
/// equal to d_i with both j,k in S, weighted by d_i^2; order m.
SymMatrixR limit_matrix(const FusionRing& ring, const std::vector<int>& S);

/// Z_2-graded criterion sum_i (-1)^{g(i)} d_i^2 (M_i^S / d_i)^{tensor n};
/// moduli above 2 are rejected.
SymMatrixR graded_matrix(const FusionRing& ring, const GradingMap& grading,
                         const std::vector<int>& S, long long n, const EvalConfig& cfg = {});

// --- verdicts ----------------------------------------------------------------

/// Primary n-criterion verdict; switches to the matrix-free Kronecker path
/// when m^n exceeds the dense cap.
PsdVerdict check_primary(const FusionRing& ring, long long n, const EvalConfig& cfg = {});

PsdVerdict check_matrix(const SymMatrixR& a, const EvalConfig& cfg = {});

/// Matrix-free operator realizing the primary n-matrix.
KronOperator primary_operator(const FusionRing& ring, int n);

// --- search ------------------------------------------------------------------

struct SearchBudget {
    int max_subset_size = 2;
    int max_n = 3;
    bool swap_patterns = true;  // catalog {identity, reversal}
};

/// Deterministic first-witness search: subsets in lexicographic order, sizes
/// ascending, then n ascending, identity pattern (localized criterion) before
/// the permutation patterns (reduced twisted criterion).
std::optional<Witness> search_violation(const FusionRing& ring, const SearchBudget& budget,
                                        const EvalConfig& cfg = {});

}  // namespace fusioncheck
