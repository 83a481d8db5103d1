#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusioncheck {

/// Validation failures name the axiom and the first offending 1-based index tuple.
class ValidationError : public std::runtime_error {
public:
    enum class Kind {
        UnitAxiom,
        TraceAxiom,
        Associativity,
        DualAntiInvolution,
        FrobeniusReciprocity,
        NonIrreducible,
        NoConvergence,
        EmptySubset,
        IndexOutOfRange,
        UnknownKind,
        InvalidParams,
    };

    ValidationError(Kind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Fusion coefficient tensor N_{i,j}^k with the dual involution.
/// Coefficients are nonnegative reals; the common integer case is detected and
/// unlocks the exact-arithmetic paths downstream.
class FusionCoeffs {
public:
    FusionCoeffs(int rank, std::vector<double> tensor, std::vector<int> dual_one_based);

    /// Integer tensors via the same entry layout.
    static FusionCoeffs from_ints(int rank, const std::vector<int>& tensor,
                                  std::vector<int> dual_one_based);

    int rank() const { return rank_; }
    /// N_{i,j}^k, all arguments 0-based.
    double n(int i, int j, int k) const {
        return tensor_[(static_cast<size_t>(i) * rank_ + j) * rank_ + k];
    }
    long long n_int(int i, int j, int k) const;
    int dual(int i) const { return dual_[i]; }  // 0-based
    bool integer_entries() const { return integer_entries_; }

private:
    int rank_;
    std::vector<double> tensor_;  // [i][j][k] row-major
    std::vector<int> dual_;       // 0-based involution
    bool integer_entries_;
};

struct DimensionVector {
    std::vector<double> d;       // d[0] = 1
    double precision = 0.0;      // per-entry error bound estimate
    bool integral = false;       // certified integer dimensions
    std::vector<long long> d_int;  // populated when integral
};

/// Validated fusion ring with cached fusion matrices (M_i)[r][c] = N_{i,c}^r
/// and Perron-Frobenius dimensions.
class FusionRing {
public:
    FusionRing(FusionCoeffs coeffs, std::vector<std::vector<double>> matrices,
               DimensionVector dims, bool commutative, std::string name = {})
        : coeffs_(std::move(coeffs)),
          matrices_(std::move(matrices)),
          dims_(std::move(dims)),
          commutative_(commutative),
          name_(std::move(name)) {}

    int rank() const { return coeffs_.rank(); }
    const FusionCoeffs& coeffs() const { return coeffs_; }
    /// Row-major m x m fusion matrix of basis element i (0-based).
    const std::vector<double>& matrix(int i) const { return matrices_[i]; }
    double m_entry(int i, int r, int c) const { return matrices_[i][static_cast<size_t>(r) * rank() + c]; }
    const DimensionVector& dims() const { return dims_; }
    double dim(int i) const { return dims_.d[i]; }
    int dual(int i) const { return coeffs_.dual(i); }
    bool commutative() const { return commutative_; }
    bool integer_entries() const { return coeffs_.integer_entries(); }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

private:
    FusionCoeffs coeffs_;
    std::vector<std::vector<double>> matrices_;
    DimensionVector dims_;
    bool commutative_;
    std::string name_;
};

/// Checks every based-ring axiom, caches fusion matrices, solves for the
/// Perron dimensions and sets the commutativity flag.
FusionRing validate(const FusionCoeffs& coeffs);

/// Perron eigenvector of sum(M_i), normalized d_1 = 1, with residual and
/// operator-norm cross-checks.
DimensionVector fp_dimensions(int rank, const std::vector<std::vector<double>>& matrices);

/// Submatrices of every fusion matrix on S, with dimensions attached.
/// Entries may be Unknown when constructed by hand (sparse data); restriction
/// of a validated ring always yields fully known blocks.
struct LocalData {
    struct Entry {
        double value = 0.0;
        bool known = true;
    };

    std::vector<int> labels;  // 1-based ambient labels, ascending
    int block_count = 0;      // number of ambient basis elements m
    int s = 0;                // |S|
    std::vector<std::vector<Entry>> blocks;  // block_count blocks, each s*s row-major
    std::vector<double> dims;                // per ambient element
    std::vector<int> dual;                   // 0-based involution on blocks
    bool dims_integral = false;
    std::vector<long long> dims_int;

    const Entry& entry(int i, int r, int c) const { return blocks[i][static_cast<size_t>(r) * s + c]; }
    bool all_known() const;
};

/// Restriction of a validated ring to the 1-based subset S.
LocalData local_data(const FusionRing& ring, const std::vector<int>& S);

/// Z_k grading of the basis labels.
struct GradingMap {
    int modulus = 2;
    std::vector<int> g;  // size m, values in [0, modulus)
};

/// Checks g(1)=0, duality compatibility and the homomorphism property
/// g(i)+g(j) = g(k) mod k wherever N_{i,j}^k > 0.
void validate_grading(const FusionRing& ring, const GradingMap& grading);

}  // namespace fusioncheck
