#pragma once

#include "fusioncheck/criteria.hpp"
#include "fusioncheck/fusion_ring.hpp"

#include <complex>
#include <vector>

namespace fusioncheck {

/// Simultaneous eigenvalues of the commuting fusion matrices.
/// lam[i][j] = lambda_{i,j}; column 1 is the Perron column with
/// lambda_{i,1} = d_i. Non-self-dual commutative rings produce conjugate
/// column pairs, stored as complex values.
struct CharacterTable {
    int m = 0;
    std::vector<std::complex<double>> lam;  // row-major m*m
    double residual = 0.0;                  // max ||M_i v_j - lam_{i,j} v_j||
    bool real_valued = true;

    std::complex<double> at(int i, int j) const { return lam[static_cast<size_t>(i) * m + j]; }
};

class SchurError : public std::runtime_error {
public:
    enum class Kind { NotCommutative, DegenerateCluster, IndexOutOfRange };
    SchurError(Kind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Simultaneous diagonalization of {M_i} for a commutative ring; columns
/// ordered Perron first, then descending lexicographic.
CharacterTable character_table(const FusionRing& ring);

/// nu over a 1-based column tuple: sum_i prod_k lam_{i,j_k} / lam_{i,1}^{n-2}.
/// Real by conjugate pairing; the imaginary residue is checked.
double nu_value(const CharacterTable& table, const std::vector<int>& jvec);

/// Scans every 3-tuple of columns; Violated with the minimizing tuple when
/// some nu drops below -tol.
PsdVerdict check_schur(const FusionRing& ring, const EvalConfig& cfg = {});

/// The minimizing tuple found by check_schur, for reporting.
struct SchurScanResult {
    PsdVerdict verdict;
    std::vector<int> min_tuple;  // 1-based
    double min_nu = 0.0;
};
SchurScanResult check_schur_full(const FusionRing& ring, const EvalConfig& cfg = {});

}  // namespace fusioncheck
