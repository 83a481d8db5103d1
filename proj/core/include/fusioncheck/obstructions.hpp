#pragma once

#include "fusioncheck/criteria.hpp"
#include "fusioncheck/fusion_ring.hpp"
#include "fusioncheck/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fusioncheck {

// --- two-generator obstruction (self-dual and non-self-dual branches) ---------

/// Parameters of a ring with x2 x2* = 1 + s x2 + l x3 and
/// x3 x3* = 1 + t x2 + k x3 + (unknown nonnegative mass).
struct TwoGenParams {
    double s = 0, t = 0, k = 0;
    double l = 1;  // coefficient of x3 in x2 x2*, >= 1
    double d2 = 1, d3 = 1;
};

/// First (n, a, b), a+b = n, 2 <= n <= n_max, violating the self-dual
/// determinant inequality; enumeration n ascending then a ascending.
std::optional<std::array<int, 3>> two_gen_obstruction(const TwoGenParams& p, int n_max);

/// Non-self-dual branch: 2 s^n / d2^{n-2} + 1 - (s^a tau3^b + s^b tau3^a) / d2^{n-2} < 0.
std::optional<std::array<int, 3>> two_gen_obstruction_nsd(double s, double tau3, double d2,
                                                          int n_max);

// --- the R_{4,k} family ---------------------------------------------------------

/// Rank-4 ring with x2^2 = 1 + k x2 + x4, x3^2 = 1 + k x2, x4^2 = 1 + k(x2+x3) + x4.
FusionRing r4k_ring(int k);

struct R4kReport {
    PsdVerdict verdict;        // reduced twisted at S = {2,3} after the x2<->x3 relabeling
    double d2 = 0, d3 = 0;     // Perron dimensions (original labels)
    double f_value = 0;        // f(d3) = d3^3 - k^3 d3^2 + (k^4－1) d3 + k^3
    std::array<int, 3> nab{};  // witness (n, a, b) from the parameter scan
    bool scan_found = false;
};

R4kReport r4k_check(int k, const EvalConfig& cfg = {});

/// Closed form from the family's proof; negative value excludes the ring.
double r4k_f(int k, double d3);

// --- dimension-perturbation exclusion for the k7 local datum --------------------

struct K7Perturbation {
    double Q1p = 0, Q2p = 0;   // larger roots of the two corner quadratics
    double threshold = 0;      // max(Q1p, Q2p); d6 below it forces a negative eigenvalue
    bool disc1_ok = true, disc2_ok = true;
};

/// Evaluates the corner-determinant quadratics at (d2,d3,d4,d5,d7); all >= 1.
K7Perturbation k7_perturbation(double d2, double d3, double d4, double d5, double d7);

/// Factored determinant of the 7x7 top-left corner of the k7-local T_3^S at
/// free dimensions; matches the brute-force minor determinant.
double k7_corner_det(double d2, double d3, double d4, double d5, double d6, double d7);
Rational k7_corner_det_exact(const Rational& d2, const Rational& d3, const Rational& d4,
                             const Rational& d5, const Rational& d6, const Rational& d7);

/// T_3^S at the fixed k7 local blocks with explicit dimension vector
/// (d1 = 1 implied); 8x8.
SymMatrixR k7_local_t3(const std::array<double, 6>& d2_to_d7);
std::vector<Rational> k7_local_t3_exact(const std::array<Rational, 6>& d2_to_d7);  // row-major 8x8

/// Degree-4 factor of det(T_3^S) * d6^8 at dims (1,5,5,5,6,d6,7), re-derived
/// by exact interpolation; coefficients normalized to integers.
/// Lowest degree first.
std::array<double, 5> k7_full_det_quartic();

/// lambda_min sign-change location in d6 at dims (1,5,5,5,6,*,7), by bisection.
double k7_sign_change_d6(double lo, double hi, const EvalConfig& cfg = {});

// --- orbifold scaling -------------------------------------------------------------

/// T_n^S of the Z_l orbifold ring equals l^2 times the base localized matrix.
SymMatrixR orbifold_scaled(const LocalData& L, long long n, int ell, const EvalConfig& cfg = {});

// --- parametric principal-graph family --------------------------------------------

struct GraphFamilyParams {
    int ell = 1;             // arc multiplicity between x2 and x3
    std::vector<int> mults;  // branch multiplicities at x3
    double d2 = 2;           // quantum dimension of x2
    double M() const {
        double m = ell * static_cast<double>(ell) - 1.0;
        for (int v : mults) m += static_cast<double>(v) * v;
        return m;
    }
};

/// First (n, a, b) violating the graph-family inequality, with
/// d3 = (d2^2 - 1) / ell internally.
std::optional<std::array<int, 3>> graph_family_check(const GraphFamilyParams& p, int n_max);

/// Closed chain sqrt(2) M / ell < d2 - 1/d2 < d2 < ell^2 / sqrt(2).
bool cor56_check(const GraphFamilyParams& p);

/// Upper bound on dim P_3 below which the graph is excluded; requires ell^2 >= delta.
double remark55_dim_bound(double delta_sq, int ell);

// --- explicit bipartite graphs -----------------------------------------------------

struct BipartiteGraph {
    std::string name;
    std::vector<std::string> even, odd;  // vertex labels by color
    std::string root;                    // distinguished vertex of dimension 1
    struct Edge {
        std::string u, v;
        int mult = 1;
    };
    std::vector<Edge> edges;

    int vertex_count() const { return static_cast<int>(even.size() + odd.size()); }
};

class GraphError : public std::runtime_error {
public:
    enum class Kind { Disconnected, NotBipartite, BadRoot, HypothesisFailed };
    GraphError(Kind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Perron vector of the symmetrized adjacency operator, normalized to 1 at
/// the root; order follows even vertices then odd vertices.
DimensionVector graph_dims(const BipartiteGraph& g);

/// Verdict on user-supplied local multifusion data (the paper's D5-style check).
PsdVerdict graph_local_check(const LocalData& L, long long n, const EvalConfig& cfg = {});

/// Detects the root - x2 - (l arcs) - x3 - branches pattern and fills the
/// family parameters from the graph; nullopt when the local form is absent.
std::optional<GraphFamilyParams> extract_family(const BipartiteGraph& g);

}  // namespace fusioncheck
