#pragma once

#include "fusioncheck/sym_matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fusioncheck {

struct EigConfig {
    double target_width = 1e-11;  // bisection stops when the bracket is this tight (relative to scale)
    int max_bisect = 200;
    bool high_precision_fallback = true;  // re-run Inconclusive cases with wide mantissa
    int mantissa_bits = 128;
    int dense_cap = 4096;    // largest order materialized densely
    int lanczos_iters = 400; // matrix-free path
    unsigned num_threads = 0;
};

/// Three-valued positivity outcome with certificates.
struct PsdVerdict {
    enum class Kind { Holds, Violated, Inconclusive };

    Kind kind = Kind::Inconclusive;
    double min_eig_lower = 0.0;  // certified lambda_min >= lower
    double min_eig_upper = 0.0;  // certified lambda_min <= upper
    double tol = 0.0;

    // Violated: witness vector with certified negative Rayleigh quotient.
    std::vector<double> witness;
    double rayleigh = 0.0;        // certified upper bound on lambda_min
    bool exact_certificate = false;  // Rayleigh re-checked in exact rational arithmetic
    std::string detail;

    bool holds() const { return kind == Kind::Holds; }
    bool violated() const { return kind == Kind::Violated; }
};

const char* to_string(PsdVerdict::Kind k);

/// Default decision tolerance: 64 * eps * n * max|A_ij|.
double default_tol(const SymMatrixR& a);

/// Certified bracket lower <= lambda_min(A) <= upper via Householder
/// tridiagonalization and Sturm-sequence bisection. Deterministic.
std::pair<double, double> min_eig_bounds(const SymMatrixR& a, const EigConfig& cfg = {});

/// Full spectrum (ascending) plus orthonormal eigenvectors, dense path.
/// Intended for small orders (character tables, oracles).
void eig_all(const SymMatrixR& a, std::vector<double>& values,
             std::vector<std::vector<double>>& vectors);

/// Positivity verdict at tolerance tol (tol < 0 means default_tol(a)).
PsdVerdict psd_verdict(const SymMatrixR& a, double tol, const EigConfig& cfg = {});

/// Quadratic form v^T A v / v^T v evaluated with a rigorous error bound;
/// exact rational evaluation when the matrix is exact.
/// Returns (value, bound) with |value - true| <= bound (bound = 0 if exact).
std::pair<double, double> certified_rayleigh(const SymMatrixR& a, const std::vector<double>& v);

}  // namespace fusioncheck
