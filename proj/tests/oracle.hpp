#pragma once

// Test-only oracles, independent of the library's eigensolver path.

#include "fusioncheck/fusion_ring.hpp"
#include "fusioncheck/kron.hpp"
#include "fusioncheck/rational.hpp"
#include "fusioncheck/sym_matrix.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using fusioncheck::Rational;

/// Exact characteristic polynomial (monic, lowest degree first) of a dense
/// rational matrix, by Faddeev-LeVerrier.
std::vector<Rational> char_poly(const std::vector<Rational>& a, int n);

/// Smallest real root of a squarefree-or-not real-rooted polynomial, isolated
/// by rational Sturm bisection to the requested width. Returns a bracketing
/// rational interval.
std::pair<Rational, Rational> smallest_root(const std::vector<Rational>& poly, const Rational& width);

/// lambda_min bracket of a symmetric matrix with exactly-representable double
/// entries, via the characteristic polynomial route.
std::pair<double, double> char_poly_min_eig(const fusioncheck::SymMatrixR& a, double width);

/// Dense materialization of a Kronecker operator (for small dimensions).
std::vector<double> materialize(const fusioncheck::KronOperator& op);

/// Deterministic pool of small valid fusion rings (rank <= 5, entries <= 3):
/// group rings, near-group rings, the one-parameter rank-2 family, and every
/// self-dual rank-3 ring found by exhaustive enumeration.
std::vector<fusioncheck::FusionRing> small_ring_pool();

/// Seeded draw of `count` rings from the pool (repetition allowed).
std::vector<fusioncheck::FusionRing> random_small_rings(int count, std::uint64_t seed);

std::uint64_t next_rand(std::uint64_t& state);

}  // namespace oracle
