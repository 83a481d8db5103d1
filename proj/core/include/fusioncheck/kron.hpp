#pragma once

#include "fusioncheck/eig.hpp"

#include <cstdint>
#include <vector>

namespace fusioncheck {

/// sum_i w_i A_i^{tensor n} applied without materializing the m^n x m^n matrix.
/// Each factor application costs n * m^{n+1} flops.
struct KronOperator {
    int m = 0;  // factor order
    int n = 1;  // tensor power
    std::vector<double> weights;
    std::vector<std::vector<double>> factors;  // row-major m*m each

    std::size_t dim() const {
        std::size_t d = 1;
        for (int i = 0; i < n; ++i) d *= static_cast<std::size_t>(m);
        return d;
    }
    std::uint64_t fingerprint() const;
};

/// y = op(x); throws on length mismatch.
std::vector<double> kron_apply(const KronOperator& op, const std::vector<double>& x);

/// Certified-bracket estimate of lambda_min via Lanczos with full
/// reorthogonalization and a deterministic seeded start vector.
std::pair<double, double> kron_min_eig(const KronOperator& op, const EigConfig& cfg = {});

}  // namespace fusioncheck
