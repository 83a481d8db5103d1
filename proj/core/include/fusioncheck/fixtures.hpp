#pragma once

#include "fusioncheck/fusion_ring.hpp"

#include <string>
#include <vector>

namespace fusioncheck {

FusionRing fixture_cyclic(int n);
FusionRing fixture_fibonacci();
/// Near-group ring on Z_n plus one extra object b with b^2 = b + sum of all group elements.
FusionRing fixture_near_group(int n);
FusionRing fixture_k7();
FusionRing fixture_rank6_nc();
FusionRing fixture_rank8(int idx);        // idx in 1..5
FusionRing fixture_rank7_extra(int idx);  // idx in 1..9

/// Dispatch by name: "cyclic(3)", "fibonacci", "near_group(2)", "k7",
/// "rank6_nc", "rank8(1)", "rank7_extra(4)".
FusionRing fixture_ring(const std::string& kind);

/// Names of all built-in rings transcribed from printed fusion data
/// (k7, rank6_nc, the rank-8 quintet and the nine rank-7 companions).
std::vector<std::string> paper_fixture_names();

/// The 2x2 local blocks of k7 on S={6,7}, reused by the dimension-perturbation
/// machinery where the dimensions are free parameters.
std::vector<std::vector<long long>> k7_local_blocks_s67();

}  // namespace fusioncheck
