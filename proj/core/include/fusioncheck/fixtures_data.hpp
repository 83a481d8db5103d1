#pragma once

namespace fusioncheck::fixtures_data {

// Coefficient tensors of the built-in rings, row-major N[i][j][k] = N_{i,j}^k.

extern const int rank6_nc_rank;
extern const int rank6_nc_N[216];

extern const int k7_rank;
extern const int k7_N[343];

extern const int rank7_extra_1_rank;
extern const int rank7_extra_1_N[343];
extern const int rank7_extra_2_rank;
extern const int rank7_extra_2_N[343];
extern const int rank7_extra_3_rank;
extern const int rank7_extra_3_N[343];
extern const int rank7_extra_4_rank;
extern const int rank7_extra_4_N[343];
extern const int rank7_extra_5_rank;
extern const int rank7_extra_5_N[343];
extern const int rank7_extra_6_rank;
extern const int rank7_extra_6_N[343];
extern const int rank7_extra_7_rank;
extern const int rank7_extra_7_N[343];
extern const int rank7_extra_8_rank;
extern const int rank7_extra_8_N[343];
extern const int rank7_extra_9_rank;
extern const int rank7_extra_9_N[343];

extern const int rank8_1_rank;
extern const int rank8_1_N[512];
extern const int rank8_2_rank;
extern const int rank8_2_N[512];
extern const int rank8_3_rank;
extern const int rank8_3_N[512];
extern const int rank8_4_rank;
extern const int rank8_4_N[512];
extern const int rank8_5_rank;
extern const int rank8_5_N[512];

}  // namespace fusioncheck::fixtures_data
