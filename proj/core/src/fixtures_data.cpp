#include "fusioncheck/fixtures_data.hpp"

namespace fusioncheck::fixtures_data {

const int rank6_nc_rank = 6;
const int rank6_nc_N[216] = {1,0,0,0,0,0,0,1,0,0,0,0,0,0,1,0,0,0,0,0,0,1,0,0,0,0,0,0,1,0,0,0,0,0,0,1,0,1,0,0,0,0,1,4,2,2,2,2,0,2,2,1,2,4,0,2,1,2,4,2,0,2,2,4,5,4,0,2,4,2,4,5,0,0,1,0,0,0,0,2,2,1,4,2,0,1,3,1,3,3,1,2,3,3,1,3,0,2,3,3,5,4,0,4,1,3,4,5,0,0,0,1,0,0,0,2,1,2,2,4,1,2,3,3,3,1,0,1,1,3,3,3,0,4,3,1,5,4,0,2,3,3,4,5,0,0,0,0,1,0,0,2,4,2,5,4,0,4,1,3,5,4,0,2,3,3,5,4,1,5,5,5,5,7,0,4,4,4,7,7,0,0,0,0,0,1,0,2,2,4,4,5,0,2,3,3,4,5,0,4,3,1,4,5,0,4,4,4,7,7,1,5,5,5,7,5};

const int k7_rank = 7;
const int k7_N[343] = {1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,1,1,0,1,0,1,1,0,0,1,0,1,1,1,0,1,0,0,1,1,1,0,0,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,1,0,0,0,0,0,0,1,0,1,1,1,1,1,1,0,0,1,1,0,0,0,1,1,1,1,0,1,0,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,0,1,0,0,0,0,1,0,0,1,1,1,0,0,0,1,1,1,1,1,0,1,1,0,1,1,0,1,1,0,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,0,0,1,0,0,0,0,1,1,1,1,1,0,1,0,1,1,1,1,0,1,1,0,1,1,1,1,1,1,1,1,1,1,0,1,1,1,1,2,1,0,1,1,1,1,1,2,0,0,0,0,0,1,0,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,2,1,1,1,1,1,2,0,3,0,1,1,1,1,3,1,0,0,0,0,0,0,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,2,0,1,1,1,1,3,1,1,1,1,1,2,1,2};

const int rank7_extra_1_rank = 7;
const int rank7_extra_1_N[343] = {1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,1,1,1,0,0,1,1,0,1,0,0,1,1,1,0,0,0,1,1,1,1,0,0,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,1,0,0,0,0,0,1,0,0,1,1,1,1,0,1,1,0,1,1,0,0,1,0,1,1,1,0,1,0,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,0,1,0,0,0,0,0,0,1,1,1,1,0,0,1,0,1,1,1,1,1,0,1,0,1,1,0,1,1,0,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,0,0,1,0,0,0,0,1,1,1,1,1,0,1,0,1,1,1,1,0,1,1,0,1,1,1,1,1,1,1,1,1,1,0,1,1,1,1,2,1,0,1,1,1,1,1,2,0,0,0,0,0,1,0,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,2,1,1,1,1,1,2,0,3,0,1,1,1,1,3,1,0,0,0,0,0,0,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,2,0,1,1,1,1,3,1,1,1,1,1,2,1,2};

const int rank7_extra_2_rank = 7;
const int rank7_extra_2_N[343] = {1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,1,0,0,0,1,2,2,0,0,1,1,1,1,1,0,0,1,1,1,1,1,0,1,1,1,1,1,1,0,2,1,1,1,1,1,0,2,1,1,1,1,1,0,0,1,0,0,0,0,0,0,1,1,1,1,1,1,1,1,0,0,1,1,0,1,0,0,1,1,1,0,1,0,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,0,1,0,0,0,0,0,1,1,1,1,1,0,1,0,0,1,1,1,1,1,0,1,0,1,1,0,1,1,0,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,0,0,1,0,0,0,1,1,1,1,1,1,0,1,0,1,1,1,1,0,1,1,0,1,1,1,1,1,1,1,1,1,1,0,1,1,1,1,2,1,0,1,1,1,1,1,2,0,0,0,0,0,1,0,0,2,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,2,1,1,1,1,1,2,0,3,0,1,1,1,1,3,1,0,0,0,0,0,0,1,0,2,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,2,0,1,1,1,1,3,1,1,1,1,1,2,1,2};

const int rank7_extra_3_rank = 7;
const int rank7_extra_3_N[343] = {1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,1,1,1,1,2,3,3,0,1,1,2,1,1,1,0,1,2,1,2,2,2,0,2,1,2,1,1,1,0,3,1,2,1,1,1,0,3,1,2,1,1,1,0,0,1,0,0,0,0,0,1,1,2,1,1,1,1,1,0,1,0,1,1,0,2,1,0,1,1,1,0,1,0,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,0,1,0,0,0,0,1,2,1,2,2,2,0,2,1,0,1,1,1,1,1,0,2,1,2,2,0,2,1,1,1,1,1,0,2,1,2,1,1,1,0,2,1,2,1,1,1,0,0,0,0,1,0,0,0,2,1,2,1,1,1,0,1,0,1,1,1,1,0,2,1,1,1,1,1,1,1,1,1,1,1,1,0,1,1,1,1,2,1,0,1,1,1,1,1,2,0,0,0,0,0,1,0,0,3,1,2,1,1,1,0,1,1,1,1,1,1,0,2,1,2,1,1,1,0,1,1,1,1,2,1,1,1,1,1,2,0,3,0,1,1,1,1,3,1,0,0,0,0,0,0,1,0,3,1,2,1,1,1,0,1,1,1,1,1,1,0,2,1,2,1,1,1,0,1,1,1,1,1,2,0,1,1,1,1,3,1,1,1,1,1,2,1,2};

const int rank7_extra_4_rank = 7;
const int rank7_extra_4_N[343] = {1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,1,4,2,4,3,4,4,0,2,1,3,1,1,1,0,4,3,3,3,3,3,0,3,1,3,1,1,1,0,4,1,3,1,1,1,0,4,1,3,1,1,1,0,0,1,0,0,0,0,0,2,1,3,1,1,1,1,1,0,1,0,1,1,0,3,1,1,1,1,1,0,1,0,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,0,1,0,0,0,0,4,3,3,3,3,3,0,3,1,1,1,1,1,1,3,1,4,2,3,3,0,3,1,2,1,1,1,0,3,1,3,1,1,1,0,3,1,3,1,1,1,0,0,0,0,1,0,0,0,3,1,3,1,1,1,0,1,0,1,1,1,1,0,3,1,2,1,1,1,1,1,1,1,1,1,1,0,1,1,1,1,2,1,0,1,1,1,1,1,2,0,0,0,0,0,1,0,0,4,1,3,1,1,1,0,1,1,1,1,1,1,0,3,1,3,1,1,1,0,1,1,1,1,2,1,1,1,1,1,2,0,3,0,1,1,1,1,3,1,0,0,0,0,0,0,1,0,4,1,3,1,1,1,0,1,1,1,1,1,1,0,3,1,3,1,1,1,0,1,1,1,1,1,2,0,1,1,1,1,3,1,1,1,1,1,2,1,2};

const int rank7_extra_5_rank = 7;
const int rank7_extra_5_N[343] = {1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,1,1,1,0,0,1,1,0,1,3,1,1,1,1,0,0,1,0,1,1,1,0,0,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,1,0,0,0,0,0,1,3,1,1,1,1,1,3,0,3,4,5,5,0,1,3,1,1,1,1,0,1,4,1,1,1,1,0,1,5,1,1,1,1,0,1,5,1,1,1,1,0,0,0,1,0,0,0,0,0,1,0,1,1,1,0,1,3,1,1,1,1,1,0,1,1,0,1,1,0,1,1,0,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,0,0,1,0,0,0,0,1,1,1,1,1,0,1,4,1,1,1,1,0,1,1,0,1,1,1,1,1,1,1,1,1,1,0,1,1,1,1,2,1,0,1,1,1,1,1,2,0,0,0,0,0,1,0,0,1,1,1,1,1,1,0,1,5,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,2,1,1,1,1,1,2,0,3,0,1,1,1,1,3,1,0,0,0,0,0,0,1,0,1,1,1,1,1,1,0,1,5,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,2,0,1,1,1,1,3,1,1,1,1,1,2,1,2};

const int rank7_extra_6_rank = 7;
const int rank7_extra_6_N[343] = {1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,1,0,1,1,0,1,1,0,1,3,2,1,1,1,0,1,2,0,1,1,1,0,0,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,1,0,0,0,0,0,1,3,2,1,1,1,1,3,3,3,4,5,5,0,2,3,3,2,2,2,0,1,4,2,1,1,1,0,1,5,2,1,1,1,0,1,5,2,1,1,1,0,0,0,1,0,0,0,0,1,2,0,1,1,1,0,2,3,3,2,2,2,1,0,3,0,1,2,2,0,1,2,1,1,1,1,0,1,2,2,1,1,1,0,1,2,2,1,1,1,0,0,0,0,1,0,0,0,0,1,1,1,1,1,0,1,4,2,1,1,1,0,1,2,1,1,1,1,1,1,1,1,1,1,1,0,1,1,1,1,2,1,0,1,1,1,1,1,2,0,0,0,0,0,1,0,0,1,1,1,1,1,1,0,1,5,2,1,1,1,0,1,2,2,1,1,1,0,1,1,1,1,2,1,1,1,1,1,2,0,3,0,1,1,1,1,3,1,0,0,0,0,0,0,1,0,1,1,1,1,1,1,0,1,5,2,1,1,1,0,1,2,2,1,1,1,0,1,1,1,1,1,2,0,1,1,1,1,3,1,1,1,1,1,2,1,2};

const int rank7_extra_7_rank = 7;
const int rank7_extra_7_N[343] = {1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,1,5,5,3,3,4,4,0,5,3,4,3,3,3,0,3,4,0,2,2,2,0,3,3,2,1,1,1,0,4,3,2,1,1,1,0,4,3,2,1,1,1,0,0,1,0,0,0,0,0,5,3,4,3,3,3,1,3,1,5,3,4,4,0,4,5,0,0,0,0,0,3,3,0,1,1,1,0,3,4,0,1,1,1,0,3,4,0,1,1,1,0,0,0,1,0,0,0,0,3,4,0,2,2,2,0,4,5,0,0,0,0,1,0,0,2,2,3,3,0,2,0,2,1,1,1,0,2,0,3,1,1,1,0,2,0,3,1,1,1,0,0,0,0,1,0,0,0,3,3,2,1,1,1,0,3,3,0,1,1,1,0,2,0,2,1,1,1,1,1,1,1,1,1,1,0,1,1,1,1,2,1,0,1,1,1,1,1,2,0,0,0,0,0,1,0,0,4,3,2,1,1,1,0,3,4,0,1,1,1,0,2,0,3,1,1,1,0,1,1,1,1,2,1,1,1,1,1,2,0,3,0,1,1,1,1,3,1,0,0,0,0,0,0,1,0,4,3,2,1,1,1,0,3,4,0,1,1,1,0,2,0,3,1,1,1,0,1,1,1,1,1,2,0,1,1,1,1,3,1,1,1,1,1,2,1,2};

const int rank7_extra_8_rank = 7;
const int rank7_extra_8_N[343] = {1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,1,1,1,0,0,1,1,0,1,4,1,1,1,1,0,0,1,0,1,1,1,0,0,1,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,1,0,0,0,0,0,1,4,1,1,1,1,1,4,4,4,5,6,6,0,1,4,1,1,1,1,0,1,5,1,1,1,1,0,1,6,1,1,1,1,0,1,6,1,1,1,1,0,0,0,1,0,0,0,0,0,1,0,1,1,1,0,1,4,1,1,1,1,1,0,1,1,0,1,1,0,1,1,0,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,0,0,1,0,0,0,0,1,1,1,1,1,0,1,5,1,1,1,1,0,1,1,0,1,1,1,1,1,1,1,1,1,1,0,1,1,1,1,2,1,0,1,1,1,1,1,2,0,0,0,0,0,1,0,0,1,1,1,1,1,1,0,1,6,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,2,1,1,1,1,1,2,0,3,0,1,1,1,1,3,1,0,0,0,0,0,0,1,0,1,1,1,1,1,1,0,1,6,1,1,1,1,0,1,1,1,1,1,1,0,1,1,1,1,1,2,0,1,1,1,1,3,1,1,1,1,1,2,1,2};

const int rank7_extra_9_rank = 7;
const int rank7_extra_9_N[343] = {1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,1,1,5,4,3,4,4,0,5,2,5,1,1,1,0,4,5,2,3,3,3,0,3,1,3,1,1,1,0,4,1,3,1,1,1,0,4,1,3,1,1,1,0,0,1,0,0,0,0,0,5,2,5,1,1,1,1,2,1,2,3,4,4,0,5,2,3,2,2,2,0,1,3,2,1,1,1,0,1,4,2,1,1,1,0,1,4,2,1,1,1,0,0,0,1,0,0,0,0,4,5,2,3,3,3,0,5,2,3,2,2,2,1,2,3,6,2,3,3,0,3,2,2,1,1,1,0,3,2,3,1,1,1,0,3,2,3,1,1,1,0,0,0,0,1,0,0,0,3,1,3,1,1,1,0,1,3,2,1,1,1,0,3,2,2,1,1,1,1,1,1,1,1,1,1,0,1,1,1,1,2,1,0,1,1,1,1,1,2,0,0,0,0,0,1,0,0,4,1,3,1,1,1,0,1,4,2,1,1,1,0,3,2,3,1,1,1,0,1,1,1,1,2,1,1,1,1,1,2,0,3,0,1,1,1,1,3,1,0,0,0,0,0,0,1,0,4,1,3,1,1,1,0,1,4,2,1,1,1,0,3,2,3,1,1,1,0,1,1,1,1,1,2,0,1,1,1,1,3,1,1,1,1,1,2,1,2};

const int rank8_1_rank = 8;
const int rank8_1_N[512] = {1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,0,0,0,1,1,1,0,0,0,1,0,0,0,0,0,1,1,0,0,1,0,1,1,1,1,0,0,1,1,0,1,1,1,0,0,0,1,1,1,1,1,0,1,0,1,1,1,1,1,0,1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,1,0,0,0,0,0,1,1,0,1,0,1,1,0,0,0,0,1,0,0,1,1,1,1,0,1,0,1,0,1,1,1,0,0,0,1,1,1,1,1,0,0,1,1,1,1,1,1,0,0,1,1,1,1,1,1,0,0,0,1,0,0,0,0,0,0,1,0,1,1,1,1,0,1,0,0,1,1,1,1,1,0,0,2,2,1,2,2,0,1,1,2,0,2,2,2,0,1,1,1,2,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,0,0,0,1,0,0,0,0,0,1,1,0,1,1,1,0,1,0,1,0,1,1,1,0,1,1,2,0,2,2,2,1,0,0,0,4,1,2,2,0,1,1,2,1,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,0,0,0,0,1,0,0,0,0,0,1,1,1,1,1,0,0,0,1,1,1,1,1,0,1,1,1,2,2,2,2,0,1,1,2,1,2,2,2,1,1,1,2,2,2,2,2,0,1,1,2,2,2,3,2,0,1,1,2,2,2,2,3,0,0,0,0,0,0,1,0,0,1,0,1,1,1,1,1,0,0,1,1,1,1,1,1,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,3,2,1,1,1,2,2,3,0,5,0,1,1,2,2,2,5,1,0,0,0,0,0,0,0,1,0,1,0,1,1,1,1,1,0,0,1,1,1,1,1,1,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,3,0,1,1,2,2,2,5,1,1,1,1,2,2,3,1,4};

const int rank8_2_rank = 8;
const int rank8_2_N[512] = {1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,0,0,0,1,1,1,0,0,0,1,0,0,0,0,0,1,1,0,0,1,0,1,1,1,1,0,0,1,1,0,1,1,1,0,0,0,1,1,1,1,1,0,1,0,1,1,1,1,1,0,1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,1,0,0,0,0,0,1,1,0,1,0,1,1,0,0,0,0,1,0,0,1,1,1,1,0,1,0,1,0,1,1,1,0,0,0,1,1,1,1,1,0,0,1,1,1,1,1,1,0,0,1,1,1,1,1,1,0,0,0,1,0,0,0,0,0,0,1,0,1,1,1,1,0,1,0,0,1,1,1,1,1,0,0,3,1,1,2,2,0,1,1,1,1,2,2,2,0,1,1,1,2,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,0,0,0,1,0,0,0,0,0,1,1,0,1,1,1,0,1,0,1,0,1,1,1,0,1,1,1,1,2,2,2,1,0,0,1,3,1,2,2,0,1,1,2,1,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,0,0,0,0,1,0,0,0,0,0,1,1,1,1,1,0,0,0,1,1,1,1,1,0,1,1,1,2,2,2,2,0,1,1,2,1,2,2,2,1,1,1,2,2,2,2,2,0,1,1,2,2,2,3,2,0,1,1,2,2,2,2,3,0,0,0,0,0,0,1,0,0,1,0,1,1,1,1,1,0,0,1,1,1,1,1,1,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,3,2,1,1,1,2,2,3,0,5,0,1,1,2,2,2,5,1,0,0,0,0,0,0,0,1,0,1,0,1,1,1,1,1,0,0,1,1,1,1,1,1,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,3,0,1,1,2,2,2,5,1,1,1,1,2,2,3,1,4};

const int rank8_3_rank = 8;
const int rank8_3_N[512] = {1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,0,0,0,1,1,1,0,0,0,1,0,0,0,0,0,1,1,0,0,1,1,0,1,1,1,0,0,1,0,1,1,1,1,0,0,0,1,1,1,1,1,0,1,0,1,1,1,1,1,0,1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,1,0,0,0,0,0,1,1,0,1,0,1,1,0,0,0,0,1,0,1,0,1,1,1,0,1,0,0,1,1,1,1,0,0,0,1,1,1,1,1,0,0,1,1,1,1,1,1,0,0,1,1,1,1,1,1,0,0,0,1,0,0,0,0,0,0,1,1,0,1,1,1,0,1,0,1,0,1,1,1,1,1,1,0,3,1,2,2,0,0,0,3,0,2,2,2,0,1,1,1,2,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,0,0,0,1,0,0,0,0,0,1,0,1,1,1,1,0,1,0,0,1,1,1,1,0,0,0,3,0,2,2,2,1,1,1,0,3,1,2,2,0,1,1,2,1,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,0,0,0,0,1,0,0,0,0,0,1,1,1,1,1,0,0,0,1,1,1,1,1,0,1,1,1,2,2,2,2,0,1,1,2,1,2,2,2,1,1,1,2,2,2,2,2,0,1,1,2,2,2,3,2,0,1,1,2,2,2,2,3,0,0,0,0,0,0,1,0,0,1,0,1,1,1,1,1,0,0,1,1,1,1,1,1,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,3,2,1,1,1,2,2,3,0,5,0,1,1,2,2,2,5,1,0,0,0,0,0,0,0,1,0,1,0,1,1,1,1,1,0,0,1,1,1,1,1,1,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,3,0,1,1,2,2,2,5,1,1,1,1,2,2,3,1,4};

const int rank8_4_rank = 8;
const int rank8_4_N[512] = {1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,0,0,0,1,1,1,0,0,0,1,0,0,0,0,0,1,1,0,0,1,1,0,1,1,1,0,0,1,0,1,1,1,1,0,0,0,1,1,1,1,1,0,1,0,1,1,1,1,1,0,1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,1,0,0,0,0,0,1,1,0,1,0,1,1,0,0,0,0,1,0,1,0,1,1,1,0,1,0,0,1,1,1,1,0,0,0,1,1,1,1,1,0,0,1,1,1,1,1,1,0,0,1,1,1,1,1,1,0,0,0,1,0,0,0,0,0,0,1,1,0,1,1,1,0,1,0,1,0,1,1,1,1,1,1,1,2,1,2,2,0,0,0,2,1,2,2,2,0,1,1,1,2,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,0,0,0,1,0,0,0,0,0,1,0,1,1,1,1,0,1,0,0,1,1,1,1,0,0,0,2,1,2,2,2,1,1,1,1,2,1,2,2,0,1,1,2,1,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,0,0,0,0,1,0,0,0,0,0,1,1,1,1,1,0,0,0,1,1,1,1,1,0,1,1,1,2,2,2,2,0,1,1,2,1,2,2,2,1,1,1,2,2,2,2,2,0,1,1,2,2,2,3,2,0,1,1,2,2,2,2,3,0,0,0,0,0,0,1,0,0,1,0,1,1,1,1,1,0,0,1,1,1,1,1,1,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,3,2,1,1,1,2,2,3,0,5,0,1,1,2,2,2,5,1,0,0,0,0,0,0,0,1,0,1,0,1,1,1,1,1,0,0,1,1,1,1,1,1,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,3,0,1,1,2,2,2,5,1,1,1,1,2,2,3,1,4};

const int rank8_5_rank = 8;
const int rank8_5_N[512] = {1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,0,0,0,1,1,1,0,0,0,1,0,0,0,0,0,1,1,0,0,1,0,1,1,1,1,0,0,1,1,0,1,1,1,0,0,0,1,1,1,1,1,0,1,0,1,1,1,1,1,0,1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,1,0,0,0,0,0,1,1,0,1,0,1,1,0,0,0,0,1,0,0,1,1,1,1,0,1,0,1,0,1,1,1,0,0,0,1,1,1,1,1,0,0,1,1,1,1,1,1,0,0,1,1,1,1,1,1,0,0,0,1,0,0,0,0,0,0,1,0,1,1,1,1,0,1,0,0,1,1,1,1,0,1,1,2,0,2,2,2,1,0,0,2,2,1,2,2,0,1,1,1,2,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,0,0,0,1,0,0,0,0,0,1,1,0,1,1,1,0,1,0,1,0,1,1,1,1,0,0,2,2,1,2,2,0,1,1,0,2,2,2,2,0,1,1,2,1,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,0,0,0,0,1,0,0,0,0,0,1,1,1,1,1,0,0,0,1,1,1,1,1,0,1,1,1,2,2,2,2,0,1,1,2,1,2,2,2,1,1,1,2,2,2,2,2,0,1,1,2,2,2,3,2,0,1,1,2,2,2,2,3,0,0,0,0,0,0,1,0,0,1,0,1,1,1,1,1,0,0,1,1,1,1,1,1,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,3,2,1,1,1,2,2,3,0,5,0,1,1,2,2,2,5,1,0,0,0,0,0,0,0,1,0,1,0,1,1,1,1,1,0,0,1,1,1,1,1,1,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,2,0,1,1,2,2,2,2,3,0,1,1,2,2,2,5,1,1,1,1,2,2,3,1,4};

} // namespace fusioncheck::fixtures_data