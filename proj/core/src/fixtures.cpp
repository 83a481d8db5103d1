#include "fusioncheck/fixtures.hpp"

#include "fusioncheck/fixtures_data.hpp"

#include <regex>

namespace fusioncheck {

namespace {

std::vector<int> dual_from_tensor(int m, const int* N) {
    // dual(i) is the unique j with N_{i,j}^1 = 1
    std::vector<int> dual(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (N[(static_cast<size_t>(i) * m + j) * m + 0] == 1) {
                dual[i] = j + 1;
                break;
            }
    return dual;
}

FusionRing from_table(const char* name, int m, const int* N) {
    std::vector<int> tensor(N, N + static_cast<size_t>(m) * m * m);
    FusionRing ring = validate(FusionCoeffs::from_ints(m, tensor, dual_from_tensor(m, N)));
    ring.set_name(name);
    return ring;
}

}  // namespace

FusionRing fixture_cyclic(int n) {
    if (n < 1) throw ValidationError(ValidationError::Kind::IndexOutOfRange, "cyclic: n >= 1 required");
    std::vector<int> tensor(static_cast<size_t>(n) * n * n, 0);
    std::vector<int> dual(n);
    for (int i = 0; i < n; ++i) {
        dual[i] = ((n - i) % n) + 1;
        for (int j = 0; j < n; ++j)
            tensor[(static_cast<size_t>(i) * n + j) * n + (i + j) % n] = 1;
    }
    FusionRing ring = validate(FusionCoeffs::from_ints(n, tensor, dual));
    ring.set_name("cyclic_" + std::to_string(n));
    return ring;
}

FusionRing fixture_fibonacci() {
    // x2^2 = 1 + x2
    std::vector<int> tensor = {1, 0, 0, 1, 0, 1, 1, 1};
    FusionRing ring = validate(FusionCoeffs::from_ints(2, tensor, {1, 2}));
    ring.set_name("fibonacci");
    return ring;
}

FusionRing fixture_near_group(int n) {
    if (n < 1) throw ValidationError(ValidationError::Kind::IndexOutOfRange, "near_group: n >= 1 required");
    const int m = n + 1;  // g^0..g^{n-1}, then b
    const int b = n;
    std::vector<int> tensor(static_cast<size_t>(m) * m * m, 0);
    auto at = [&tensor, m](int i, int j, int k) -> int& {
        return tensor[(static_cast<size_t>(i) * m + j) * m + k];
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) at(i, j, (i + j) % n) = 1;
        at(i, b, b) = 1;  // g^i b = b
        at(b, i, b) = 1;  // b g^i = b
    }
    for (int k = 0; k < n; ++k) at(b, b, k) = 1;  // b^2 contains every group element
    at(b, b, b) = 1;                              // and b itself
    std::vector<int> dual(m);
    for (int i = 0; i < n; ++i) dual[i] = ((n - i) % n) + 1;
    dual[b] = b + 1;
    FusionRing ring = validate(FusionCoeffs::from_ints(m, tensor, dual));
    ring.set_name("near_group_" + std::to_string(n));
    return ring;
}

FusionRing fixture_k7() { return from_table("k7", fixtures_data::k7_rank, fixtures_data::k7_N); }

FusionRing fixture_rank6_nc() {
    return from_table("rank6_nc", fixtures_data::rank6_nc_rank, fixtures_data::rank6_nc_N);
}

FusionRing fixture_rank8(int idx) {
    const int* tables[] = {fixtures_data::rank8_1_N, fixtures_data::rank8_2_N, fixtures_data::rank8_3_N,
                           fixtures_data::rank8_4_N, fixtures_data::rank8_5_N};
    if (idx < 1 || idx > 5)
        throw ValidationError(ValidationError::Kind::IndexOutOfRange, "rank8: idx in 1..5");
    return from_table(("rank8_" + std::to_string(idx)).c_str(), 8, tables[idx - 1]);
}

FusionRing fixture_rank7_extra(int idx) {
    const int* tables[] = {fixtures_data::rank7_extra_1_N, fixtures_data::rank7_extra_2_N,
                           fixtures_data::rank7_extra_3_N, fixtures_data::rank7_extra_4_N,
                           fixtures_data::rank7_extra_5_N, fixtures_data::rank7_extra_6_N,
                           fixtures_data::rank7_extra_7_N, fixtures_data::rank7_extra_8_N,
                           fixtures_data::rank7_extra_9_N};
    if (idx < 1 || idx > 9)
        throw ValidationError(ValidationError::Kind::IndexOutOfRange, "rank7_extra: idx in 1..9");
    return from_table(("rank7_extra_" + std::to_string(idx)).c_str(), 7, tables[idx - 1]);
}

FusionRing fixture_ring(const std::string& kind) {
    static const std::regex param_re(R"(^([a-z0-9_]+)\((\d+)\)$)");
    std::smatch m;
    if (std::regex_match(kind, m, param_re)) {
        const std::string base = m[1];
        const int arg = std::stoi(m[2]);
        if (base == "cyclic") return fixture_cyclic(arg);
        if (base == "near_group") return fixture_near_group(arg);
        if (base == "rank8") return fixture_rank8(arg);
        if (base == "rank7_extra") return fixture_rank7_extra(arg);
        throw ValidationError(ValidationError::Kind::UnknownKind, "unknown fixture kind: " + kind);
    }
    if (kind == "fibonacci") return fixture_fibonacci();
    if (kind == "k7") return fixture_k7();
    if (kind == "rank6_nc") return fixture_rank6_nc();
    throw ValidationError(ValidationError::Kind::UnknownKind, "unknown fixture kind: " + kind);
}

std::vector<std::string> paper_fixture_names() {
    std::vector<std::string> names = {"k7", "rank6_nc"};
    for (int i = 1; i <= 5; ++i) names.push_back("rank8(" + std::to_string(i) + ")");
    for (int i = 1; i <= 9; ++i) names.push_back("rank7_extra(" + std::to_string(i) + ")");
    return names;
}

std::vector<std::vector<long long>> k7_local_blocks_s67() {
    return {{1, 0, 0, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1},
            {2, 1, 1, 2}, {0, 3, 3, 1}, {3, 1, 1, 2}};
}

}  // namespace fusioncheck
