#include "fusioncheck/schur.hpp"
#include "fusioncheck/fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

using namespace fusioncheck;

TEST_CASE("character table of cyclic(3) is the DFT table") {
    CharacterTable t = character_table(fixture_cyclic(3));
    REQUIRE(t.m == 3);
    // Perron column first: all ones
    for (int i = 0; i < 3; ++i) CHECK(std::abs(t.at(i, 0) - 1.0) < 1e-9);
    // remaining columns are the conjugate pair of primitive characters
    const std::complex<double> omega = std::polar(1.0, 2.0 * M_PI / 3.0);
    for (int j = 1; j < 3; ++j) {
        std::complex<double> l = t.at(1, j);
        bool is_omega = std::abs(l - omega) < 1e-8;
        bool is_conj = std::abs(l - std::conj(omega)) < 1e-8;
        CHECK((is_omega || is_conj));
    }
    CHECK_FALSE(t.real_valued);
}

TEST_CASE("character table of fibonacci") {
    CharacterTable t = character_table(fixture_fibonacci());
    const double phi = 0.5 * (1.0 + std::sqrt(5.0));
    CHECK(std::abs(t.at(0, 0) - 1.0) < 1e-10);
    CHECK(std::abs(t.at(1, 0) - phi) < 1e-10);
    CHECK(std::abs(t.at(0, 1) - 1.0) < 1e-10);
    CHECK(std::abs(t.at(1, 1) - (1.0 - phi)) < 1e-10);
    CHECK(t.real_valued);
}

TEST_CASE("k7 Perron column equals the dimension vector") {
    CharacterTable t = character_table(fixture_k7());
    std::vector<double> want = {1, 5, 5, 5, 6, 7, 7};
    for (int i = 0; i < 7; ++i) CHECK(std::abs(t.at(i, 0) - want[i]) < 1e-9);
    CHECK(t.residual < 1e-9);
}

TEST_CASE("Perron column on every commutative fixture") {
    for (const std::string& name : paper_fixture_names()) {
        FusionRing ring = fixture_ring(name);
        if (!ring.commutative()) continue;
        CharacterTable t = character_table(ring);
        for (int i = 0; i < ring.rank(); ++i)
            CHECK(std::abs(t.at(i, 0) - ring.dim(i)) < 1e-9 * (1.0 + ring.dim(i)));
    }
}

TEST_CASE("nu values") {
    SUBCASE("the all-Perron tuple gives the total dimension") {
        CharacterTable t = character_table(fixture_k7());
        CHECK(nu_value(t, {1, 1, 1}) == doctest::Approx(210.0).epsilon(1e-10));
    }
    SUBCASE("fibonacci (2,2,2) equals 1 - phi^-4") {
        CharacterTable t = character_table(fixture_fibonacci());
        const double phi = 0.5 * (1.0 + std::sqrt(5.0));
        CHECK(nu_value(t, {2, 2, 2}) == doctest::Approx(1.0 - std::pow(phi, -4.0)).epsilon(1e-12));
    }
    SUBCASE("k7 has a negative 3-tuple") {
        CharacterTable t = character_table(fixture_k7());
        double best = 1e300;
        for (int a = 1; a <= 7; ++a)
            for (int b = a; b <= 7; ++b)
                for (int c = b; c <= 7; ++c) best = std::min(best, nu_value(t, {a, b, c}));
        CHECK(best < 0.0);
    }
    SUBCASE("out-of-range tuples throw") {
        CharacterTable t = character_table(fixture_fibonacci());
        CHECK_THROWS_AS(nu_value(t, {0, 1, 1}), SchurError);
        CHECK_THROWS_AS(nu_value(t, {1, 3, 1}), SchurError);
    }
}

TEST_CASE("check_schur verdicts") {
    for (int n = 2; n <= 6; ++n) CHECK(check_schur(fixture_cyclic(n)).holds());
    CHECK(check_schur(fixture_fibonacci()).holds());
    CHECK(check_schur(fixture_k7()).violated());
    CHECK_THROWS_AS(check_schur(fixture_rank6_nc()), SchurError);
}

TEST_CASE("nu multiset equals the primary 3-matrix spectrum") {
    for (const char* name : {"k7", "rank8(1)", "cyclic(4)", "fibonacci", "near_group(2)"}) {
        FusionRing ring = fixture_ring(name);
        REQUIRE(ring.commutative());
        CharacterTable t = character_table(ring);
        const int m = ring.rank();
        std::vector<double> nus;
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b)
                for (int c = 1; c <= m; ++c) nus.push_back(nu_value(t, {a, b, c}));
        std::sort(nus.begin(), nus.end());
        SymMatrixR t3 = primary_matrix(ring, 3);
        std::vector<double> vals;
        std::vector<std::vector<double>> vecs;
        eig_all(t3, vals, vecs);
        REQUIRE(nus.size() == vals.size());
        for (size_t i = 0; i < nus.size(); ++i) CHECK(nus[i] == doctest::Approx(vals[i]).epsilon(1e-8));
    }
}

TEST_CASE("check_schur agrees with check_primary(3) on commutative fixtures") {
    std::vector<std::string> names = paper_fixture_names();
    names.insert(names.end(), {"cyclic(3)", "cyclic(5)", "fibonacci", "near_group(2)", "near_group(4)"});
    for (const std::string& name : names) {
        FusionRing ring = fixture_ring(name);
        if (!ring.commutative()) continue;
        bool schur_viol = check_schur(ring).violated();
        bool primary_viol = check_primary(ring, 3).violated();
        CHECK(schur_viol == primary_viol);
    }
}

TEST_CASE("minimizing tuple is reported") {
    SchurScanResult res = check_schur_full(fixture_k7());
    CHECK(res.verdict.violated());
    REQUIRE(res.min_tuple.size() == 3);
    CharacterTable t = character_table(fixture_k7());
    CHECK(nu_value(t, res.min_tuple) == doctest::Approx(res.min_nu));
    CHECK(res.min_nu < 0.0);
}
