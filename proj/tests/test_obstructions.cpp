#include "fusioncheck/obstructions.hpp"
#include "fusioncheck/fixtures.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace fusioncheck;

TEST_CASE("two-generator obstruction") {
    SUBCASE("dominant unit terms stay positive") {
        TwoGenParams p{1, 1, 1, 1, 50.0, 50.0};
        CHECK_FALSE(two_gen_obstruction(p, 6).has_value());
    }
    SUBCASE("the relabeled R(4,5) data triggers at n=3") {
        FusionRing r = r4k_ring(5);
        // after swapping x2 and x3: s = 0, l = 5, t = 0, k = 5
        TwoGenParams p{0, 0, 5, 5, r.dim(2), r.dim(1)};
        auto nab = two_gen_obstruction(p, 6);
        REQUIRE(nab.has_value());
        CHECK((*nab)[0] == 3);
    }
    SUBCASE("invalid parameters throw") {
        TwoGenParams p{0, 0, 1, 0, 2, 2};  // l = 0
        CHECK_THROWS_AS(two_gen_obstruction(p, 4), CriteriaError);
    }
}

TEST_CASE("non-self-dual branch") {
    SUBCASE("s = tau3 cancels on symmetric splits") {
        CHECK_FALSE(two_gen_obstruction_nsd(2.0, 2.0, 3.0, 6).has_value());
    }
    SUBCASE("tau3 = 0 with s > 0 never triggers") {
        CHECK_FALSE(two_gen_obstruction_nsd(1.5, 0.0, 2.0, 6).has_value());
    }
    SUBCASE("large tau3 versus small s triggers") {
        auto nab = two_gen_obstruction_nsd(0.5, 9.0, 2.0, 6);
        CHECK(nab.has_value());
    }
}

TEST_CASE("r4k family") {
    SUBCASE("rings validate for k up to 20") {
        for (int k = 1; k <= 20; ++k) CHECK_NOTHROW(r4k_ring(k));
    }
    SUBCASE("verdicts are Violated for k = 3..10") {
        for (int k = 3; k <= 10; ++k) {
            R4kReport rep = r4k_check(k);
            CHECK(rep.verdict.violated());
        }
    }
    SUBCASE("f is negative at the Perron d3 for k = 5..10") {
        for (int k = 5; k <= 10; ++k) {
            R4kReport rep = r4k_check(k);
            CHECK(rep.f_value < 0.0);
            CHECK(rep.d3 >= std::sqrt(static_cast<double>(k) * k + k + 1) - 1e-9);
            CHECK(rep.d3 <= k + 1 + 1e-9);
        }
    }
    SUBCASE("the scan finds n=3") {
        R4kReport rep = r4k_check(7);
        CHECK(rep.scan_found);
        CHECK(rep.nab[0] == 3);
    }
}

TEST_CASE("k7 perturbation thresholds") {
    K7Perturbation p = k7_perturbation(5, 5, 5, 6, 7);
    CHECK(p.Q2p == doctest::Approx(8.882676).epsilon(1e-6));
    CHECK(p.Q1p == doctest::Approx(6.537671).epsilon(1e-6));
    CHECK(p.threshold == doctest::Approx(p.Q2p));
    SUBCASE("the k7 dimension vector is excluded: d6 = 7 < 8.88") {
        CHECK(7.0 < p.threshold);
    }
    SUBCASE("universal bounds hold on random inputs") {
        const double b1 = 4.5 * (1.0 + std::sqrt(37.0));
        const double b2 = 9.0 * (std::sqrt(10.0) - 1.0);
        std::uint64_t state = 31337;
        for (int trial = 0; trial < 10000; ++trial) {
            double d[5];
            for (double& x : d)
                x = 1.0 + 49.0 * static_cast<double>(oracle::next_rand(state) % 100000) / 100000.0;
            K7Perturbation q = k7_perturbation(d[0], d[1], d[2], d[3], d[4]);
            CHECK(q.Q1p < b1);
            CHECK(q.Q2p < b2);
        }
    }
    SUBCASE("dimensions below 1 are rejected") {
        CHECK_THROWS_AS(k7_perturbation(0.5, 5, 5, 6, 7), CriteriaError);
    }
}

TEST_CASE("corner determinant identity") {
    SUBCASE("factored formula matches the brute-force 7x7 minor") {
        std::uint64_t state = 4242;
        for (int trial = 0; trial < 100; ++trial) {
            std::array<double, 6> d;
            for (double& x : d)
                x = 1.0 + 9.0 * static_cast<double>(oracle::next_rand(state) % 100000) / 100000.0;
            SymMatrixR t = k7_local_t3(d);
            // LU determinant of the 7x7 top-left corner
            double lu[49];
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j) lu[i * 7 + j] = t.at(i, j);
            double det = 1.0;
            for (int c = 0; c < 7; ++c) {
                int piv = c;
                for (int r = c + 1; r < 7; ++r)
                    if (std::abs(lu[r * 7 + c]) > std::abs(lu[piv * 7 + c])) piv = r;
                if (piv != c) {
                    for (int j = 0; j < 7; ++j) std::swap(lu[c * 7 + j], lu[piv * 7 + j]);
                    det = -det;
                }
                det *= lu[c * 7 + c];
                for (int r = c + 1; r < 7; ++r) {
                    double f = lu[r * 7 + c] / lu[c * 7 + c];
                    for (int j = c; j < 7; ++j) lu[r * 7 + j] -= f * lu[c * 7 + j];
                }
            }
            double formula = k7_corner_det(d[0], d[1], d[2], d[3], d[4], d[5]);
            CHECK(formula == doctest::Approx(det).epsilon(1e-9));
        }
    }
    SUBCASE("exact rational agreement at rational dimensions") {
        std::array<Rational, 6> d = {Rational(3, 2), Rational(7, 3), Rational(4),
                                     Rational(11, 2), Rational(5),  Rational(13, 4)};
        std::vector<Rational> t = k7_local_t3_exact(d);
        // restrict to the 7x7 corner and take the exact determinant
        std::vector<Rational> corner(49);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) corner[i * 7 + j] = t[i * 8 + j];
        Rational brute = rat_det(corner, 7);
        Rational formula = k7_corner_det_exact(d[0], d[1], d[2], d[3], d[4], d[5]);
        CHECK(brute == formula);
    }
}

TEST_CASE("full-determinant quartic and the alpha threshold") {
    SUBCASE("re-derived quartic has the printed roots") {
        std::array<double, 5> q = k7_full_det_quartic();
        auto eval = [&q](double x) {
            return ((q[4] * x + q[3]) * x + q[2]) * x * x + q[1] * x + q[0];
        };
        // positive roots near 6.2458 and 9.5934
        for (double root : {6.245789619885721, 9.593447799759458})
            CHECK(std::abs(eval(root)) <=
                  1e-9 * (std::abs(q[4]) * std::pow(root, 4.0)));
        // coefficient ratios match the degree-4 integer polynomial
        CHECK(q[3] / q[4] == doctest::Approx(-966777308.0 / 210556551.0).epsilon(1e-12));
        CHECK(q[0] / q[4] == doctest::Approx(306237561840.0 / 210556551.0).epsilon(1e-12));
    }
    SUBCASE("lambda_min sign change at alpha") {
        double alpha = k7_sign_change_d6(7.0, 12.0);
        CHECK(alpha == doctest::Approx(9.5934478).epsilon(1e-4));
    }
    SUBCASE("all nine rank-7 companions are covered by the threshold") {
        for (int idx = 1; idx <= 9; ++idx) {
            FusionRing ring = fixture_rank7_extra(idx);
            const auto& d = ring.dims().d;
            K7Perturbation p = k7_perturbation(d[1], d[2], d[3], d[4], d[6]);
            CHECK(d[5] < p.threshold);
        }
    }
}

TEST_CASE("orbifold scaling") {
    LocalData L = local_data(fixture_k7(), {6, 7});
    SymMatrixR base = localized_matrix(L, 3);
    auto [blo, bhi] = min_eig_bounds(base);
    SUBCASE("ell = 1 is the identity") {
        SymMatrixR s1 = orbifold_scaled(L, 3, 1);
        CHECK(s1.at(0, 0) == doctest::Approx(base.at(0, 0)));
    }
    SUBCASE("lambda_min scales by ell^2") {
        for (int ell = 2; ell <= 5; ++ell) {
            SymMatrixR s = orbifold_scaled(L, 3, ell);
            auto [lo, hi] = min_eig_bounds(s);
            CHECK(0.5 * (lo + hi) ==
                  doctest::Approx(ell * ell * 0.5 * (blo + bhi)).epsilon(1e-9));
        }
    }
    SUBCASE("verdict sign is scale invariant on random local data") {
        std::uint64_t state = 555;
        for (int trial = 0; trial < 20; ++trial) {
            LocalData R;
            R.labels = {1, 2};
            R.block_count = 3;
            R.s = 2;
            R.blocks.resize(3);
            for (int i = 0; i < 3; ++i) {
                R.blocks[i].resize(4);
                for (int t = 0; t < 4; ++t)
                    R.blocks[i][t] = {static_cast<double>(oracle::next_rand(state) % 4), true};
                R.blocks[i][1].value = R.blocks[i][2].value;  // keep each block symmetric
            }
            R.blocks[0] = {{1, true}, {0, true}, {0, true}, {1, true}};
            R.dims = {1.0, 2.5, 3.5};
            R.dual = {0, 1, 2};
            PsdVerdict v1 = check_matrix(localized_matrix(R, 2));
            for (int ell : {2, 4}) {
                PsdVerdict v2 = check_matrix(orbifold_scaled(R, 2, ell));
                CHECK(v1.kind == v2.kind);
            }
        }
    }
}

TEST_CASE("graph family inequality") {
    SUBCASE("the (l=10, M=100, d2=20) instance is excluded at (4,2,2)") {
        GraphFamilyParams p;
        p.ell = 10;
        p.mults = {1};  // M = 1 + 100 - 1 = 100
        p.d2 = 20.0;
        CHECK(p.M() == doctest::Approx(100.0));
        auto nab = graph_family_check(p, 4);
        REQUIRE(nab.has_value());
        CHECK((*nab)[0] == 4);
        CHECK((*nab)[1] == 2);
        CHECK((*nab)[2] == 2);
        CHECK(cor56_check(p));
    }
    SUBCASE("l = 1 never triggers for n <= 6") {
        for (int mult : {1, 2, 3}) {
            GraphFamilyParams p;
            p.ell = 1;
            p.mults = {mult};
            p.d2 = 2.0 + mult;
            CHECK_FALSE(graph_family_check(p, 6).has_value());
        }
    }
    SUBCASE("whenever the corollary chain holds the scan finds (4,2,2)") {
        std::uint64_t state = 777;
        for (int trial = 0; trial < 200; ++trial) {
            GraphFamilyParams p;
            p.ell = 2 + static_cast<int>(oracle::next_rand(state) % 12);
            p.mults = {1 + static_cast<int>(oracle::next_rand(state) % 5)};
            p.d2 = 1.5 + static_cast<double>(oracle::next_rand(state) % 1000) / 25.0;
            if (!cor56_check(p)) continue;
            auto nab = graph_family_check(p, 4);
            REQUIRE(nab.has_value());
            CHECK((*nab)[0] <= 4);
        }
    }
    SUBCASE("boundary of the corollary chain is strict") {
        GraphFamilyParams p;
        p.ell = 10;
        p.mults = {1};
        p.d2 = 100.0 / std::sqrt(2.0);  // d2 = l^2 / sqrt(2) exactly
        CHECK_FALSE(cor56_check(p));
        p.d2 = 20.0;
        p.ell = 2;
        p.mults = {};  // M = 3
        CHECK_FALSE(cor56_check(p));
    }
}

TEST_CASE("remark 5.5 dimension bound") {
    SUBCASE("radical vanishes at l^2 = delta") {
        const int ell = 3;
        const double delta_sq = 81.0;  // delta = 9 = l^2
        CHECK(remark55_dim_bound(delta_sq, ell) == doctest::Approx(81.0 + 9.0 + 2.0));
    }
    SUBCASE("monotone increasing in l at fixed delta") {
        double prev = 0.0;
        for (int ell = 4; ell <= 8; ++ell) {
            double b = remark55_dim_bound(101.0, ell);
            CHECK(b > prev);
            prev = b;
        }
    }
    SUBCASE("hypothesis failure throws") {
        CHECK_THROWS_AS(remark55_dim_bound(101.0, 3), GraphError);  // l^2 = 9 < delta
    }
}

TEST_CASE("det2 bound check") {
    // Theorem-style data: M2 = [[0,l],[l,0]], M3 = [[l,0],[0,M/l]], unknown
    // off-diagonal mass in the higher blocks.
    auto make_data = [](double l, double M, double d2, bool with_unknown) {
        LocalData L;
        L.labels = {2, 3};
        L.block_count = with_unknown ? 4 : 3;
        L.s = 2;
        L.blocks.resize(L.block_count);
        auto mk = [](std::initializer_list<double> vals) {
            std::vector<LocalData::Entry> b;
            for (double v : vals) b.push_back({v, true});
            return b;
        };
        L.blocks[0] = mk({1, 0, 0, 1});
        L.blocks[1] = mk({0, l, l, 0});
        L.blocks[2] = mk({l, 0, 0, M / l});
        if (with_unknown) {
            L.blocks[3] = mk({0, 0, 0, 0});
            L.blocks[3][1].known = false;
            L.blocks[3][2].known = false;
        }
        L.dims = {1.0, d2, (d2 * d2 - 1.0) / l};
        if (with_unknown) L.dims.push_back(5.0);
        L.dual.resize(L.block_count);
        for (int i = 0; i < L.block_count; ++i) L.dual[i] = i;
        return L;
    };
    SUBCASE("excluded instance is Violated despite the unknowns") {
        LocalData L = make_data(10.0, 100.0, 20.0, true);
        PsdVerdict v = det2_bound_check(L, 4, TwistPattern::parse("I,I,swap,swap", 2));
        CHECK(v.violated());
        CHECK(v.rayleigh < 0.0);  // the determinant certificate
    }
    SUBCASE("agrees with the reduced twisted verdict when nothing is unknown") {
        LocalData L = make_data(10.0, 100.0, 20.0, false);
        TwistPattern pat = TwistPattern::parse("I,I,swap,swap", 2);
        PsdVerdict via_det = det2_bound_check(L, 4, pat);
        PsdVerdict via_matrix = check_matrix(reduced_twisted_matrix(L, 4, pat));
        CHECK(via_det.violated() == via_matrix.violated());
    }
    SUBCASE("positive known part is Inconclusive (one-sided bound)") {
        LocalData L = make_data(1.0, 1.0, 2.0, true);
        PsdVerdict v = det2_bound_check(L, 4, TwistPattern::parse("I,I,swap,swap", 2));
        CHECK(v.kind == PsdVerdict::Kind::Inconclusive);
    }
    SUBCASE("diagonal unknowns violate the precondition") {
        LocalData L = make_data(10.0, 100.0, 20.0, true);
        L.blocks[3][0].known = false;
        CHECK_THROWS_AS(det2_bound_check(L, 4, TwistPattern::parse("I,I,swap,swap", 2)),
                        CriteriaError);
    }
}
