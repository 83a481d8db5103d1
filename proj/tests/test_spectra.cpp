#include "fusioncheck/eig.hpp"
#include "fusioncheck/fixtures.hpp"
#include "fusioncheck/criteria.hpp"
#include "fusioncheck/kron.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace fusioncheck;

namespace {

SymMatrixR from_dense(const std::vector<double>& a, int n) {
    SymMatrixR out(n, SymMatrixR::EntryKind::FloatWithBound);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.set(i, j, a[static_cast<size_t>(i) * n + j]);
    return out;
}

}  // namespace

TEST_CASE("min_eig_bounds on a diagonal matrix") {
    SymMatrixR a(3, SymMatrixR::EntryKind::FloatWithBound);
    a.set(0, 0, 1.0);
    a.set(1, 1, 2.0);
    a.set(2, 2, 3.0);
    auto [lo, hi] = min_eig_bounds(a);
    CHECK(lo <= 1.0);
    CHECK(hi >= 1.0);
    CHECK(hi - lo < 1e-8);
}

TEST_CASE("min_eig_bounds brackets the k7 local eigenvalue") {
    SymMatrixR t = localized_matrix(local_data(fixture_k7(), {6, 7}), 3);
    auto [lo, hi] = min_eig_bounds(t);
    const double want = -0.6294949095094869;
    CHECK(lo <= want);
    CHECK(hi >= want);
    CHECK(hi - lo < 1e-8);
}

TEST_CASE("bracketing against the exact characteristic-polynomial oracle") {
    std::uint64_t state = 20240817ull;
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + static_cast<int>(oracle::next_rand(state) % 11);  // 2..12
        SymMatrixR a(n, SymMatrixR::EntryKind::FloatWithBound);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                int v = static_cast<int>(oracle::next_rand(state) % 9) - 4;
                a.set(i, j, static_cast<double>(v));
            }
        auto [lo, hi] = min_eig_bounds(a);
        auto [olo, ohi] = oracle::char_poly_min_eig(a, 1e-7);
        // the two independent brackets must overlap
        CHECK(lo <= ohi + 1e-12);
        CHECK(hi >= olo - 1e-12);
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("psd_verdict three-way outcomes") {
    SUBCASE("identity holds at tol 0") {
        SymMatrixR a(4, SymMatrixR::EntryKind::FloatWithBound);
        for (int i = 0; i < 4; ++i) a.set(i, i, 1.0);
        PsdVerdict v = psd_verdict(a, 0.0);
        CHECK(v.holds());
    }
    SUBCASE("2x2 with lambda_min = -0.3 is Violated with a witness") {
        SymMatrixR a(2, SymMatrixR::EntryKind::FloatWithBound);
        a.set(0, 0, 1.0);
        a.set(1, 1, 1.0);
        a.set(0, 1, 1.3);
        PsdVerdict v = psd_verdict(a, 0.0);
        CHECK(v.violated());
        CHECK(v.rayleigh < 0.0);
        CHECK(v.min_eig_lower <= -0.3);
        CHECK(v.min_eig_upper >= -0.3 - 1e-9);
        REQUIRE(v.witness.size() == 2);
        double q = 0.0, nrm = 0.0;
        q += v.witness[0] * (1.0 * v.witness[0] + 1.3 * v.witness[1]);
        q += v.witness[1] * (1.3 * v.witness[0] + 1.0 * v.witness[1]);
        nrm = v.witness[0] * v.witness[0] + v.witness[1] * v.witness[1];
        CHECK(q / nrm < 0.0);
    }
    SUBCASE("exact rational certificate on the k7 matrix") {
        SymMatrixR t = localized_matrix(local_data(fixture_k7(), {6, 7}), 3);
        REQUIRE(t.exact());
        PsdVerdict v = psd_verdict(t, 0.0);
        CHECK(v.violated());
        CHECK(v.exact_certificate);
        // re-evaluate the Rayleigh quotient in exact arithmetic once more
        auto [q, err] = certified_rayleigh(t, v.witness);
        CHECK(q + err < 0.0);
    }
}

TEST_CASE("verdict determinism across repeated runs") {
    SymMatrixR t = localized_matrix(local_data(fixture_rank8(2), {7, 8}), 3);
    PsdVerdict a = psd_verdict(t, 0.0);
    PsdVerdict b = psd_verdict(t, 0.0);
    CHECK(a.kind == b.kind);
    CHECK(a.min_eig_lower == b.min_eig_lower);
    CHECK(a.min_eig_upper == b.min_eig_upper);
    CHECK(a.rayleigh == b.rayleigh);
    CHECK(a.witness == b.witness);
}

TEST_CASE("kron_apply agrees with dense materialization") {
    SUBCASE("n=1 reduces to the weighted sum") {
        KronOperator op;
        op.m = 3;
        op.n = 1;
        op.weights = {2.0, -1.0};
        op.factors = {{1, 0, 0, 0, 1, 0, 0, 0, 1}, {0, 1, 0, 1, 0, 0, 0, 0, 2}};
        std::vector<double> x = {1, 2, 3};
        auto y = kron_apply(op, x);
        CHECK(y[0] == doctest::Approx(2 * 1 - 2));
        CHECK(y[1] == doctest::Approx(2 * 2 - 1));
        CHECK(y[2] == doctest::Approx(2 * 3 - 6));
    }
    SUBCASE("Z2 operator on a basis vector") {
        FusionRing z2 = fixture_cyclic(2);
        KronOperator op = primary_operator(z2, 3);
        std::vector<double> e1(8, 0.0);
        e1[0] = 1.0;
        auto y = kron_apply(op, e1);
        CHECK(y[0] == doctest::Approx(1.0));
        CHECK(y[7] == doctest::Approx(1.0));
        for (int i = 1; i < 7; ++i) CHECK(y[i] == doctest::Approx(0.0));
    }
    SUBCASE("random 3x3 factors at n=2 match the materialized product") {
        std::uint64_t state = 99ull;
        KronOperator op;
        op.m = 3;
        op.n = 2;
        for (int f = 0; f < 3; ++f) {
            op.weights.push_back(1.0 + static_cast<double>(oracle::next_rand(state) % 7));
            std::vector<double> fac(9);
            for (auto& v : fac)
                v = static_cast<double>(oracle::next_rand(state) % 1000) / 500.0 - 1.0;
            op.factors.push_back(fac);
        }
        std::vector<double> x(9);
        for (auto& v : x) v = static_cast<double>(oracle::next_rand(state) % 1000) / 500.0 - 1.0;
        auto y = kron_apply(op, x);
        auto dense = oracle::materialize(op);
        for (int r = 0; r < 9; ++r) {
            double acc = 0.0;
            for (int c = 0; c < 9; ++c) acc += dense[r * 9 + c] * x[c];
            CHECK(y[r] == doctest::Approx(acc).epsilon(1e-12));
        }
    }
    SUBCASE("dimension mismatch throws") {
        KronOperator op;
        op.m = 2;
        op.n = 2;
        op.weights = {1.0};
        op.factors = {{1, 0, 0, 1}};
        CHECK_THROWS(kron_apply(op, std::vector<double>(3, 0.0)));
    }
}

TEST_CASE("kron_min_eig matches dense bounds on small instances") {
    SUBCASE("Z2 T3 brackets zero") {
        KronOperator op = primary_operator(fixture_cyclic(2), 3);
        auto [lo, hi] = kron_min_eig(op);
        CHECK(lo <= 1e-9);
        CHECK(hi >= -1e-9);
        CHECK(std::abs(lo) < 1e-6);
    }
    SUBCASE("fibonacci T3 brackets zero (mixed tuples null the spectrum)") {
        KronOperator op = primary_operator(fixture_fibonacci(), 3);
        auto [lo, hi] = kron_min_eig(op);
        CHECK(std::abs(0.5 * (lo + hi)) < 1e-7);
    }
    SUBCASE("k7 full T3 is negative and matches the dense value") {
        KronOperator op = primary_operator(fixture_k7(), 3);
        auto [lo, hi] = kron_min_eig(op);
        SymMatrixR dense = primary_matrix(fixture_k7(), 3);
        auto [dlo, dhi] = min_eig_bounds(dense);
        double kron_mid = 0.5 * (lo + hi), dense_mid = 0.5 * (dlo + dhi);
        CHECK(kron_mid == doctest::Approx(dense_mid).epsilon(1e-8));
        CHECK(hi < 0.0);
    }
    SUBCASE("agreement across the small fixture family") {
        for (const char* name : {"cyclic(3)", "fibonacci", "near_group(2)", "near_group(3)"}) {
            FusionRing ring = fixture_ring(name);
            for (int n = 1; n <= 3; ++n) {
                std::size_t dim = 1;
                for (int t = 0; t < n; ++t) dim *= ring.rank();
                if (dim > 1000) continue;
                KronOperator op = primary_operator(ring, n);
                auto [lo, hi] = kron_min_eig(op);
                auto [dlo, dhi] = min_eig_bounds(primary_matrix(ring, n));
                CHECK(0.5 * (lo + hi) == doctest::Approx(0.5 * (dlo + dhi)).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("certified rayleigh error bound is honest") {
    std::uint64_t state = 7ull;
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(oracle::next_rand(state) % 5);
        SymMatrixR a(n, SymMatrixR::EntryKind::FloatWithBound);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                a.set(i, j, static_cast<double>(static_cast<int>(oracle::next_rand(state) % 17) - 8));
        std::vector<double> v(n);
        for (auto& x : v) x = static_cast<double>(oracle::next_rand(state) % 1000) / 500.0 - 1.0;
        auto [q, err] = certified_rayleigh(a, v);
        // exact recomputation through rationals
        Rational num(0), den(0);
        for (int i = 0; i < n; ++i) {
            Rational vi = rational_from_double(v[i]);
            den += vi * vi;
            for (int j = 0; j < n; ++j)
                num += vi * rational_from_double(a.at(i, j)) * rational_from_double(v[j]);
        }
        double truth = rational_to_double(num / den);
        CHECK(std::abs(q - truth) <= err + 1e-15);
    }
}
