#include "fusioncheck/fixtures.hpp"
#include "fusioncheck/fusion_ring.hpp"

#include <doctest.h>

#include <cmath>

using namespace fusioncheck;

namespace {

std::vector<int> tensor_of(const FusionRing& ring) {
    const int m = ring.rank();
    std::vector<int> t(m * m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                t[(i * m + j) * m + k] = static_cast<int>(std::llround(ring.coeffs().n(i, j, k)));
    return t;
}

}  // namespace

TEST_CASE("k7 validates as a commutative self-dual ring") {
    FusionRing ring = fixture_k7();
    CHECK(ring.rank() == 7);
    CHECK(ring.commutative());
    for (int i = 0; i < 7; ++i) CHECK(ring.dual(i) == i);
    CHECK(ring.dims().integral);
    std::vector<long long> want = {1, 5, 5, 5, 6, 7, 7};
    CHECK(ring.dims().d_int == want);
}

TEST_CASE("rank-1 ring is trivially valid") {
    FusionRing ring = validate(FusionCoeffs::from_ints(1, {1}, {1}));
    CHECK(ring.rank() == 1);
    CHECK(ring.commutative());
    CHECK(ring.dim(0) == doctest::Approx(1.0));
}

TEST_CASE("zeroing a trace entry is reported as TraceAxiom at (2,2)") {
    FusionRing k7 = fixture_k7();
    std::vector<int> t = tensor_of(k7);
    t[(1 * 7 + 1) * 7 + 0] = 0;  // N_{2,2}^1 = 0
    std::vector<int> dual = {1, 2, 3, 4, 5, 6, 7};
    try {
        validate(FusionCoeffs::from_ints(7, t, dual));
        FAIL("expected TraceAxiom");
    } catch (const ValidationError& e) {
        CHECK(e.kind() == ValidationError::Kind::TraceAxiom);
        CHECK(std::string(e.what()).find("(2,2)") != std::string::npos);
    }
}

TEST_CASE("associativity violations are caught") {
    // tamper with an interior coefficient of the near-group ring
    FusionRing ng = fixture_near_group(2);
    std::vector<int> t = tensor_of(ng);
    t[(2 * 3 + 2) * 3 + 1] += 1;  // b^2 gains an extra g
    bool threw = false;
    try {
        validate(FusionCoeffs::from_ints(3, t, {1, 2, 3}));
    } catch (const ValidationError& e) {
        threw = true;
        CHECK((e.kind() == ValidationError::Kind::Associativity ||
               e.kind() == ValidationError::Kind::DualAntiInvolution ||
               e.kind() == ValidationError::Kind::FrobeniusReciprocity));
    }
    CHECK(threw);
}

TEST_CASE("fp dimensions on the standard small rings") {
    SUBCASE("Z2 group ring") {
        FusionRing ring = fixture_cyclic(2);
        CHECK(ring.dim(0) == doctest::Approx(1.0));
        CHECK(ring.dim(1) == doctest::Approx(1.0));
        CHECK(ring.dims().integral);
    }
    SUBCASE("fibonacci") {
        FusionRing ring = fixture_fibonacci();
        const double phi = 0.5 * (1.0 + std::sqrt(5.0));
        CHECK(ring.dim(1) == doctest::Approx(phi).epsilon(1e-12));
        CHECK_FALSE(ring.dims().integral);
    }
    SUBCASE("near_group(2) has d_b = 2") {
        FusionRing ring = fixture_near_group(2);
        CHECK(ring.rank() == 3);
        CHECK(ring.dim(2) == doctest::Approx(2.0));
    }
}

TEST_CASE("dimension residuals and operator norms hold on every fixture") {
    for (const std::string& name : paper_fixture_names()) {
        FusionRing ring = fixture_ring(name);
        const int m = ring.rank();
        const auto& d = ring.dims().d;
        double dnorm = 0.0;
        for (double x : d) dnorm += x * x;
        dnorm = std::sqrt(dnorm);
        for (int i = 0; i < m; ++i) {
            double res = 0.0;
            for (int r = 0; r < m; ++r) {
                double acc = 0.0;
                for (int c = 0; c < m; ++c) acc += ring.m_entry(i, r, c) * d[c];
                acc -= d[i] * d[r];
                res += acc * acc;
            }
            CHECK(std::sqrt(res) <= 1e-9 * dnorm);
        }
    }
}

TEST_CASE("transpose of M_i equals M_dual(i) exactly") {
    for (const std::string& name : {std::string("rank8(1)"), std::string("rank6_nc")}) {
        FusionRing ring = fixture_ring(name);
        const int m = ring.rank();
        for (int i = 0; i < m; ++i)
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c)
                    CHECK(ring.m_entry(i, r, c) == ring.m_entry(ring.dual(i), c, r));
    }
}

TEST_CASE("commutativity flag matches brute-force commutation") {
    CHECK(fixture_k7().commutative());
    CHECK(fixture_rank8(3).commutative());
    CHECK_FALSE(fixture_rank6_nc().commutative());
}

TEST_CASE("all bundled paper fixtures validate") {
    for (const std::string& name : paper_fixture_names()) CHECK_NOTHROW(fixture_ring(name));
}

TEST_CASE("local data restriction") {
    SUBCASE("k7 on S={6,7} reproduces the printed blocks") {
        LocalData L = local_data(fixture_k7(), {6, 7});
        CHECK(L.s == 2);
        CHECK(L.entry(5, 0, 0).value == 0);
        CHECK(L.entry(5, 0, 1).value == 3);
        CHECK(L.entry(5, 1, 0).value == 3);
        CHECK(L.entry(5, 1, 1).value == 1);
        CHECK(L.entry(6, 0, 0).value == 3);
        CHECK(L.entry(6, 0, 1).value == 1);
        CHECK(L.entry(6, 1, 1).value == 2);
        CHECK(L.all_known());
    }
    SUBCASE("rank8 on S={7,8}") {
        LocalData L = local_data(fixture_rank8(1), {7, 8});
        CHECK(L.entry(6, 0, 0).value == 0);
        CHECK(L.entry(6, 0, 1).value == 5);
        CHECK(L.entry(7, 0, 0).value == 5);
        CHECK(L.entry(7, 1, 1).value == 4);
    }
    SUBCASE("full subset returns the fusion matrices") {
        FusionRing ring = fixture_cyclic(3);
        LocalData L = local_data(ring, {1, 2, 3});
        for (int i = 0; i < 3; ++i)
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    CHECK(L.entry(i, r, c).value == ring.m_entry(i, r, c));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(local_data(fixture_k7(), {}), ValidationError);
        CHECK_THROWS_AS(local_data(fixture_k7(), {8}), ValidationError);
    }
}

TEST_CASE("fixture dispatch and bad kinds") {
    CHECK(fixture_ring("cyclic(3)").rank() == 3);
    CHECK(fixture_ring("rank8(2)").rank() == 8);
    CHECK_THROWS_AS(fixture_ring("hexagon"), ValidationError);
    CHECK_THROWS_AS(fixture_ring("rank8(9)"), ValidationError);
}

TEST_CASE("grading validation") {
    FusionRing z2 = fixture_cyclic(2);
    GradingMap ok{2, {0, 1}};
    CHECK_NOTHROW(validate_grading(z2, ok));
    // fibonacci admits no nontrivial Z2 grading: x2^2 contains x2
    FusionRing fib = fixture_fibonacci();
    GradingMap bad{2, {0, 1}};
    CHECK_THROWS_AS(validate_grading(fib, bad), ValidationError);
}
