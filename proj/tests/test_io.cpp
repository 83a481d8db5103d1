#include "fusioncheck/batch.hpp"
#include "fusioncheck/fixtures.hpp"
#include "fusioncheck/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

using namespace fusioncheck;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = FIXTURES_DIR;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("fusioncheck_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("bundled k7.ring parses to the k7 fixture") {
    FusionRing parsed = io::parse_ring(kFixtures + "/k7.ring");
    FusionRing built = fixture_k7();
    REQUIRE(parsed.rank() == built.rank());
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            for (int k = 0; k < 7; ++k)
                CHECK(parsed.coeffs().n(i, j, k) == built.coeffs().n(i, j, k));
    CHECK(parsed.name() == "k7");
}

TEST_CASE("every bundled ring file parses and validates") {
    int count = 0;
    for (const auto& e : fs::directory_iterator(kFixtures))
        if (e.path().extension() == ".ring") {
            CHECK_NOTHROW(io::parse_ring(e.path().string()));
            ++count;
        }
    CHECK(count == 16);
}

TEST_CASE("round trip: serialize then parse is semantically identical") {
    TempDir tmp;
    for (const char* name : {"k7", "rank8(3)", "rank6_nc", "near_group(3)"}) {
        FusionRing ring = fixture_ring(name);
        io::Json j = io::ring_to_json(ring);
        fs::path file = tmp.path / (ring.name() + ".ring");
        std::ofstream(file) << j.dump();
        FusionRing back = io::parse_ring(file.string());
        CHECK(back.name() == ring.name());
        CHECK(back.rank() == ring.rank());
        for (int i = 0; i < ring.rank(); ++i) {
            CHECK(back.dual(i) == ring.dual(i));
            for (int r = 0; r < ring.rank(); ++r)
                for (int c = 0; c < ring.rank(); ++c)
                    CHECK(back.m_entry(i, r, c) == ring.m_entry(i, r, c));
        }
    }
}

TEST_CASE("plain text ring format") {
    const char* text =
        "2\n"
        "1 0\n0 1\n"
        "\n"
        "0 1\n1 1\n"
        "\n"
        "1 2\n";
    FusionRing ring = io::parse_ring_text(text, "fib");
    CHECK(ring.rank() == 2);
    CHECK(ring.dim(1) == doctest::Approx(0.5 * (1 + std::sqrt(5.0))));
}

TEST_CASE("malformed inputs produce parse errors naming the field") {
    TempDir tmp;
    SUBCASE("broken dual permutation") {
        fs::path file = tmp.path / "bad.ring";
        std::ofstream(file) << R"({"name":"bad","rank":2,"dual":[1],"matrices":[[[1,0],[0,1]],[[0,1],[1,0]]]})";
        try {
            io::parse_ring(file.string());
            FAIL("expected ParseError");
        } catch (const io::ParseError& e) {
            CHECK(std::string(e.what()).find("dual") != std::string::npos);
        }
    }
    SUBCASE("wrong matrix shape") {
        fs::path file = tmp.path / "bad2.ring";
        std::ofstream(file) << R"({"name":"bad2","rank":2,"dual":[1,2],"matrices":[[[1,0],[0,1]]]})";
        CHECK_THROWS_AS(io::parse_ring(file.string()), io::ParseError);
    }
    SUBCASE("invalid fusion data is a validation error") {
        fs::path file = tmp.path / "bad3.ring";
        // unit matrix tampered
        std::ofstream(file) << R"({"name":"bad3","rank":2,"dual":[1,2],"matrices":[[[1,1],[0,1]],[[0,1],[1,0]]]})";
        CHECK_THROWS_AS(io::parse_ring(file.string()), ValidationError);
    }
}

TEST_CASE("bundled d5.graph parses") {
    BipartiteGraph g = io::parse_graph(kFixtures + "/d5.graph");
    CHECK(g.vertex_count() == 5);
    CHECK(g.root == "x1");
    CHECK(g.edges.size() == 4);
    CHECK_NOTHROW(graph_dims(g));
}

TEST_CASE("batch over the bundled corpus") {
    BatchConfig cfg;
    BatchReport rep = batch_run(kFixtures, cfg);
    REQUIRE(rep.entries.size() == 16);
    CHECK(rep.errors == 0);
    CHECK(rep.violated == 12);
    CHECK(rep.holds == 4);
    CHECK(rep.inconclusive == 0);

    // per-fixture expectations
    for (const auto& e : rep.entries) {
        bool positive = e.name.rfind("cyclic", 0) == 0 || e.name == "fibonacci" ||
                        e.name.rfind("near_group", 0) == 0;
        if (positive) {
            CHECK(e.primary.holds());
            CHECK_FALSE(e.witness.has_value());
        } else {
            CHECK((e.primary.violated() || e.witness.has_value()));
        }
    }
}

TEST_CASE("batch reports are deterministic modulo timings") {
    BatchConfig cfg;
    BatchReport a = batch_run(kFixtures, cfg);
    BatchReport b = batch_run(kFixtures, cfg);
    io::Json ja = a.to_json(/*include_timings=*/false);
    io::Json jb = b.to_json(/*include_timings=*/false);
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("batch tolerates empty and corrupt inputs") {
    TempDir tmp;
    SUBCASE("empty directory") {
        BatchReport rep = batch_run(tmp.path.string(), {});
        CHECK(rep.entries.empty());
        CHECK(rep.errors == 0);
    }
    SUBCASE("one corrupt file among good ones") {
        fs::copy_file(kFixtures + "/k7.ring", tmp.path / "k7.ring");
        std::ofstream(tmp.path / "corrupt.ring") << "{not json";
        BatchReport rep = batch_run(tmp.path.string(), {});
        REQUIRE(rep.entries.size() == 2);
        CHECK(rep.errors == 1);
        CHECK(rep.violated == 1);
    }
}
