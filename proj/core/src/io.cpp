#include "fusioncheck/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace fusioncheck::io {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string stem_of(const std::string& path) {
    size_t slash = path.find_last_of("/\\");
    std::string base = (slash == std::string::npos) ? path : path.substr(slash + 1);
    size_t dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

FusionRing ring_from_matrices(const std::string& name, int rank,
                              const std::vector<std::vector<std::vector<double>>>& mats,
                              const std::vector<int>& dual) {
    // matrices carry (M_i)[r][c] = N_{i,c}^r; recover the tensor
    std::vector<double> tensor(static_cast<size_t>(rank) * rank * rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int k = 0; k < rank; ++k)
                tensor[(static_cast<size_t>(i) * rank + j) * rank + k] = mats[i][k][j];
    FusionRing ring = validate(FusionCoeffs(rank, std::move(tensor), dual));
    ring.set_name(name);
    return ring;
}

}  // namespace

std::string fmt12(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

FusionRing parse_ring_text(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    int rank = 0;
    if (!(in >> rank) || rank < 1) throw ParseError("text ring: bad rank line");
    std::vector<std::vector<std::vector<double>>> mats(
        rank, std::vector<std::vector<double>>(rank, std::vector<double>(rank)));
    for (int i = 0; i < rank; ++i)
        for (int r = 0; r < rank; ++r)
            for (int c = 0; c < rank; ++c)
                if (!(in >> mats[i][r][c]))
                    throw ParseError("text ring: matrix " + std::to_string(i + 1) + " row " +
                                     std::to_string(r + 1) + " is incomplete");
    std::vector<int> dual(rank);
    for (int i = 0; i < rank; ++i)
        if (!(in >> dual[i])) throw ParseError("text ring: dual line is incomplete");
    return ring_from_matrices(name, rank, mats, dual);
}

FusionRing parse_ring(const std::string& path) {
    std::string text = read_file(path);
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError(path + ": empty file");
    if (text[first] != '{') return parse_ring_text(text, stem_of(path));

    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.contains("rank") || !j["rank"].is_number_integer())
        throw ParseError(path + ": field 'rank' missing or not an integer");
    int rank = j["rank"].get<int>();
    if (!j.contains("dual") || !j["dual"].is_array() || j["dual"].size() != static_cast<size_t>(rank))
        throw ParseError(path + ": field 'dual' must be a permutation of length rank");
    std::vector<int> dual;
    for (const auto& v : j["dual"]) {
        if (!v.is_number_integer()) throw ParseError(path + ": field 'dual' must hold integers");
        dual.push_back(v.get<int>());
    }
    if (!j.contains("matrices") || !j["matrices"].is_array() ||
        j["matrices"].size() != static_cast<size_t>(rank))
        throw ParseError(path + ": field 'matrices' must hold rank matrices");
    std::vector<std::vector<std::vector<double>>> mats(
        rank, std::vector<std::vector<double>>(rank, std::vector<double>(rank)));
    for (int i = 0; i < rank; ++i) {
        const auto& mi = j["matrices"][i];
        if (!mi.is_array() || mi.size() != static_cast<size_t>(rank))
            throw ParseError(path + ": matrix " + std::to_string(i + 1) + " has wrong row count");
        for (int r = 0; r < rank; ++r) {
            const auto& row = mi[r];
            if (!row.is_array() || row.size() != static_cast<size_t>(rank))
                throw ParseError(path + ": matrix " + std::to_string(i + 1) + " row " +
                                 std::to_string(r + 1) + " has wrong length");
            for (int c = 0; c < rank; ++c) mats[i][r][c] = row[c].get<double>();
        }
    }
    std::string name = j.value("name", stem_of(path));
    return ring_from_matrices(name, rank, mats, dual);
}

Json ring_to_json(const FusionRing& ring) {
    Json j;
    j["name"] = ring.name();
    j["rank"] = ring.rank();
    Json dual = Json::array();
    for (int i = 0; i < ring.rank(); ++i) dual.push_back(ring.dual(i) + 1);
    j["dual"] = dual;
    Json mats = Json::array();
    for (int i = 0; i < ring.rank(); ++i) {
        Json mi = Json::array();
        for (int r = 0; r < ring.rank(); ++r) {
            Json row = Json::array();
            for (int c = 0; c < ring.rank(); ++c) {
                double v = ring.m_entry(i, r, c);
                if (ring.integer_entries())
                    row.push_back(static_cast<long long>(std::llround(v)));
                else
                    row.push_back(v);
            }
            mi.push_back(row);
        }
        mats.push_back(mi);
    }
    j["matrices"] = mats;
    return j;
}

BipartiteGraph parse_graph(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_file(path));
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    BipartiteGraph g;
    g.name = j.value("name", stem_of(path));
    if (!j.contains("even") || !j.contains("odd") || !j.contains("edges") || !j.contains("root"))
        throw ParseError(path + ": graph needs fields even, odd, root, edges");
    for (const auto& v : j["even"]) g.even.push_back(v.get<std::string>());
    for (const auto& v : j["odd"]) g.odd.push_back(v.get<std::string>());
    g.root = j["root"].get<std::string>();
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() < 2) throw ParseError(path + ": edge entries are [u, v, mult]");
        BipartiteGraph::Edge edge;
        edge.u = e[0].get<std::string>();
        edge.v = e[1].get<std::string>();
        edge.mult = e.size() > 2 ? e[2].get<int>() : 1;
        g.edges.push_back(std::move(edge));
    }
    return g;
}

Json graph_to_json(const BipartiteGraph& g) {
    Json j;
    j["name"] = g.name;
    j["even"] = g.even;
    j["odd"] = g.odd;
    j["root"] = g.root;
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back(Json::array({e.u, e.v, e.mult}));
    j["edges"] = edges;
    return j;
}

Json verdict_to_json(const PsdVerdict& v) {
    Json j;
    j["verdict"] = to_string(v.kind);
    j["min_eig_bounds"] = Json::array({v.min_eig_lower, v.min_eig_upper});
    j["tol"] = v.tol;
    if (v.violated()) {
        j["rayleigh"] = v.rayleigh;
        j["exact_certificate"] = v.exact_certificate;
    }
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

Json witness_to_json(const Witness& w) {
    Json j;
    j["criterion"] = w.spec.render();
    j["matrix_fingerprint"] = w.matrix_fingerprint;
    switch (w.certificate) {
        case Witness::Certificate::Rayleigh: j["certificate"] = "rayleigh"; break;
        case Witness::Certificate::Determinant: j["certificate"] = "determinant"; break;
        case Witness::Certificate::SchurTuple: j["certificate"] = "schur_tuple"; break;
    }
    j["value"] = w.value;
    if (!w.vector.empty()) j["vector"] = w.vector;
    if (!w.tuple.empty()) j["tuple"] = w.tuple;
    j["exact"] = w.exact;
    return j;
}

}  // namespace fusioncheck::io
