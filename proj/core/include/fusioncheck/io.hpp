#pragma once

#include "fusioncheck/criteria.hpp"
#include "fusioncheck/fusion_ring.hpp"
#include "fusioncheck/obstructions.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace fusioncheck::io {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
    explicit ParseError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

/// Reads a ring file: JSON with {name, rank, dual, matrices[, metadata]} where
/// matrices[i][r][c] = (M_{i+1})[r][c], or the plain-text block format
/// (rank line, rank blocks of rank x rank integers, dual on the last line).
FusionRing parse_ring(const std::string& path);
FusionRing parse_ring_text(const std::string& text, const std::string& name);

/// JSON serialization round-tripping parse_ring.
Json ring_to_json(const FusionRing& ring);

BipartiteGraph parse_graph(const std::string& path);
Json graph_to_json(const BipartiteGraph& g);

Json verdict_to_json(const PsdVerdict& v);
Json witness_to_json(const Witness& w);

/// Formats a double with 12 significant digits (report convention).
std::string fmt12(double v);

}  // namespace fusioncheck::io
