#pragma once

#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "symcover/graph.hpp"

namespace symcover {

/// graph6 string without header or trailing newline.
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
/// Throws std::invalid_argument on malformed input.
Graph from_graph6(const std::string& s);

/// DIMACS: "p edge n m" then "e u v" lines with 1-based vertices.
void write_dimacs(std::ostream& os, const Graph& g);
/// Ignores "c" comment lines. Throws std::invalid_argument on malformed input.
Graph read_dimacs(std::istream& is);

/// {"n": n, "edges": [[u, v], ...], "labels": [...]} (labels omitted when absent).
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace symcover
