#pragma once

#include "f5lab/graph.hpp"
#include "f5lab/three_graph.hpp"

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace f5lab::io {

// `.3g`: "n m" then m lines "a b c" with 0 <= a < b < c < n. `.g` is the same with pairs.
// JSON: {"n": int, "edges": [[a,b,c], ...]}. All readers reject duplicate edges.

ThreeGraph read_3g(std::istream& in);
void write_3g(std::ostream& out, const ThreeGraph& h);
std::string to_3g(const ThreeGraph& h);

Graph read_g(std::istream& in);
void write_g(std::ostream& out, const Graph& g);
std::string to_g(const Graph& g);

nlohmann::json to_json(const ThreeGraph& h);
nlohmann::json to_json(const Graph& g);
ThreeGraph three_graph_from_json(const nlohmann::json& j);
Graph graph_from_json(const nlohmann::json& j);

/// Sniffs the first non-blank character: '{' means JSON, anything else the text format.
ThreeGraph read_three_graph(std::istream& in);
ThreeGraph load_three_graph(const std::string& path);

nlohmann::json to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

}  // namespace f5lab::io
