#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "orbitcount/graph.hpp"

namespace orbitcount {

// Graph file format:
//   {"vertices": n,
//    "edges": [{"from": i, "to": j, "length": 0.69, "probability": 0.5, "name": "alpha"}, ...]}
// "length" may also be {"log_of": x}, meaning ln(x). "probability" and "name" are optional.

GraphSpec parse_graph_spec(std::string_view json_text);
WeightedDigraph parse_graph(std::string_view json_text);
WeightedDigraph load_graph(const std::filesystem::path& path);

/// Serializes with round-trip precision; parse_graph(graph_to_json(g)) == g.
std::string graph_to_json(const WeightedDigraph& g, int indent = 2);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace orbitcount
