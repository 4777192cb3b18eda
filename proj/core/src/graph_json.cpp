#include "orbitcount/graph_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "orbitcount/error.hpp"

namespace orbitcount {

using nlohmann::json;

namespace {

double parse_length(const json& value, std::size_t index) {
  if (value.is_number()) return value.get<double>();
  if (value.is_object() && value.contains("log_of")) {
    const double arg = value.at("log_of").get<double>();
    if (!(arg > 0.0)) {
      throw Error(ErrorCode::MalformedInput,
                  "edge " + std::to_string(index) + ": log_of needs a positive argument");
    }
    return std::log(arg);
  }
  throw Error(ErrorCode::MalformedInput,
              "edge " + std::to_string(index) + ": length must be a number or {\"log_of\": x}");
}

std::size_t parse_vertex(const json& value, const char* field, std::size_t index) {
  if (!value.is_number_integer()) {
    throw Error(ErrorCode::MalformedInput,
                "edge " + std::to_string(index) + ": '" + field + "' must be an integer");
  }
  const auto v = value.get<long long>();
  if (v < 1) {
    throw Error(ErrorCode::IndexOutOfRange,
                "edge " + std::to_string(index) + ": '" + field + "' must be >= 1");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

GraphSpec parse_graph_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
      throw Error(ErrorCode::MalformedInput, "expected {\"vertices\": n, \"edges\": [...]}");
    }
    if (!doc["vertices"].is_number_integer() || doc["vertices"].get<long long>() < 1) {
      throw Error(ErrorCode::MalformedInput, "'vertices' must be a positive integer");
    }
    GraphSpec spec;
    spec.vertices = doc["vertices"].get<std::size_t>();
    const json& edges = doc["edges"];
    if (!edges.is_array()) throw Error(ErrorCode::MalformedInput, "'edges' must be an array");
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const json& e = edges[k];
      if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("length")) {
        throw Error(ErrorCode::MalformedInput,
                    "edge " + std::to_string(k) + " needs 'from', 'to' and 'length'");
      }
      EdgeSpec edge;
      edge.from = parse_vertex(e["from"], "from", k);
      edge.to = parse_vertex(e["to"], "to", k);
      edge.length = parse_length(e["length"], k);
      if (e.contains("probability")) edge.probability = e["probability"].get<double>();
      if (e.contains("name")) edge.name = e["name"].get<std::string>();
      spec.edges.push_back(std::move(edge));
    }
    return spec;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

WeightedDigraph parse_graph(std::string_view json_text) {
  return WeightedDigraph::build(parse_graph_spec(json_text));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

WeightedDigraph load_graph(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

std::string graph_to_json(const WeightedDigraph& g, int indent) {
  json doc;
  doc["vertices"] = g.vertex_count();
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) {
    json edge{{"from", e.from + 1}, {"to", e.to + 1}, {"length", e.length}};
    if (e.probability) edge["probability"] = *e.probability;
    if (!e.name.empty()) edge["name"] = e.name;
    doc["edges"].push_back(std::move(edge));
  }
  return doc.dump(indent);
}

}  // namespace orbitcount
