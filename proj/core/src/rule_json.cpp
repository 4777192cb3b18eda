#include "orbitcount/rule_json.hpp"

#include <json.hpp>

#include "orbitcount/error.hpp"
#include "orbitcount/graph_json.hpp"

namespace orbitcount {

using nlohmann::json;

namespace {

double parse_scale(const json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_object() && value.contains("ratio_of")) {
    const json& pq = value.at("ratio_of");
    if (!pq.is_array() || pq.size() != 2) throw Error(ErrorCode::MalformedInput, "ratio_of needs [p, q]");
    const double q = pq[1].get<double>();
    if (q == 0.0) throw Error(ErrorCode::MalformedInput, "ratio_of with zero denominator");
    return pq[0].get<double>() / q;
  }
  throw Error(ErrorCode::MalformedInput, "scale must be a number or {\"ratio_of\": [p, q]}");
}

}  // namespace

SubstitutionRule parse_rule(std::string_view json_text) {
  try {
    const json doc = json::parse(json_text);
    if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("prototiles")) {
      throw Error(ErrorCode::MalformedInput, "expected {\"dimension\": d, \"prototiles\": [...]}");
    }
    SubstitutionRule rule;
    rule.dimension = doc["dimension"].get<int>();
    for (const json& tile : doc["prototiles"]) {
      std::vector<RuleChild> children;
      for (const json& child : tile.at("children")) {
        const long long type = child.at("type").get<long long>();
        if (type < 1) throw Error(ErrorCode::IndexOutOfRange, "child type must be >= 1");
        children.push_back(RuleChild{static_cast<std::size_t>(type - 1), parse_scale(child.at("scale"))});
      }
      rule.prototiles.push_back(std::move(children));
    }
    for (const auto& children : rule.prototiles) {
      for (const RuleChild& c : children) {
        if (c.type >= rule.prototiles.size()) {
          throw Error(ErrorCode::IndexOutOfRange, "child type " + std::to_string(c.type + 1) + " but only " +
                                                      std::to_string(rule.prototiles.size()) + " prototiles");
        }
      }
    }
    return rule;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

SubstitutionRule load_rule(const std::filesystem::path& path) { return parse_rule(read_text_file(path)); }

std::string rule_to_json(const SubstitutionRule& rule, int indent) {
  json doc;
  doc["dimension"] = rule.dimension;
  doc["prototiles"] = json::array();
  for (const auto& children : rule.prototiles) {
    json tile{{"children", json::array()}};
    for (const RuleChild& c : children) tile["children"].push_back({{"type", c.type + 1}, {"scale", c.scale}});
    doc["prototiles"].push_back(std::move(tile));
  }
  return doc.dump(indent);
}

}  // namespace orbitcount
