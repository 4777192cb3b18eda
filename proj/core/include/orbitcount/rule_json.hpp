#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "orbitcount/applications.hpp"

namespace orbitcount {

// Rule file format (child types are 1-based):
//   {"dimension": d,
//    "prototiles": [{"children": [{"type": 1, "scale": 0.5}, {"type": 2, "scale": {"ratio_of": [1, 3]}}]}]}

SubstitutionRule parse_rule(std::string_view json_text);
SubstitutionRule load_rule(const std::filesystem::path& path);
std::string rule_to_json(const SubstitutionRule& rule, int indent = 2);

}  // namespace orbitcount
