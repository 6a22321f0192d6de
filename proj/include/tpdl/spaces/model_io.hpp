#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tpdl/spaces/model.hpp"

namespace tpdl {

// Model files:
//
//   { "points": ["x", "y"],
//     "agents": { "a": { "kind": "monadic-derivative", "edges": [["x","y"], ["y","x"]] } },
//     "valuation": { "p": ["x"] } }
//
// Unknown keys, dangling point ids, malformed values and relations violating
// their declared kind are rejected with FormatError / FrameError.

Model model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const Model& m);
Model load_model(const std::filesystem::path& path);

}  // namespace tpdl
