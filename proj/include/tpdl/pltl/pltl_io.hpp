#pragma once

#include <filesystem>

#include <json.hpp>

#include "tpdl/pltl/bijective.hpp"
#include "tpdl/pltl/tail_set.hpp"

namespace tpdl::pltl {

// Bijective models: { "size": n, "succ": [int...], "valuation": { atom: [int...] } }
// Tail models:      { "valuation": { atom: { "left": bool, "lo": int, "bits": [bool...], "right": bool } } }
// Unknown keys and out-of-range points raise FormatError.

BijectiveModel bijective_from_json(const nlohmann::json& j);
nlohmann::json bijective_to_json(const BijectiveModel& m);

TailSet tail_set_from_json(const nlohmann::json& j);
nlohmann::json tail_set_to_json(const TailSet& s);
TailModel tail_model_from_json(const nlohmann::json& j);
nlohmann::json tail_model_to_json(const TailModel& m);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace tpdl::pltl
