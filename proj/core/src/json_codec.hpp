#pragma once

#include <json.hpp>

#include "symprime/verdict.hpp"

// Internal: one record schema shared by the report stream and the findings
// embedded in checkpoints. Not installed.

namespace symprime::detail {

using ordered_json = nlohmann::ordered_json;

ordered_json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const ordered_json& j);

}  // namespace symprime::detail
