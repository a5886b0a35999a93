#pragma once

#include <string>

#include "gdua/classify.hpp"
#include "json.hpp"

namespace gdua {

using ordered_json = nlohmann::ordered_json;

/// Classification block of the report. Field order is fixed; absent optional
/// witnesses serialize as null so the layout is byte-stable across inputs.
ordered_json classification_json(const Classification& c);

/// Full report: {"schema_version": "1", "input": <echo>, "classification": ...}.
ordered_json report_json(const ordered_json& input_echo, const Classification& c);

ordered_json error_json(const std::string& kind, const std::string& message);

/// Human-readable rendering of the same content.
std::string classification_text(const Classification& c);

std::string inventory_text(const PrimeInventory& inv);

}  // namespace gdua
