#pragma once
// Shared between io.cpp and catalog.cpp; keeps the JSON library out of the
// public headers.

#include "hlsb/io.hpp"

#include <json.hpp>

namespace hlsb::detail {

// require_version: top-level files carry format_version, catalog rows do not
DefinitionFile parse_definition_json(const nlohmann::json& j, const std::string& pointer, bool require_version);

}  // namespace hlsb::detail
