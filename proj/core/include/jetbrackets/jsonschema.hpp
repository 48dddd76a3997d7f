#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace jetbrackets {

/// Minimal JSON-schema checker covering the keywords the shipped schemas
/// use: type (string or list), enum, pattern (ECMAScript, unanchored),
/// properties / required / additionalProperties, items / prefixItems,
/// minItems / maxItems, minimum / maximum, and anyOf. Unknown keywords are
/// ignored, matching common validator behavior. Returns one
/// "path: message" line per violation; an empty list means the value
/// conforms.
std::vector<std::string> schema_violations(const nlohmann::json& schema,
                                           const nlohmann::json& value);

bool matches_schema(const nlohmann::json& schema, const nlohmann::json& value);

} // namespace jetbrackets
