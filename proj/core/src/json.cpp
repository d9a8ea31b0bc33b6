// SPDX-License-Identifier: Apache-2.0
#include "apibind/json.hpp"

namespace apibind {

JsonParseResult parse_json(std::string_view text) {
  try {
    return {JsonValue::parse(text.begin(), text.end()), std::nullopt};
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a 1-based byte position of the offending character.
    std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    return {std::nullopt, JsonParseError{offset, e.what()}};
  }
}

}  // namespace apibind
