// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace apibind {

// Objects keep insertion order; numbers remember whether their lexeme was
// integral (nlohmann keeps integer and float lexemes apart, and any exponent
// or fraction yields a float).
using JsonValue = nlohmann::ordered_json;

struct JsonParseError {
  std::size_t offset;
  std::string message;
};

struct JsonParseResult {
  std::optional<JsonValue> value;
  std::optional<JsonParseError> error;

  explicit operator bool() const { return value.has_value(); }
};

JsonParseResult parse_json(std::string_view text);

/// True for numbers whose lexeme had neither fraction nor exponent.
inline bool is_integral_number(const JsonValue& v) { return v.is_number_integer(); }

}  // namespace apibind
