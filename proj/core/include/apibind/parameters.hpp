// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apibind/http.hpp"
#include "apibind/issue.hpp"
#include "apibind/json.hpp"

namespace apibind {

/// Where an argument travels. Header and cookie share one documented
/// category but are kept apart internally.
enum class Convention { Path, Query, BodyJson, BodyText, Header, Cookie };

inline constexpr Convention kAllConventions[] = {Convention::Path,     Convention::Query,
                                                 Convention::BodyJson, Convention::BodyText,
                                                 Convention::Header,   Convention::Cookie};

std::string_view to_string(Convention c);
std::optional<Convention> convention_from_string(std::string_view s);

struct Parameter {
  std::string name;
  Convention convention = Convention::Query;
  std::optional<std::string> declared_type;
  std::optional<bool> required;
  std::optional<std::string> description;
  std::optional<JsonValue> example;

  friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct ParameterTableResult {
  std::optional<std::vector<Parameter>> value;  // absent only for non-array input
  std::vector<Issue> issues;
};

/// Convention assigned to descriptions whose location is missing or not
/// recognized: Query for bodiless methods, BodyJson otherwise.
Convention default_convention(std::optional<HttpMethod> method);

/// Parses a JSON array of parameter-description objects. Keys are matched
/// case-insensitively through an alias table; entries without a name are
/// dropped and reported.
ParameterTableResult parse_parameter_table(std::string_view raw,
                                           std::optional<HttpMethod> method = std::nullopt);

}  // namespace apibind
