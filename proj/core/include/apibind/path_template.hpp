// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "apibind/issue.hpp"

namespace apibind {

struct LiteralSegment {
  std::string text;
  friend bool operator==(const LiteralSegment&, const LiteralSegment&) = default;
};

struct VariableSegment {
  std::string name;
  friend bool operator==(const VariableSegment&, const VariableSegment&) = default;
};

using Segment = std::variant<LiteralSegment, VariableSegment>;

/// A request path such as `/users/{user-id}/messages`. Variables occupy whole
/// segments and have unique names.
struct PathTemplate {
  std::vector<Segment> segments;

  std::vector<std::string> variables() const;
  bool has_variable(std::string_view name) const;

  friend bool operator==(const PathTemplate&, const PathTemplate&) = default;
};

struct PathParseResult {
  std::optional<PathTemplate> value;
  std::vector<Issue> issues;  // E_PATH_SYNTAX errors and W_PATH_SUSPECT warnings
};

/// Accepts `{name}` and `:name` variables. Empty segments (doubled or trailing
/// slashes) are dropped, so the result renders in canonical form.
PathParseResult parse_path_template(std::string_view raw);

/// Leading `/`, segments joined with `/`, variables as `{name}`.
std::string render_path_template(const PathTemplate& path);

/// Canonical rendering of `raw` when it parses, otherwise nullopt.
std::optional<std::string> canonical_path(std::string_view raw);

/// Whether every segment would survive a render/parse round trip.
bool is_well_formed(const PathTemplate& path);

}  // namespace apibind
