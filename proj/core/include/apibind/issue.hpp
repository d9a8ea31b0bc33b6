// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace apibind {

// Every tag a record can carry. The catalog in issue.cpp is the single
// source of truth for severity: E_* codes are errors, W_* codes warnings.
enum class IssueCode {
  E_JSON_CELL,
  E_JSON_PARSE,
  E_HTTP_METHOD,
  E_SOURCE_URL,
  E_PATH_SYNTAX,
  E_CURL_TOKENIZE,
  E_CURL_NO_URL,
  E_CURL_UNSUPPORTED,
  E_PARAM_NO_NAME,
  E_PATHVAR_UNDECLARED,
  E_PARAM_PATH_UNUSED,
  E_DUP_PARAM,
  E_METHOD_MISMATCH,
  E_MERGE_KEY_MISMATCH,
  W_CURL_OPT_IGNORED,
  W_PARAM_CONV_UNKNOWN,
  W_PARAM_TYPE_DEFAULTED,
  W_PARAM_TYPE_CONFLICT,
  W_PARAM_TYPE_OPAQUE,
  W_NO_EXAMPLE,
  W_BODY_ON_GET,
  W_MERGE_CONFLICT,
  W_PATH_SUSPECT,
  W_EMPTY_ARRAY,
  W_DECL_SHARED,
};

enum class Severity { Error, Warning };

enum class Stage { Ingest, Parse, Infer, Validate, Generate };

struct CatalogEntry {
  IssueCode code;
  std::string_view name;
  Severity severity;
  std::string_view description;
};

/// The full issue catalog, in declaration order of IssueCode.
std::span<const CatalogEntry> issue_catalog();

const CatalogEntry& catalog_entry(IssueCode code);
std::string_view to_string(IssueCode code);
std::optional<IssueCode> issue_code_from_string(std::string_view name);
Severity severity_of(IssueCode code);

std::string_view to_string(Severity severity);
std::string_view to_string(Stage stage);
std::optional<Stage> stage_from_string(std::string_view name);
inline constexpr Stage kAllStages[] = {Stage::Ingest, Stage::Parse, Stage::Infer,
                                       Stage::Validate, Stage::Generate};

struct Issue {
  IssueCode code;
  Stage stage;
  std::string message;
  std::optional<std::string> field;

  Severity severity() const { return severity_of(code); }
  bool is_error() const { return severity() == Severity::Error; }

  friend bool operator==(const Issue&, const Issue&) = default;
};

Issue make_issue(IssueCode code, Stage stage, std::string message,
                 std::optional<std::string> field = std::nullopt);

}  // namespace apibind
