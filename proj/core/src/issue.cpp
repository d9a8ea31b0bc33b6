// SPDX-License-Identifier: Apache-2.0
#include "apibind/issue.hpp"

#include <array>
#include <stdexcept>

namespace apibind {

namespace {

using enum IssueCode;
constexpr auto E = Severity::Error;
constexpr auto W = Severity::Warning;

constexpr std::array kCatalog{
    CatalogEntry{E_JSON_CELL, "E_JSON_CELL", E, "a JSON-typed CSV cell does not hold the expected JSON"},
    CatalogEntry{E_JSON_PARSE, "E_JSON_PARSE", E, "JSON text failed to parse"},
    CatalogEntry{E_HTTP_METHOD, "E_HTTP_METHOD", E, "http_method is not a recognized HTTP method"},
    CatalogEntry{E_SOURCE_URL, "E_SOURCE_URL", E, "source_url is not an absolute URL"},
    CatalogEntry{E_PATH_SYNTAX, "E_PATH_SYNTAX", E, "path template is malformed"},
    CatalogEntry{E_CURL_TOKENIZE, "E_CURL_TOKENIZE", E, "curl example could not be split into words"},
    CatalogEntry{E_CURL_NO_URL, "E_CURL_NO_URL", E, "curl example has no URL"},
    CatalogEntry{E_CURL_UNSUPPORTED, "E_CURL_UNSUPPORTED", E, "curl example uses an unsupported feature"},
    CatalogEntry{E_PARAM_NO_NAME, "E_PARAM_NO_NAME", E, "parameter description has no name"},
    CatalogEntry{E_PATHVAR_UNDECLARED, "E_PATHVAR_UNDECLARED", E, "path variable has no Path parameter"},
    CatalogEntry{E_PARAM_PATH_UNUSED, "E_PARAM_PATH_UNUSED", E, "Path parameter does not occur in the path template"},
    CatalogEntry{E_DUP_PARAM, "E_DUP_PARAM", E, "parameter name repeated within one passing convention"},
    CatalogEntry{E_METHOD_MISMATCH, "E_METHOD_MISMATCH", E, "curl method differs from the declared http_method"},
    CatalogEntry{E_MERGE_KEY_MISMATCH, "E_MERGE_KEY_MISMATCH", E, "records with different method/path cannot merge"},
    CatalogEntry{W_CURL_OPT_IGNORED, "W_CURL_OPT_IGNORED", W, "curl option not understood and skipped"},
    CatalogEntry{W_PARAM_CONV_UNKNOWN, "W_PARAM_CONV_UNKNOWN", W, "passing convention unrecognized; defaulted"},
    CatalogEntry{W_PARAM_TYPE_DEFAULTED, "W_PARAM_TYPE_DEFAULTED", W, "parameter type unknown; defaulted to string"},
    CatalogEntry{W_PARAM_TYPE_CONFLICT, "W_PARAM_TYPE_CONFLICT", W, "parameter example disagrees with declared type"},
    CatalogEntry{W_PARAM_TYPE_OPAQUE, "W_PARAM_TYPE_OPAQUE", W, "parameter declared as object without structure"},
    CatalogEntry{W_NO_EXAMPLE, "W_NO_EXAMPLE", W, "no usage or payload example available"},
    CatalogEntry{W_BODY_ON_GET, "W_BODY_ON_GET", W, "request body documented for GET/HEAD"},
    CatalogEntry{W_MERGE_CONFLICT, "W_MERGE_CONFLICT", W, "conflicting values while merging; first kept"},
    CatalogEntry{W_PATH_SUSPECT, "W_PATH_SUSPECT", W, "path segment looks like an unsupported variable syntax"},
    CatalogEntry{W_EMPTY_ARRAY, "W_EMPTY_ARRAY", W, "array only observed empty; element type unknown"},
    CatalogEntry{W_DECL_SHARED, "W_DECL_SHARED", W, "structurally equal object types share one declaration"},
};

static_assert(kCatalog.size() == static_cast<std::size_t>(W_DECL_SHARED) + 1);

constexpr bool catalog_ordered() {
  for (std::size_t i = 0; i < kCatalog.size(); ++i) {
    if (static_cast<std::size_t>(kCatalog[i].code) != i) return false;
    bool error_name = kCatalog[i].name.starts_with("E_");
    if (error_name != (kCatalog[i].severity == Severity::Error)) return false;
  }
  return true;
}
static_assert(catalog_ordered(), "catalog must follow IssueCode order and the E_/W_ naming rule");

}  // namespace

std::span<const CatalogEntry> issue_catalog() { return kCatalog; }

const CatalogEntry& catalog_entry(IssueCode code) {
  return kCatalog.at(static_cast<std::size_t>(code));
}

std::string_view to_string(IssueCode code) { return catalog_entry(code).name; }

std::optional<IssueCode> issue_code_from_string(std::string_view name) {
  for (const auto& entry : kCatalog) {
    if (entry.name == name) return entry.code;
  }
  return std::nullopt;
}

Severity severity_of(IssueCode code) { return catalog_entry(code).severity; }

std::string_view to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::Ingest: return "ingest";
    case Stage::Parse: return "parse";
    case Stage::Infer: return "infer";
    case Stage::Validate: return "validate";
    case Stage::Generate: return "generate";
  }
  throw std::logic_error("unknown stage");
}

std::optional<Stage> stage_from_string(std::string_view name) {
  for (Stage s : kAllStages) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

Issue make_issue(IssueCode code, Stage stage, std::string message,
                 std::optional<std::string> field) {
  return Issue{code, stage, std::move(message), std::move(field)};
}

}  // namespace apibind
