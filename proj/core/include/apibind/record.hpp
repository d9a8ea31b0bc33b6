// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apibind/curl.hpp"
#include "apibind/http.hpp"
#include "apibind/issue.hpp"
#include "apibind/parameters.hpp"
#include "apibind/path_template.hpp"
#include "apibind/record_id.hpp"
#include "apibind/types.hpp"

namespace apibind {

/// Attached by the parse stage. Each field is set at most once.
struct ParsedArtifacts {
  std::optional<PathTemplate> path;
  std::optional<CurlRequest> curl;
  std::optional<std::vector<Parameter>> params;
};

/// Attached by the infer stage, in user-visible (finalized) form.
struct InferredArtifacts {
  std::vector<InferredType> param_types;  // parallel to ParsedArtifacts::params
  std::optional<InferredType> request_type;
  InferredType response_type = InferredType::any();
};

/// One documented API call. Records are enriched stage by stage and never
/// dropped; issues are only ever appended.
struct ApiCallRecord {
  RecordId id{"?"};
  std::string source_url;
  std::string http_method;  // canonical upper-case when recognized, verbatim otherwise
  std::string raw_path;
  std::optional<std::string> raw_curl;
  std::optional<std::string> raw_parameters;
  std::optional<std::string> request_example;
  std::optional<std::string> response_example;
  std::optional<std::string> description;
  std::optional<std::string> group;
  std::vector<Issue> issues;
  std::optional<ParsedArtifacts> parsed;
  std::optional<InferredArtifacts> inferred;

  std::optional<HttpMethod> method() const { return parse_http_method(http_method); }

  /// Appends unless an identical issue is already present, so re-running a
  /// stage over its own output does not duplicate tags.
  void add_issue(Issue issue);
  void add_issues(const std::vector<Issue>& issues);

  bool has_errors() const;
  bool has_issue(IssueCode code) const;
};

/// Equality over the CSV-visible fields (everything except enrichment).
bool same_fields(const ApiCallRecord& a, const ApiCallRecord& b);

}  // namespace apibind
