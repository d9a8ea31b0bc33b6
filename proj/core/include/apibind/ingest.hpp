// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "apibind/record.hpp"

namespace apibind {

/// The only fatal failure class: unreadable input, broken CSV framing, or a
/// header missing required columns.
class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kInputColumns[] = {
    "record_id", "source_url",       "http_method",      "path",        "curl_example",
    "parameters", "request_example", "response_example", "description", "group"};
inline constexpr std::string_view kIssuesColumn = "issues";

/// One record per data row, never skipping rows with bad cells. A row
/// without a record_id gets `<stem>:<row>` (1-based data row number). When an
/// `issues` column is present (a stage file) its issues are restored first.
std::vector<ApiCallRecord> load_corpus(const std::filesystem::path& path);
std::vector<ApiCallRecord> load_corpus_text(std::string_view csv_text, std::string_view stem);

/// Issues tagged for a record's raw cells (JSON cells, method, source URL).
std::vector<Issue> check_cells(const ApiCallRecord& rec);

/// (method, canonical path) identity used to decide whether two records
/// describe the same call.
struct MergeKey {
  std::string method;
  std::string path;
  friend bool operator==(const MergeKey&, const MergeKey&) = default;
};
MergeKey merge_key(const ApiCallRecord& rec);

/// Merges b into a. On key mismatch returns a tagged E_MERGE_KEY_MISMATCH and
/// leaves merging to nobody: the caller keeps b as its own record.
ApiCallRecord merge_records(const ApiCallRecord& a, const ApiCallRecord& b);

/// Folds records sharing a merge key into the first of them; records whose
/// method is unrecognized are never merged.
std::vector<ApiCallRecord> merge_corpus(std::vector<ApiCallRecord> records);

/// The stage CSV: input columns plus `issues` (a JSON array).
std::string stage_csv(const std::vector<ApiCallRecord>& records);
/// Input columns only, without issues.
std::string source_csv(const std::vector<ApiCallRecord>& records);
void write_stage(const std::vector<ApiCallRecord>& records, const std::filesystem::path& path);

JsonValue issues_to_json(const std::vector<Issue>& issues);

}  // namespace apibind
