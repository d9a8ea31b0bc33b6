// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apibind/declarations.hpp"
#include "apibind/http.hpp"
#include "apibind/parameters.hpp"
#include "apibind/path_template.hpp"
#include "apibind/record.hpp"

namespace apibind {

inline constexpr std::string_view kDefaultGroup = "misc";

struct BoundParameter {
  Parameter param;
  InferredType type;  // object types lifted to references
};

struct BindingFunction {
  std::string raw_name;
  HttpMethod method = HttpMethod::GET;
  PathTemplate path;
  std::vector<BoundParameter> params;  // grouped by convention, documentation order within
  std::optional<InferredType> request_type;
  InferredType response_type = InferredType::any();
  std::string doc_url;
  std::optional<std::string> doc_summary;
  RecordId record_id{"?"};
  std::string group;
};

struct PackageMeta {
  std::string name;
  std::string version;  // digest prefix
  std::string digest;   // SHA-256 of the accepted records in source CSV form, hex
};

struct BindingIr {
  std::vector<BindingFunction> functions;
  std::vector<TypeDecl> decls;
  std::map<std::string, std::vector<std::string>> groups;  // group -> raw function names
  PackageMeta meta;
};

struct BuildNote {
  std::size_t record_index;  // into the input list
  Issue issue;
};

struct BuildReport {
  std::vector<BuildNote> notes;
};

/// `get` + path segments, lower-cased, non-alphanumerics folded into `_`:
/// GET /users/{user-id}/messages -> get_users_user_id_messages.
std::string raw_function_name(HttpMethod method, const PathTemplate& path);

std::string sha256_hex(std::string_view data);

/// One function per record, in input order. Records are parsed and inferred
/// here when that has not happened yet. Repeated raw names get `_2`, `_3`, ...
/// and a W_MERGE_CONFLICT note.
BindingIr build_reference(const std::vector<ApiCallRecord>& valid_records, std::string package_name,
                          BuildReport* report = nullptr);

}  // namespace apibind
