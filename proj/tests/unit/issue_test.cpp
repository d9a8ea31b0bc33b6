// SPDX-License-Identifier: Apache-2.0
#include "apibind/issue.hpp"

#include <gtest/gtest.h>

#include <set>

namespace apibind {
namespace {

TEST(IssueCatalogTest, SeverityFollowsCodePrefix) {
  for (const auto& entry : issue_catalog()) {
    bool error = entry.name.starts_with("E_");
    EXPECT_EQ(entry.severity, error ? Severity::Error : Severity::Warning) << entry.name;
    EXPECT_FALSE(entry.description.empty()) << entry.name;
  }
}

TEST(IssueCatalogTest, ContainsRequiredCodes) {
  const char* required[] = {
      "E_JSON_CELL",         "E_JSON_PARSE",          "E_PATH_SYNTAX",          "E_CURL_TOKENIZE",
      "E_CURL_NO_URL",       "E_CURL_UNSUPPORTED",    "E_PARAM_NO_NAME",        "E_PATHVAR_UNDECLARED",
      "E_PARAM_PATH_UNUSED", "E_DUP_PARAM",           "E_METHOD_MISMATCH",      "E_MERGE_KEY_MISMATCH",
      "W_CURL_OPT_IGNORED",  "W_PARAM_CONV_UNKNOWN",  "W_PARAM_TYPE_DEFAULTED", "W_PARAM_TYPE_CONFLICT",
      "W_PARAM_TYPE_OPAQUE", "W_NO_EXAMPLE",          "W_BODY_ON_GET",          "W_MERGE_CONFLICT",
      "W_PATH_SUSPECT",      "W_EMPTY_ARRAY",         "W_DECL_SHARED"};
  for (const char* name : required) EXPECT_TRUE(issue_code_from_string(name).has_value()) << name;
}

TEST(IssueCatalogTest, NamesRoundTrip) {
  std::set<std::string_view> names;
  for (const auto& entry : issue_catalog()) {
    EXPECT_TRUE(names.insert(entry.name).second);
    EXPECT_EQ(issue_code_from_string(entry.name), entry.code);
    EXPECT_EQ(to_string(entry.code), entry.name);
  }
  EXPECT_FALSE(issue_code_from_string("E_NOT_A_CODE").has_value());
}

TEST(IssueTest, StageNamesRoundTrip) {
  for (Stage s : kAllStages) EXPECT_EQ(stage_from_string(to_string(s)), s);
  EXPECT_FALSE(stage_from_string("render").has_value());
}

TEST(IssueTest, SeverityComesFromCode) {
  EXPECT_TRUE(make_issue(IssueCode::E_DUP_PARAM, Stage::Validate, "x").is_error());
  EXPECT_FALSE(make_issue(IssueCode::W_NO_EXAMPLE, Stage::Validate, "x").is_error());
}

}  // namespace
}  // namespace apibind
