// SPDX-License-Identifier: Apache-2.0
#include "apibind/parse.hpp"

#include <gtest/gtest.h>

namespace apibind {
namespace {

ApiCallRecord base() {
  ApiCallRecord r;
  r.id = RecordId("r");
  r.source_url = "https://docs.example.com/r";
  r.http_method = "GET";
  r.raw_path = "/u/{id}";
  return r;
}

TEST(ParseRecordTest, PathOnly) {
  auto r = parse_record(base());
  ASSERT_TRUE(r.parsed);
  EXPECT_TRUE(r.parsed->path);
  EXPECT_FALSE(r.parsed->curl);
  EXPECT_FALSE(r.parsed->params);
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(r.issues[0].code, IssueCode::W_NO_EXAMPLE);
}

TEST(ParseRecordTest, SubParsersAreIndependent) {
  auto rec = base();
  rec.raw_curl = "curl 'https://h/u/1";
  rec.raw_parameters = R"([{"name":"id","in":"path"}])";
  auto r = parse_record(rec);
  EXPECT_FALSE(r.parsed->curl);
  EXPECT_TRUE(r.has_issue(IssueCode::E_CURL_TOKENIZE));
  EXPECT_TRUE(r.parsed->path);
  ASSERT_TRUE(r.parsed->params);
  EXPECT_EQ(r.parsed->params->size(), 1u);
}

TEST(ParseRecordTest, FullyPopulatedRecordIsClean) {
  auto rec = base();
  rec.raw_curl = "curl https://h/u/1";
  rec.raw_parameters = R"([{"name":"id","in":"path","type":"integer"}])";
  auto r = parse_record(rec);
  EXPECT_TRUE(r.issues.empty());
  EXPECT_TRUE(r.parsed->path && r.parsed->curl && r.parsed->params);
}

TEST(ParseRecordTest, AlreadyParsedUnchanged) {
  auto once = parse_record(base());
  auto twice = parse_record(once);
  EXPECT_EQ(once.issues, twice.issues);
}

TEST(ParseRecordTest, IngestTaggedParametersNotReparsed) {
  auto rec = base();
  rec.raw_parameters = "{oops";
  rec.add_issue(make_issue(IssueCode::E_JSON_CELL, Stage::Ingest, "bad", "parameters"));
  auto r = parse_record(rec);
  EXPECT_FALSE(r.parsed->params);
  EXPECT_EQ(r.issues.size(), 2u);
}

}  // namespace
}  // namespace apibind
