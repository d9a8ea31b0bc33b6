// SPDX-License-Identifier: Apache-2.0
#include "apibind/ingest.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace apibind {
namespace {

const char* kHeader =
    "record_id,source_url,http_method,path,curl_example,parameters,request_example,response_example,description,"
    "group\n";

ApiCallRecord simple(std::string id) {
  ApiCallRecord r;
  r.id = RecordId(std::move(id));
  r.source_url = "https://docs.example.com/u";
  r.http_method = "GET";
  r.raw_path = "/u/{id}";
  return r;
}

TEST(LoadCorpusTest, WellFormedRowHasNoIssues) {
  auto recs = load_corpus_text(std::string(kHeader) +
                                   "r1,https://d.example/a,GET,/a,curl https://h/a,[],,\"{\"\"ok\"\":true}\",Ping,misc\n",
                               "c");
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_TRUE(recs[0].issues.empty());
  EXPECT_EQ(recs[0].id, RecordId("r1"));
  EXPECT_EQ(recs[0].group, "misc");
  EXPECT_FALSE(recs[0].request_example.has_value());
}

TEST(LoadCorpusTest, BadParametersCellIsTagged) {
  auto recs = load_corpus_text(std::string(kHeader) + "r1,https://d.example/a,GET,/a,,not-json,,,,\n", "c");
  ASSERT_EQ(recs.size(), 1u);
  ASSERT_EQ(recs[0].issues.size(), 1u);
  EXPECT_EQ(recs[0].issues[0].code, IssueCode::E_JSON_CELL);
  EXPECT_EQ(recs[0].issues[0].field, "parameters");
  EXPECT_EQ(recs[0].issues[0].stage, Stage::Ingest);
}

TEST(LoadCorpusTest, EveryRowYieldsARecord) {
  std::string text = kHeader;
  for (int i = 0; i < 10; ++i) {
    text += ",not a url,FETCH,/x/" + std::to_string(i) + ",,{bad,[1,{,,\n";
  }
  auto recs = load_corpus_text(text, "docs");
  ASSERT_EQ(recs.size(), 10u);
  EXPECT_EQ(recs[0].id, RecordId("docs:1"));
  EXPECT_EQ(recs[9].id, RecordId("docs:10"));
  for (const auto& r : recs) {
    EXPECT_TRUE(r.has_issue(IssueCode::E_SOURCE_URL));
    EXPECT_TRUE(r.has_issue(IssueCode::E_HTTP_METHOD));
    EXPECT_TRUE(r.has_issue(IssueCode::E_JSON_CELL));
  }
}

TEST(LoadCorpusTest, MethodCanonicalizedAndColumnsInAnyOrder) {
  auto recs = load_corpus_text("path,http_method,source_url\n/a, post ,https://d.example/x\n", "c");
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].http_method, "POST");
  EXPECT_TRUE(recs[0].issues.empty());
}

TEST(LoadCorpusTest, CorpusLevelFailures) {
  EXPECT_THROW(load_corpus_text("source_url,path\nx,y\n", "c"), CorpusError);
  EXPECT_THROW(load_corpus_text(std::string(kHeader) + "a,\"b\n", "c"), CorpusError);
  EXPECT_THROW(load_corpus("/nonexistent/file.csv"), CorpusError);
}

TEST(MergeTest, IdenticalRecordsMergeIds) {
  auto m = merge_records(simple("r1"), simple("r2"));
  EXPECT_EQ(m.id.atoms(), (std::vector<std::string>{"r1", "r2"}));
  EXPECT_TRUE(m.issues.empty());
}

TEST(MergeTest, MissingFieldsFilledFromSecond) {
  auto b = simple("r2");
  b.raw_curl = "curl https://h/u/1";
  auto m = merge_records(simple("r1"), b);
  EXPECT_EQ(m.raw_curl, b.raw_curl);
  EXPECT_TRUE(m.issues.empty());
}

TEST(MergeTest, ConflictKeepsFirstAndWarns) {
  auto a = simple("r1");
  auto b = simple("r2");
  a.description = "first";
  b.description = "second";
  auto m = merge_records(a, b);
  EXPECT_EQ(m.description, "first");
  ASSERT_EQ(m.issues.size(), 1u);
  EXPECT_EQ(m.issues[0].code, IssueCode::W_MERGE_CONFLICT);
  EXPECT_EQ(m.issues[0].field, "description");
}

TEST(MergeTest, JsonCellsCompareSemantically) {
  auto a = simple("r1");
  auto b = simple("r2");
  a.response_example = R"({"a": 1})";
  b.response_example = R"({"a":1})";
  EXPECT_TRUE(merge_records(a, b).issues.empty());
}

TEST(MergeTest, KeyMismatchRefused) {
  auto b = simple("r2");
  b.raw_path = "/v/{id}";
  auto m = merge_records(simple("r1"), b);
  EXPECT_EQ(m.id, RecordId("r1"));
  EXPECT_TRUE(m.has_issue(IssueCode::E_MERGE_KEY_MISMATCH));
}

TEST(MergeTest, CanonicalPathsShareAKey) {
  auto a = simple("r1");
  auto b = simple("r2");
  b.raw_path = "/u/:id/";
  EXPECT_EQ(merge_key(a), merge_key(b));
  auto merged = merge_corpus({a, simple("r3"), b});
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged[0].id.atoms().size(), 3u);
}

TEST(MergeTest, UnrecognizedMethodsNeverMerge) {
  auto a = simple("r1");
  auto b = simple("r2");
  a.http_method = b.http_method = "BREW";
  EXPECT_EQ(merge_corpus({a, b}).size(), 2u);
}

TEST(StageCsvTest, EmptyListGivesHeaderOnly) {
  auto text = stage_csv({});
  EXPECT_EQ(text,
            "record_id,source_url,http_method,path,curl_example,parameters,request_example,response_example,"
            "description,group,issues\r\n");
}

TEST(StageCsvTest, IssuesCellIsJsonArray) {
  auto r = simple("r1");
  r.add_issue(make_issue(IssueCode::W_NO_EXAMPLE, Stage::Validate, "none", "examples"));
  r.add_issue(make_issue(IssueCode::E_DUP_PARAM, Stage::Validate, "dup"));
  auto back = load_corpus_text(stage_csv({r}), "s");
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].issues, r.issues);
  auto parsed = parse_json(issues_to_json(r.issues).dump());
  ASSERT_TRUE(parsed);
  EXPECT_EQ(parsed.value->size(), 2u);
  EXPECT_EQ((*parsed.value)[0]["severity"], "warning");
}

TEST(StageCsvTest, MergedIdsRoundTrip) {
  auto r = simple("r1");
  r.id = RecordId(std::vector<std::string>{"a,b", "[c]"});
  auto back = load_corpus_text(stage_csv({r}), "s");
  EXPECT_EQ(back[0].id, r.id);
}

TEST(StageCsvTest, WriteStageCreatesDirectories) {
  auto dir = testing::scratch_dir("write-stage");
  write_stage({simple("r1")}, dir / "a" / "b" / "stage.csv");
  auto back = load_corpus(dir / "a" / "b" / "stage.csv");
  ASSERT_EQ(back.size(), 1u);
  EXPECT_TRUE(same_fields(back[0], simple("r1")));
}

}  // namespace
}  // namespace apibind
