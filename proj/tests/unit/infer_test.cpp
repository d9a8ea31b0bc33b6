// SPDX-License-Identifier: Apache-2.0
#include "apibind/infer.hpp"

#include <gtest/gtest.h>

#include "apibind/parse.hpp"
#include "type_oracle.hpp"

namespace apibind {
namespace {

using T = InferredType;

Parameter param(std::optional<std::string> declared, std::optional<JsonValue> example = std::nullopt) {
  Parameter p;
  p.name = "p";
  p.declared_type = std::move(declared);
  p.example = std::move(example);
  return p;
}

TEST(ParameterTypeTest, DeclaredTable) {
  EXPECT_EQ(type_of_parameter(param("integer")).type, T::integer());
  EXPECT_EQ(type_of_parameter(param("int")).type, T::integer());
  EXPECT_EQ(type_of_parameter(param("number")).type, T::floating());
  EXPECT_EQ(type_of_parameter(param("Boolean")).type, T::boolean());
  EXPECT_EQ(type_of_parameter(param("array")).type, T::array(T::any()));
  EXPECT_TRUE(type_of_parameter(param("integer")).issues.empty());
}

TEST(ParameterTypeTest, ObjectIsOpaque) {
  auto r = type_of_parameter(param("object"));
  EXPECT_EQ(r.type, testing::obj({}));
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(r.issues[0].code, IssueCode::W_PARAM_TYPE_OPAQUE);
}

TEST(ParameterTypeTest, ExampleWins) {
  auto r = type_of_parameter(param("string", JsonValue(true)));
  EXPECT_EQ(r.type, T::boolean());
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(r.issues[0].code, IssueCode::W_PARAM_TYPE_CONFLICT);
  EXPECT_TRUE(type_of_parameter(param("number", JsonValue(3))).issues.empty());
}

TEST(ParameterTypeTest, DefaultsToString) {
  for (auto declared : {std::optional<std::string>(), std::optional<std::string>("uuid")}) {
    auto r = type_of_parameter(param(declared));
    EXPECT_EQ(r.type, T::string());
    ASSERT_EQ(r.issues.size(), 1u);
    EXPECT_EQ(r.issues[0].code, IssueCode::W_PARAM_TYPE_DEFAULTED);
  }
}

TEST(InferRecordTest, AttachesFinalizedTypes) {
  ApiCallRecord rec;
  rec.id = RecordId("r");
  rec.source_url = "https://d.example/r";
  rec.http_method = "POST";
  rec.raw_path = "/m";
  rec.raw_curl = "curl -d '{}' https://h/m";
  rec.raw_parameters = R"([{"name":"q","in":"query","type":"integer"}])";
  rec.request_example = R"({"tags":[]})";
  rec.response_example = R"({"id":"x"})";
  auto r = infer_record(parse_record(rec));
  ASSERT_TRUE(r.inferred);
  EXPECT_EQ(r.inferred->param_types, (std::vector<T>{T::integer()}));
  EXPECT_EQ(r.inferred->request_type, testing::obj({{"tags", T::array(T::any()), true}}));
  EXPECT_EQ(r.inferred->response_type, testing::obj({{"id", T::string(), true}}));
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(r.issues[0].code, IssueCode::W_EMPTY_ARRAY);
  EXPECT_EQ(r.issues[0].field, "request_example");
}

TEST(InferRecordTest, MissingResponseIsAny) {
  ApiCallRecord rec;
  rec.http_method = "GET";
  rec.raw_path = "/x";
  auto r = infer_record(rec);
  EXPECT_EQ(r.inferred->response_type, T::any());
  EXPECT_FALSE(r.inferred->request_type);
  EXPECT_TRUE(r.has_issue(IssueCode::W_NO_EXAMPLE));
  EXPECT_EQ(infer_record(r).issues, r.issues);
}

}  // namespace
}  // namespace apibind
