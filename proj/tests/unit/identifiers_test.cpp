// SPDX-License-Identifier: Apache-2.0
#include "apibind/identifiers.hpp"

#include <gtest/gtest.h>

#include <regex>

#include "fixtures.hpp"

namespace apibind {
namespace {

ApiCallRecord rec(std::string id, std::string method, std::string path) {
  ApiCallRecord r;
  r.id = RecordId(std::move(id));
  r.source_url = "https://docs.example.com/x";
  r.http_method = std::move(method);
  r.raw_path = std::move(path);
  return r;
}

TEST(CasingTest, Styles) {
  EXPECT_EQ(apply_casing("get_users_user_id", Casing::LowerCamel), "getUsersUserId");
  EXPECT_EQ(apply_casing("get_users_user_id", Casing::UpperCamel), "GetUsersUserId");
  EXPECT_EQ(apply_casing("displayName", Casing::Snake), "display_name");
  EXPECT_EQ(apply_casing("@odata.nextLink", Casing::LowerCamel), "odataNextLink");
  EXPECT_EQ(apply_casing("2fa", Casing::LowerCamel), "_2fa");
  EXPECT_EQ(apply_casing("--", Casing::Snake), "_");
}

TEST(CasingTest, Names) {
  for (Casing c : {Casing::LowerCamel, Casing::UpperCamel, Casing::Snake}) {
    EXPECT_EQ(casing_from_string(to_string(c)), c);
  }
  EXPECT_EQ(casing_from_string("PascaL"), Casing::UpperCamel);
  EXPECT_EQ(casing_from_string("lower_camel"), Casing::LowerCamel);
  EXPECT_FALSE(casing_from_string("kebab"));
}

TEST(IdentifierScopeTest, ReservedWordGetsSuffix) {
  std::set<std::string> reserved{"type", "type_"};
  IdentifierScope scope(Casing::LowerCamel, &reserved);
  EXPECT_EQ(scope.assign("type"), "type__");
  std::set<std::string> just_type{"type"};
  IdentifierScope other(Casing::LowerCamel, &just_type);
  EXPECT_EQ(other.assign("type"), "type_");
}

TEST(IdentifierScopeTest, CollisionsNumbered) {
  IdentifierScope scope(Casing::Snake, nullptr);
  EXPECT_EQ(scope.assign("user-id"), "user_id");
  EXPECT_EQ(scope.assign("user_id"), "user_id_2");
  EXPECT_EQ(scope.assign("user-id"), "user_id");
  EXPECT_EQ(scope.assign_fresh("user-id"), "user_id_3");
  scope.reserve("body");
  EXPECT_EQ(scope.assign("body"), "body_2");
  EXPECT_EQ(scope.mapping().size(), 4u);
}

TEST(PolicyTest, FromJson) {
  auto p = IdentifierPolicy::from_json(
      *parse_json(R"({"casing_function":"snake","casing_field":"snake","reserved_words":["from"]})").value);
  EXPECT_EQ(p.function_casing, Casing::Snake);
  EXPECT_EQ(p.type_casing, Casing::UpperCamel);
  EXPECT_EQ(p.field_casing, Casing::Snake);
  EXPECT_EQ(p.reserved_words, (std::set<std::string>{"from"}));
  EXPECT_THROW(IdentifierPolicy::from_json(*parse_json(R"({"casing_type":"kebab"})").value), PolicyError);
  EXPECT_THROW(IdentifierPolicy::from_json(*parse_json(R"({"reserved_words":"x"})").value), PolicyError);
  EXPECT_THROW(IdentifierPolicy::from_json(*parse_json("[]").value), PolicyError);
  EXPECT_THROW(IdentifierPolicy::load("/nonexistent/policy.json"), PolicyError);
}

TEST(PolicyTest, LoadFromFile) {
  auto dir = testing::scratch_dir("policy");
  testing::write_tree(dir, {{"p.json", R"({"casing_type":"snake"})"}, {"bad.json", "{"}});
  EXPECT_EQ(IdentifierPolicy::load(dir / "p.json").type_casing, Casing::Snake);
  EXPECT_THROW(IdentifierPolicy::load(dir / "bad.json"), PolicyError);
}

TEST(ApplyPolicyTest, FunctionNamesFollowCasing) {
  auto ir = build_reference({rec("a", "GET", "/users/{user_id}")}, "p");
  auto named = apply_identifier_policy(ir, {});
  ASSERT_EQ(named.functions.size(), 1u);
  EXPECT_EQ(named.functions[0].identifier, "getUsersUserId");
  EXPECT_EQ(named.functions[0].source, &ir.functions[0]);
}

TEST(ApplyPolicyTest, ReservedFieldAndCollidingFunctions) {
  auto r = rec("a", "GET", "/a-b");
  r.response_example = R"({"type":1,"user-id":2,"user_id":3})";
  IdentifierPolicy policy;
  policy.reserved_words = {"type"};
  auto ir = build_reference({r, rec("b", "GET", "/a_b")}, "p");
  auto named = apply_identifier_policy(ir, policy);
  EXPECT_EQ(named.functions[0].identifier, "getAB");
  EXPECT_EQ(named.functions[1].identifier, "getAB2");
  ASSERT_EQ(named.decls.size(), 1u);
  std::vector<std::string> fields;
  for (const auto& f : named.decls[0].fields) fields.push_back(f.identifier);
  EXPECT_EQ(fields, (std::vector<std::string>{"type_", "userId", "userId_2"}));
  EXPECT_EQ(named.decls[0].fields[1].wire_name, "user-id");
}

TEST(ApplyPolicyTest, RequestBodyAvoidsParamNames) {
  auto r = rec("a", "POST", "/m");
  r.raw_parameters = R"([{"name":"body","in":"query"}])";
  r.request_example = R"({"x":1})";
  auto ir = build_reference({r}, "p");
  auto named = apply_identifier_policy(ir, {});
  ASSERT_TRUE(named.functions[0].request);
  EXPECT_EQ(named.functions[0].params[0].identifier, "body");
  EXPECT_EQ(named.functions[0].request->identifier, "body_2");
  EXPECT_EQ(named.functions[0].request->type, InferredType::ref("PostMRequest"));
}

TEST(ApplyPolicyTest, ModulesAndMapping) {
  auto a = rec("a", "GET", "/a");
  a.group = "User Mail";
  a.response_example = R"({"x":{"y":1}})";
  auto b = rec("b", "GET", "/b");
  b.response_example = R"({"x":{"y":1}})";
  auto ir = build_reference({b, a}, "p");
  auto named = apply_identifier_policy(ir, {});
  ASSERT_EQ(named.modules.size(), 2u);
  EXPECT_EQ(named.modules[0].identifier, "misc");
  EXPECT_EQ(named.modules[1].identifier, "user_mail");
  EXPECT_EQ(named.modules[1].group, "User Mail");
  EXPECT_EQ(named.modules[0].decls.size(), 2u);
  EXPECT_TRUE(named.modules[1].decls.empty());

  static const std::regex kIdent("[A-Za-z_][A-Za-z0-9_]*");
  std::map<std::string, std::set<std::string>> finals;
  for (const auto& m : named.mapping) {
    EXPECT_TRUE(std::regex_match(m.final_name, kIdent)) << m.final_name;
    EXPECT_TRUE(finals[m.space].insert(m.final_name).second) << m.space << " " << m.final_name;
  }
  EXPECT_TRUE(finals.contains("function"));
  EXPECT_TRUE(finals.contains("type"));
  EXPECT_TRUE(finals.contains("module"));
}

TEST(RenameRefsTest, RewritesNested) {
  using T = InferredType;
  auto t = T::array(T::union_of({T::null(), T::ref("A")}));
  EXPECT_EQ(rename_refs(t, {{"A", "Alpha"}}), T::array(T::union_of({T::null(), T::ref("Alpha")})));
  EXPECT_EQ(rename_refs(T::ref("B"), {{"A", "Alpha"}}), T::ref("B"));
}

}  // namespace
}  // namespace apibind
