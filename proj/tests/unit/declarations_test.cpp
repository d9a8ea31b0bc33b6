// SPDX-License-Identifier: Apache-2.0
#include "apibind/declarations.hpp"

#include <gtest/gtest.h>

#include "type_oracle.hpp"

namespace apibind {
namespace {

using testing::obj;
using T = InferredType;

TEST(LiftTest, NestedObjectsNamedByFieldPath) {
  auto t = obj({{"user", obj({{"id", T::integer(), true}}), true}});
  auto r = lift_declarations(t, "CreateMsgRequest", DeclOrigin::Request);
  ASSERT_EQ(r.decls.size(), 2u);
  EXPECT_EQ(r.decls[0].name, "CreateMsgRequest");
  EXPECT_EQ(r.decls[0].origin, DeclOrigin::Request);
  EXPECT_EQ(r.decls[1].name, "CreateMsgRequestUser");
  EXPECT_EQ(r.decls[1].origin, DeclOrigin::Nested);
  EXPECT_EQ(r.type, T::ref("CreateMsgRequest"));
  EXPECT_EQ(r.decls[0].body, obj({{"user", T::ref("CreateMsgRequestUser"), true}}));
  EXPECT_TRUE(r.issues.empty());
}

TEST(LiftTest, EqualStructuresShareOneDecl) {
  auto point = obj({{"x", T::integer(), true}});
  auto t = obj({{"from", point, true}, {"to", point, true}});
  auto r = lift_declarations(t, "Line");
  ASSERT_EQ(r.decls.size(), 2u);
  EXPECT_EQ(r.decls[1].name, "LineFrom");
  EXPECT_EQ(r.decls[0].body, obj({{"from", T::ref("LineFrom"), true}, {"to", T::ref("LineFrom"), true}}));
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(r.issues[0].code, IssueCode::W_DECL_SHARED);
}

TEST(LiftTest, ScalarUnchanged) {
  auto t = testing::uni({T::string(), T::null()});
  auto r = lift_declarations(t, "X");
  EXPECT_TRUE(r.decls.empty());
  EXPECT_EQ(r.type, t);
}

TEST(LiftTest, ArrayElementsGetItemSuffix) {
  auto r = lift_declarations(T::array(obj({{"id", T::string(), true}})), "ListUsersResponse");
  ASSERT_EQ(r.decls.size(), 1u);
  EXPECT_EQ(r.decls[0].name, "ListUsersResponseItem");
  EXPECT_EQ(r.type, T::array(T::ref("ListUsersResponseItem")));
}

TEST(LiftTest, RegistrySharesAcrossLiftsAndAvoidsNameClashes) {
  DeclarationRegistry reg;
  RecordId a("a"), b("b");
  auto first = reg.lift(obj({{"id", T::string(), true}}), "Thing", DeclOrigin::Response, a);
  auto same = reg.lift(obj({{"id", T::string(), true}}), "Other", DeclOrigin::Response, b);
  EXPECT_EQ(same.type, T::ref("Thing"));
  EXPECT_TRUE(same.decls.empty());
  auto clash = reg.lift(obj({{"n", T::integer(), true}}), "Thing", DeclOrigin::Response, b);
  EXPECT_EQ(clash.type, T::ref("Thing2"));
  EXPECT_EQ(reg.decls().size(), 2u);
  ASSERT_NE(reg.find("Thing2"), nullptr);
  EXPECT_EQ(reg.find("Thing2")->source_record, b);
  EXPECT_EQ(reg.find("Missing"), nullptr);
}

}  // namespace
}  // namespace apibind
