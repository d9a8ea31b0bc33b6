// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "apibind/record_id.hpp"
#include "apibind/types.hpp"

namespace apibind {

enum class DeclOrigin { Request, Response, Nested };
std::string_view to_string(DeclOrigin origin);

/// A named object type lifted out of an inferred type.
struct TypeDecl {
  std::string name;   // raw, before identifier policy
  InferredType body;  // an object whose nested objects are references
  DeclOrigin origin;
  RecordId source_record;
};

struct LiftResult {
  InferredType type;            // objects replaced by references
  std::vector<TypeDecl> decls;  // declarations created by this call, parents first
  std::vector<Issue> issues;    // W_DECL_SHARED for each reuse
};

/// Lifts object types into named declarations. Structurally equal object
/// types share one declaration across every lift on the same registry.
class DeclarationRegistry {
 public:
  LiftResult lift(const InferredType& type, std::string_view base_name, DeclOrigin origin,
                  const RecordId& source);

  const std::vector<TypeDecl>& decls() const { return decls_; }
  const TypeDecl* find(std::string_view name) const;

 private:
  InferredType lift_node(const InferredType& t, const std::string& name, bool top, LiftResult& out);
  std::string unique_name(const std::string& wanted);

  std::vector<TypeDecl> decls_;
  std::map<InferredType, std::string> by_body_;
  std::set<std::string, std::less<>> names_;
  DeclOrigin origin_ = DeclOrigin::Response;
  const RecordId* source_ = nullptr;
};

/// Names follow the field path: base `CreateMsgRequest` with field `user`
/// gives `CreateMsgRequestUser`; array elements append `Item`.
LiftResult lift_declarations(const InferredType& type, std::string_view base_name,
                             DeclOrigin origin = DeclOrigin::Response,
                             const RecordId& source = RecordId("-"));

}  // namespace apibind
