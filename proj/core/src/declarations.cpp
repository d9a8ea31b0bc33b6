// SPDX-License-Identifier: Apache-2.0
#include "apibind/declarations.hpp"

#include "apibind/text.hpp"

namespace apibind {

std::string_view to_string(DeclOrigin origin) {
  switch (origin) {
    case DeclOrigin::Request: return "request";
    case DeclOrigin::Response: return "response";
    case DeclOrigin::Nested: return "nested";
  }
  return "nested";
}

const TypeDecl* DeclarationRegistry::find(std::string_view name) const {
  for (const auto& d : decls_) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

std::string DeclarationRegistry::unique_name(const std::string& wanted) {
  const std::string base = wanted.empty() ? std::string("Type") : wanted;
  std::string name = base;
  for (int n = 2; names_.contains(name); ++n) name = base + std::to_string(n);
  names_.insert(name);
  return name;
}

InferredType DeclarationRegistry::lift_node(const InferredType& t, const std::string& name, bool top,
                                            LiftResult& out) {
  switch (t.kind()) {
    case TypeKind::Object: {
      if (auto it = by_body_.find(t); it != by_body_.end()) {
        out.issues.push_back(make_issue(IssueCode::W_DECL_SHARED, Stage::Infer,
                                        name + " reuses declaration " + it->second));
        return InferredType::ref(it->second);
      }
      std::string final_name = unique_name(name);
      by_body_.emplace(t, final_name);
      std::size_t slot = decls_.size();
      decls_.push_back(TypeDecl{final_name, InferredType::object({}), top ? origin_ : DeclOrigin::Nested,
                                *source_});
      std::vector<Field> fields;
      for (const auto& f : t.fields()) {
        std::string suffix = text::upper_camel(f.name);
        if (suffix.empty()) suffix = "Field";
        fields.push_back(Field{f.name, lift_node(f.type, final_name + suffix, false, out), f.required});
      }
      decls_[slot].body = InferredType::object(std::move(fields));
      return InferredType::ref(final_name);
    }
    case TypeKind::Array:
      return InferredType::array(lift_node(t.element(), name + "Item", top, out));
    case TypeKind::Union: {
      std::vector<InferredType> branches;
      for (const auto& b : t.branches()) branches.push_back(lift_node(b, name, top, out));
      return InferredType::union_of(std::move(branches));
    }
    default:
      return t;
  }
}

LiftResult DeclarationRegistry::lift(const InferredType& type, std::string_view base_name, DeclOrigin origin,
                                     const RecordId& source) {
  origin_ = origin;
  source_ = &source;
  std::size_t first_new = decls_.size();
  LiftResult out;
  out.type = lift_node(type, std::string(base_name), true, out);
  out.decls.assign(decls_.begin() + static_cast<std::ptrdiff_t>(first_new), decls_.end());
  source_ = nullptr;
  return out;
}

LiftResult lift_declarations(const InferredType& type, std::string_view base_name, DeclOrigin origin,
                             const RecordId& source) {
  DeclarationRegistry registry;
  return registry.lift(type, base_name, origin, source);
}

}  // namespace apibind
