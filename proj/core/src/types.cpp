// SPDX-License-Identifier: Apache-2.0
#include "apibind/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace apibind {

namespace {

// Branches of a normalized union are keyed by class; Int and Float share one.
int class_of(TypeKind k) {
  switch (k) {
    case TypeKind::Null: return 0;
    case TypeKind::Bool: return 1;
    case TypeKind::Int:
    case TypeKind::Float: return 2;
    case TypeKind::String: return 3;
    case TypeKind::Array: return 4;
    case TypeKind::Object: return 5;
    case TypeKind::Ref: return 6;
    default: return -1;
  }
}

bool same_class(const InferredType& a, const InferredType& b) {
  if (class_of(a.kind()) != class_of(b.kind())) return false;
  return !a.is(TypeKind::Ref) || a.ref_name() == b.ref_name();
}

InferredType merge_objects(const InferredType& a, const InferredType& b) {
  std::vector<Field> out;
  auto fa = a.fields();
  auto fb = b.fields();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].name < fb[j].name)) {
      out.push_back(Field{fa[i].name, fa[i].type, false});
      ++i;
    } else if (i == fa.size() || fb[j].name < fa[i].name) {
      out.push_back(Field{fb[j].name, fb[j].type, false});
      ++j;
    } else {
      out.push_back(Field{fa[i].name, unify(fa[i].type, fb[j].type),
                          fa[i].required && fb[j].required});
      ++i;
      ++j;
    }
  }
  return InferredType::object(std::move(out));
}

InferredType join_same_class(const InferredType& a, const InferredType& b) {
  if (a == b) return a;
  switch (a.kind()) {
    case TypeKind::Int:
    case TypeKind::Float:
      return InferredType::floating();
    case TypeKind::Array:
      return InferredType::array(unify(a.element(), b.element()));
    case TypeKind::Object:
      return merge_objects(a, b);
    default:
      return a;
  }
}

std::strong_ordering compare_fields(std::span<const Field> a, std::span<const Field> b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (auto c = a[i].name <=> b[i].name; c != 0) return c;
    if (auto c = a[i].type <=> b[i].type; c != 0) return c;
    if (auto c = a[i].required <=> b[i].required; c != 0) return c;
  }
  return a.size() <=> b.size();
}

FinalizedType finalize_impl(const InferredType& t) {
  switch (t.kind()) {
    case TypeKind::Bottom:
      return {InferredType::any(), false};
    case TypeKind::Array: {
      if (t.element().is(TypeKind::Bottom)) return {InferredType::array(InferredType::any()), true};
      auto inner = finalize_impl(t.element());
      return {InferredType::array(std::move(inner.type)), inner.replaced_empty_array};
    }
    case TypeKind::Object: {
      std::vector<Field> fields;
      bool replaced = false;
      for (const auto& f : t.fields()) {
        auto inner = finalize_impl(f.type);
        replaced |= inner.replaced_empty_array;
        fields.push_back(Field{f.name, std::move(inner.type), f.required});
      }
      return {InferredType::object(std::move(fields)), replaced};
    }
    case TypeKind::Union: {
      std::vector<InferredType> branches;
      bool replaced = false;
      for (const auto& b : t.branches()) {
        auto inner = finalize_impl(b);
        replaced |= inner.replaced_empty_array;
        branches.push_back(std::move(inner.type));
      }
      return {InferredType::union_of(std::move(branches)), replaced};
    }
    default:
      return {t, false};
  }
}

}  // namespace

InferredType InferredType::array(InferredType element) {
  InferredType t(TypeKind::Array);
  t.children_.push_back(std::move(element));
  return t;
}

InferredType InferredType::object(std::vector<Field> fields) {
  std::sort(fields.begin(), fields.end(),
            [](const Field& a, const Field& b) { return a.name < b.name; });
  auto dup = std::adjacent_find(fields.begin(), fields.end(),
                                [](const Field& a, const Field& b) { return a.name == b.name; });
  if (dup != fields.end()) throw std::invalid_argument("duplicate object field '" + dup->name + "'");
  InferredType t(TypeKind::Object);
  t.fields_ = std::move(fields);
  return t;
}

InferredType InferredType::union_of(std::vector<InferredType> branches) {
  std::vector<InferredType> flat;
  for (auto& b : branches) {
    if (b.is(TypeKind::Union)) {
      flat.insert(flat.end(), b.children_.begin(), b.children_.end());
    } else {
      flat.push_back(std::move(b));
    }
  }
  std::vector<InferredType> acc;
  for (auto& b : flat) {
    if (b.is(TypeKind::Bottom)) continue;
    if (b.is(TypeKind::Any)) return any();
    auto it = std::find_if(acc.begin(), acc.end(), [&](const InferredType& x) { return same_class(x, b); });
    if (it == acc.end()) {
      acc.push_back(std::move(b));
    } else {
      *it = join_same_class(*it, b);
    }
  }
  if (acc.empty()) return bottom();
  if (acc.size() == 1) return std::move(acc.front());
  std::sort(acc.begin(), acc.end(), [](const InferredType& a, const InferredType& b) {
    int ca = class_of(a.kind()), cb = class_of(b.kind());
    if (ca != cb) return ca < cb;
    return a.ref_name() < b.ref_name();
  });
  InferredType t(TypeKind::Union);
  t.children_ = std::move(acc);
  return t;
}

InferredType InferredType::ref(std::string name) {
  InferredType t(TypeKind::Ref);
  t.name_ = std::move(name);
  return t;
}

const InferredType& InferredType::element() const {
  if (kind_ != TypeKind::Array) throw std::logic_error("element() on a non-array type");
  return children_.front();
}

std::span<const Field> InferredType::fields() const { return fields_; }

std::span<const InferredType> InferredType::branches() const {
  if (kind_ != TypeKind::Union) return {};
  return children_;
}

bool operator==(const InferredType& a, const InferredType& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const InferredType& a, const InferredType& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  for (std::size_t i = 0; i < a.children_.size() && i < b.children_.size(); ++i) {
    if (auto c = a.children_[i] <=> b.children_[i]; c != 0) return c;
  }
  if (auto c = a.children_.size() <=> b.children_.size(); c != 0) return c;
  return compare_fields(a.fields_, b.fields_);
}

bool operator==(const Field& a, const Field& b) {
  return a.name == b.name && a.required == b.required && a.type == b.type;
}

InferredType unify(const InferredType& a, const InferredType& b) {
  if (a.is(TypeKind::Bottom)) return b;
  if (b.is(TypeKind::Bottom)) return a;
  if (a.is(TypeKind::Any) || b.is(TypeKind::Any)) return InferredType::any();
  if (a == b) return a;
  if (!a.is(TypeKind::Union) && !b.is(TypeKind::Union) && same_class(a, b)) {
    return join_same_class(a, b);
  }
  return InferredType::union_of({a, b});
}

InferredType infer_value_type(const JsonValue& value) {
  switch (value.type()) {
    case JsonValue::value_t::null:
      return InferredType::null();
    case JsonValue::value_t::boolean:
      return InferredType::boolean();
    case JsonValue::value_t::number_integer:
    case JsonValue::value_t::number_unsigned:
      return InferredType::integer();
    case JsonValue::value_t::number_float:
      return InferredType::floating();
    case JsonValue::value_t::string:
      return InferredType::string();
    case JsonValue::value_t::array: {
      InferredType elem;
      for (const auto& v : value) elem = unify(elem, infer_value_type(v));
      return InferredType::array(std::move(elem));
    }
    case JsonValue::value_t::object: {
      std::vector<Field> fields;
      for (const auto& [k, v] : value.items()) fields.push_back(Field{k, infer_value_type(v), true});
      return InferredType::object(std::move(fields));
    }
    default:
      return InferredType::any();
  }
}

InferredType infer_from_examples(std::span<const JsonValue> docs) {
  if (docs.empty()) return InferredType::any();
  InferredType acc;
  for (const auto& d : docs) acc = unify(acc, infer_value_type(d));
  return acc;
}

FinalizedType finalize_type(const InferredType& t) { return finalize_impl(t); }

std::string to_string(const InferredType& t) {
  switch (t.kind()) {
    case TypeKind::Bottom: return "never";
    case TypeKind::Null: return "null";
    case TypeKind::Bool: return "bool";
    case TypeKind::Int: return "int";
    case TypeKind::Float: return "float";
    case TypeKind::String: return "string";
    case TypeKind::Any: return "any";
    case TypeKind::Ref: return t.ref_name();
    case TypeKind::Array: return "[" + to_string(t.element()) + "]";
    case TypeKind::Object: {
      std::string out = "{";
      bool first = true;
      for (const auto& f : t.fields()) {
        if (!first) out += ", ";
        first = false;
        out += f.name;
        if (!f.required) out += '?';
        out += ": ";
        out += to_string(f.type);
      }
      return out + "}";
    }
    case TypeKind::Union: {
      std::string out;
      for (const auto& b : t.branches()) {
        if (!out.empty()) out += " | ";
        out += to_string(b);
      }
      return out;
    }
  }
  return "?";
}

}  // namespace apibind
