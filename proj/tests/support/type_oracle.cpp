// SPDX-License-Identifier: Apache-2.0
#include "type_oracle.hpp"

#include <algorithm>
#include <set>

namespace apibind::testing {

namespace {

using K = TypeKind;

const Field* field_named(std::span<const Field> fields, const std::string& name) {
  for (const auto& f : fields) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

bool object_subtype(const InferredType& a, const InferredType& b) {
  for (const auto& fa : a.fields()) {
    const Field* fb = field_named(b.fields(), fa.name);
    if (!fb || !is_subtype(fa.type, fb->type)) return false;
    if (fb->required && !fa.required) return false;
  }
  for (const auto& fb : b.fields()) {
    if (fb.required && !field_named(a.fields(), fb.name)) return false;
  }
  return true;
}

}  // namespace

bool inhabits(const JsonValue& doc, const InferredType& t) {
  switch (t.kind()) {
    case K::Any: return true;
    case K::Bottom: return false;
    case K::Null: return doc.is_null();
    case K::Bool: return doc.is_boolean();
    case K::Int: return doc.is_number_integer() || doc.is_number_unsigned();
    case K::Float: return doc.is_number();
    case K::String: return doc.is_string();
    case K::Ref: return false;
    case K::Array:
      return doc.is_array() &&
             std::all_of(doc.begin(), doc.end(), [&](const JsonValue& e) { return inhabits(e, t.element()); });
    case K::Object: {
      if (!doc.is_object()) return false;
      for (const auto& [key, value] : doc.items()) {
        const Field* f = field_named(t.fields(), key);
        if (!f || !inhabits(value, f->type)) return false;
      }
      for (const auto& f : t.fields()) {
        if (f.required && !doc.contains(f.name)) return false;
      }
      return true;
    }
    case K::Union:
      return std::any_of(t.branches().begin(), t.branches().end(),
                         [&](const InferredType& b) { return inhabits(doc, b); });
  }
  return false;
}

bool is_subtype(const InferredType& a, const InferredType& b) {
  if (a.is(K::Bottom) || b.is(K::Any)) return true;
  if (a.is(K::Any)) return false;
  if (a.is(K::Union)) {
    return std::all_of(a.branches().begin(), a.branches().end(),
                       [&](const InferredType& x) { return is_subtype(x, b); });
  }
  if (b.is(K::Union)) {
    return std::any_of(b.branches().begin(), b.branches().end(),
                       [&](const InferredType& y) { return is_subtype(a, y); });
  }
  if (a.kind() == K::Int && b.kind() == K::Float) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case K::Array: return is_subtype(a.element(), b.element());
    case K::Object: return object_subtype(a, b);
    case K::Ref: return a.ref_name() == b.ref_name();
    default: return true;
  }
}

InferredType obj(std::vector<Field> fields) { return InferredType::object(std::move(fields)); }

InferredType uni(std::vector<InferredType> branches) { return InferredType::union_of(std::move(branches)); }

std::vector<InferredType> type_universe() {
  const InferredType null = InferredType::null(), boolean = InferredType::boolean(), i = InferredType::integer(),
                     f = InferredType::floating(), s = InferredType::string();
  std::vector<InferredType> out{InferredType::bottom(), InferredType::any(), null, boolean, i, f, s};

  // depth 1: arrays, unions of scalars, small objects
  for (const auto& e : {InferredType::bottom(), null, boolean, i, f, s}) out.push_back(InferredType::array(e));
  out.push_back(uni({null, i}));
  out.push_back(uni({null, f}));
  out.push_back(uni({null, s}));
  out.push_back(uni({boolean, i}));
  out.push_back(uni({i, s}));
  out.push_back(uni({null, boolean, s}));
  out.push_back(uni({null, i, s}));

  // Objects: each of a, b, c absent, required int, optional int, or required string.
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<Field> fields;
    const char* names[] = {"a", "b", "c"};
    for (int k = 0; k < 3; ++k) {
      int choice = (mask >> (2 * k)) & 3;
      if (choice == 1) fields.push_back(Field{names[k], i, true});
      if (choice == 2) fields.push_back(Field{names[k], i, false});
      if (choice == 3) fields.push_back(Field{names[k], s, true});
    }
    out.push_back(obj(std::move(fields)));
  }
  out.push_back(obj({Field{"a", null, true}}));
  out.push_back(obj({Field{"a", f, true}}));
  out.push_back(obj({Field{"a", InferredType::any(), false}}));

  // depth 2
  out.push_back(InferredType::array(InferredType::array(i)));
  out.push_back(InferredType::array(InferredType::array(InferredType::bottom())));
  out.push_back(InferredType::array(uni({null, i})));
  out.push_back(InferredType::array(obj({Field{"a", i, true}})));
  out.push_back(InferredType::array(obj({Field{"a", i, false}, Field{"b", s, true}})));
  out.push_back(InferredType::array(obj({})));
  out.push_back(obj({Field{"a", InferredType::array(i), true}}));
  out.push_back(obj({Field{"a", InferredType::array(InferredType::bottom()), true}}));
  out.push_back(obj({Field{"a", uni({null, i}), true}}));
  out.push_back(obj({Field{"a", uni({i, s}), false}}));
  out.push_back(obj({Field{"a", obj({Field{"b", i, true}}), true}}));
  out.push_back(obj({Field{"a", obj({Field{"b", i, false}}), false}, Field{"c", s, true}}));
  out.push_back(obj({Field{"b", obj({}), true}}));
  out.push_back(uni({null, obj({Field{"a", i, true}})}));
  out.push_back(uni({s, obj({Field{"b", s, true}})}));
  out.push_back(uni({i, InferredType::array(s)}));
  out.push_back(uni({null, InferredType::array(i)}));
  out.push_back(uni({null, i, InferredType::array(i), obj({Field{"a", i, true}})}));

  std::set<InferredType> seen;
  std::vector<InferredType> unique;
  for (auto& t : out) {
    if (seen.insert(t).second) unique.push_back(std::move(t));
  }
  return unique;
}

}  // namespace apibind::testing
