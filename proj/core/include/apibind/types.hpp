// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "apibind/issue.hpp"
#include "apibind/json.hpp"

namespace apibind {

enum class TypeKind { Bottom, Null, Bool, Int, Float, String, Array, Object, Union, Any, Ref };

struct Field;

/// A node of the union-type lattice inferred from JSON examples.
///
/// Values are always normalized: unions are flat, hold at least two branches,
/// never contain Bottom or Any, and keep at most one branch per kind class
/// (Int and Float share a class, as do all objects and all arrays). Object
/// fields are sorted by name. Bottom is the fold seed; inside a composite it
/// only appears as the element type of an array that was only seen empty.
class InferredType {
 public:
  InferredType() = default;  // Bottom

  static InferredType bottom() { return InferredType(TypeKind::Bottom); }
  static InferredType null() { return InferredType(TypeKind::Null); }
  static InferredType boolean() { return InferredType(TypeKind::Bool); }
  static InferredType integer() { return InferredType(TypeKind::Int); }
  static InferredType floating() { return InferredType(TypeKind::Float); }
  static InferredType string() { return InferredType(TypeKind::String); }
  static InferredType any() { return InferredType(TypeKind::Any); }
  static InferredType array(InferredType element);
  /// Field names must be unique; order is irrelevant.
  static InferredType object(std::vector<Field> fields);
  /// Normalizes: flattens, absorbs, merges same-class branches.
  static InferredType union_of(std::vector<InferredType> branches);
  /// Named reference to a lifted declaration.
  static InferredType ref(std::string name);

  TypeKind kind() const { return kind_; }
  bool is(TypeKind k) const { return kind_ == k; }
  const InferredType& element() const;
  std::span<const Field> fields() const;
  std::span<const InferredType> branches() const;
  const std::string& ref_name() const { return name_; }

  friend bool operator==(const InferredType& a, const InferredType& b);
  friend std::strong_ordering operator<=>(const InferredType& a, const InferredType& b);

 private:
  explicit InferredType(TypeKind kind) : kind_(kind) {}

  TypeKind kind_ = TypeKind::Bottom;
  std::vector<InferredType> children_;  // array element, or union branches
  std::vector<Field> fields_;
  std::string name_;
};

struct Field {
  std::string name;
  InferredType type;
  bool required = true;
};

bool operator==(const Field& a, const Field& b);

/// Least upper bound. Bottom is the identity, Any absorbs, Int widens to
/// Float, objects merge field-wise (a field missing on one side becomes
/// optional), arrays merge element-wise, everything else forms a union.
InferredType unify(const InferredType& a, const InferredType& b);

InferredType infer_value_type(const JsonValue& value);

/// Fold of unify over the example types with a Bottom seed. An empty list
/// yields Any; callers tag W_NO_EXAMPLE.
InferredType infer_from_examples(std::span<const JsonValue> docs);

struct FinalizedType {
  InferredType type;
  bool replaced_empty_array = false;
};

/// Converts an inference result into user-visible form: arrays that were only
/// seen empty get element type Any and a top-level Bottom becomes Any.
FinalizedType finalize_type(const InferredType& t);

/// Compact rendering used in diagnostics and tests, e.g. `{a: int, b?: [string]}`.
std::string to_string(const InferredType& t);

}  // namespace apibind
