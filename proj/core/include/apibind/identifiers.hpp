// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "apibind/ir.hpp"

namespace apibind {

enum class Casing { LowerCamel, UpperCamel, Snake };
std::string_view to_string(Casing c);
std::optional<Casing> casing_from_string(std::string_view s);

class PolicyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IdentifierPolicy {
  Casing function_casing = Casing::LowerCamel;
  Casing type_casing = Casing::UpperCamel;
  Casing field_casing = Casing::LowerCamel;
  std::set<std::string> reserved_words;

  /// Keys `casing_function`, `casing_type`, `casing_field` and
  /// `reserved_words`; missing keys keep their defaults.
  static IdentifierPolicy from_json(const JsonValue& doc);
  static IdentifierPolicy load(const std::filesystem::path& path);
};

/// Splits on `-`, `.`, `/`, `_`, spaces and camel humps, then joins per casing.
/// The result always matches `[A-Za-z_][A-Za-z0-9_]*`.
std::string apply_casing(std::string_view raw, Casing casing);

/// One identifier namespace. The same raw name always gets the same final
/// name; distinct raw names never share one.
class IdentifierScope {
 public:
  IdentifierScope(Casing casing, const std::set<std::string>* reserved) : casing_(casing), reserved_(reserved) {}

  std::string assign(const std::string& raw);
  /// A new final name even if `raw` was assigned before.
  std::string assign_fresh(const std::string& raw);
  /// Claims a final name without casing, for names fixed by the caller.
  void reserve(const std::string& final_name) { used_.insert(final_name); }
  const std::vector<std::pair<std::string, std::string>>& mapping() const { return order_; }

 private:
  Casing casing_;
  const std::set<std::string>* reserved_;
  std::map<std::string, std::string> by_raw_;
  std::set<std::string> used_;
  std::vector<std::pair<std::string, std::string>> order_;
};

struct NamedParam {
  std::string identifier;
  Parameter param;
  InferredType type;  // references renamed to final type identifiers
};

struct NamedFunction {
  std::string identifier;
  const BindingFunction* source = nullptr;  // unchanged IR entry
  std::vector<NamedParam> params;
  std::optional<NamedParam> request;  // body parameter built from the request example
  InferredType response_type;
};

struct NamedField {
  std::string identifier;
  std::string wire_name;
  InferredType type;
  bool required = true;
};

struct NamedDecl {
  std::string identifier;
  const TypeDecl* source = nullptr;
  std::vector<NamedField> fields;
};

struct NamedModule {
  std::string identifier;  // snake-cased group name
  std::string group;
  std::vector<std::size_t> functions;  // indexes into NamedIr::functions
  std::vector<std::size_t> decls;      // indexes into NamedIr::decls
};

struct IdentifierMapping {
  std::string space;  // "function", "type", "module", "field:<Type>", "param:<fn>"
  std::string raw;
  std::string final_name;
};

/// Holds pointers into the BindingIr it was built from, which must outlive it.
struct NamedIr {
  PackageMeta meta;
  std::vector<NamedFunction> functions;
  std::vector<NamedDecl> decls;
  std::vector<NamedModule> modules;  // sorted by identifier
  std::vector<IdentifierMapping> mapping;
};

/// Replaces every reference name through `names`; unknown names are kept.
InferredType rename_refs(const InferredType& t, const std::map<std::string, std::string>& names);

NamedIr apply_identifier_policy(const BindingIr& ir, const IdentifierPolicy& policy);

}  // namespace apibind
