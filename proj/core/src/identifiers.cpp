// SPDX-License-Identifier: Apache-2.0
#include "apibind/identifiers.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "apibind/text.hpp"

namespace apibind {

namespace {

std::string capitalized(std::string word) {
  word = text::to_lower(word);
  if (!word.empty()) word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
  return word;
}

Casing casing_key(const JsonValue& doc, const char* key, Casing fallback) {
  if (!doc.contains(key)) return fallback;
  const auto& v = doc[key];
  if (!v.is_string()) throw PolicyError(std::string(key) + " must be a string");
  auto c = casing_from_string(v.get<std::string>());
  if (!c) throw PolicyError(std::string(key) + ": unknown casing '" + v.get<std::string>() + "'");
  return *c;
}

std::size_t module_of_record(const BindingIr& ir, const RecordId& id, const std::map<std::string, std::size_t>& by_group) {
  for (const auto& fn : ir.functions) {
    if (fn.record_id == id) return by_group.at(fn.group);
  }
  return by_group.begin()->second;
}

}  // namespace

std::string_view to_string(Casing c) {
  switch (c) {
    case Casing::LowerCamel: return "lower-camel";
    case Casing::UpperCamel: return "upper-camel";
    case Casing::Snake: return "snake";
  }
  return "snake";
}

std::optional<Casing> casing_from_string(std::string_view s) {
  std::string k = text::to_lower(text::trim(s));
  std::replace(k.begin(), k.end(), '_', '-');
  if (k == "lower-camel" || k == "camel") return Casing::LowerCamel;
  if (k == "upper-camel" || k == "pascal") return Casing::UpperCamel;
  if (k == "snake") return Casing::Snake;
  return std::nullopt;
}

IdentifierPolicy IdentifierPolicy::from_json(const JsonValue& doc) {
  if (!doc.is_object()) throw PolicyError("identifier policy must be a JSON object");
  IdentifierPolicy p;
  p.function_casing = casing_key(doc, "casing_function", p.function_casing);
  p.type_casing = casing_key(doc, "casing_type", p.type_casing);
  p.field_casing = casing_key(doc, "casing_field", p.field_casing);
  if (doc.contains("reserved_words")) {
    const auto& words = doc["reserved_words"];
    if (!words.is_array()) throw PolicyError("reserved_words must be an array of strings");
    for (const auto& w : words) {
      if (!w.is_string()) throw PolicyError("reserved_words must be an array of strings");
      p.reserved_words.insert(w.get<std::string>());
    }
  }
  return p;
}

IdentifierPolicy IdentifierPolicy::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PolicyError("cannot read identifier policy '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto parsed = parse_json(buffer.str());
  if (!parsed) {
    throw PolicyError(path.string() + ": invalid JSON at offset " + std::to_string(parsed.error->offset));
  }
  return from_json(*parsed.value);
}

std::string apply_casing(std::string_view raw, Casing casing) {
  auto words = text::split_words(raw);
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    switch (casing) {
      case Casing::LowerCamel:
        out += i == 0 ? text::to_lower(words[i]) : capitalized(words[i]);
        break;
      case Casing::UpperCamel:
        out += capitalized(words[i]);
        break;
      case Casing::Snake:
        if (i > 0) out += '_';
        out += text::to_lower(words[i]);
        break;
    }
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) out.insert(out.begin(), '_');
  return out;
}

std::string IdentifierScope::assign(const std::string& raw) {
  if (auto it = by_raw_.find(raw); it != by_raw_.end()) return it->second;
  std::string name = assign_fresh(raw);
  by_raw_.emplace(raw, name);
  return name;
}

std::string IdentifierScope::assign_fresh(const std::string& raw) {
  std::string base = apply_casing(raw, casing_);
  while (reserved_ && reserved_->contains(base)) base += '_';
  std::string name = base;
  for (int n = 2; used_.contains(name) || (reserved_ && reserved_->contains(name)); ++n) {
    name = base + "_" + std::to_string(n);
  }
  used_.insert(name);
  order_.emplace_back(raw, name);
  return name;
}

InferredType rename_refs(const InferredType& t, const std::map<std::string, std::string>& names) {
  switch (t.kind()) {
    case TypeKind::Ref: {
      auto it = names.find(t.ref_name());
      return it == names.end() ? t : InferredType::ref(it->second);
    }
    case TypeKind::Array:
      return InferredType::array(rename_refs(t.element(), names));
    case TypeKind::Object: {
      std::vector<Field> fields;
      for (const auto& f : t.fields()) fields.push_back(Field{f.name, rename_refs(f.type, names), f.required});
      return InferredType::object(std::move(fields));
    }
    case TypeKind::Union: {
      std::vector<InferredType> branches;
      for (const auto& b : t.branches()) branches.push_back(rename_refs(b, names));
      return InferredType::union_of(std::move(branches));
    }
    default:
      return t;
  }
}

NamedIr apply_identifier_policy(const BindingIr& ir, const IdentifierPolicy& policy) {
  NamedIr out;
  out.meta = ir.meta;
  const auto* reserved = &policy.reserved_words;

  auto record = [&](const std::string& space, const IdentifierScope& scope) {
    for (const auto& [raw, final_name] : scope.mapping()) out.mapping.push_back({space, raw, final_name});
  };

  IdentifierScope types(policy.type_casing, reserved);
  std::map<std::string, std::string> type_names;
  for (const auto& d : ir.decls) type_names[d.name] = types.assign(d.name);
  record("type", types);

  for (const auto& d : ir.decls) {
    NamedDecl nd;
    nd.identifier = type_names.at(d.name);
    nd.source = &d;
    IdentifierScope fields(policy.field_casing, reserved);
    for (const auto& f : d.body.fields()) {
      nd.fields.push_back(NamedField{fields.assign(f.name), f.name, rename_refs(f.type, type_names), f.required});
    }
    record("field:" + nd.identifier, fields);
    out.decls.push_back(std::move(nd));
  }

  IdentifierScope functions(policy.function_casing, reserved);
  for (const auto& fn : ir.functions) {
    NamedFunction nf;
    nf.identifier = functions.assign(fn.raw_name);
    nf.source = &fn;
    IdentifierScope params(policy.field_casing, reserved);
    for (const auto& bp : fn.params) {
      nf.params.push_back(NamedParam{params.assign(bp.param.name), bp.param, rename_refs(bp.type, type_names)});
    }
    if (fn.request_type) {
      Parameter body{"body", Convention::BodyJson, std::nullopt, true, std::nullopt, std::nullopt};
      std::string id = params.assign_fresh("body");
      nf.request = NamedParam{id, body, rename_refs(*fn.request_type, type_names)};
    }
    nf.response_type = rename_refs(fn.response_type, type_names);
    record("param:" + nf.identifier, params);
    out.functions.push_back(std::move(nf));
  }
  record("function", functions);

  IdentifierScope modules(Casing::Snake, reserved);
  std::map<std::string, std::size_t> by_group;
  for (const auto& [group, raws] : ir.groups) {
    (void)raws;
    NamedModule m;
    m.identifier = modules.assign(group);
    m.group = group;
    by_group[group] = out.modules.size();
    out.modules.push_back(std::move(m));
  }
  record("module", modules);
  for (std::size_t i = 0; i < ir.functions.size(); ++i) out.modules[by_group.at(ir.functions[i].group)].functions.push_back(i);
  if (!out.modules.empty()) {
    for (std::size_t i = 0; i < ir.decls.size(); ++i) {
      out.modules[module_of_record(ir, ir.decls[i].source_record, by_group)].decls.push_back(i);
    }
  }

  std::sort(out.modules.begin(), out.modules.end(),
            [](const NamedModule& a, const NamedModule& b) { return a.identifier < b.identifier; });
  return out;
}

}  // namespace apibind
