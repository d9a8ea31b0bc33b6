// SPDX-License-Identifier: Apache-2.0
#include "apibind/parameters.hpp"

#include "apibind/text.hpp"

namespace apibind {

namespace {

enum class Key { Name, Convention, Type, Required, Description, Example };

std::optional<Key> classify_key(std::string_view key) {
  std::string k = text::to_lower(text::trim(key));
  if (k == "name" || k == "parameter") return Key::Name;
  if (k == "in" || k == "location" || k == "passed_in") return Key::Convention;
  if (k == "type") return Key::Type;
  if (k == "required" || k == "mandatory") return Key::Required;
  if (k == "description" || k == "notes") return Key::Description;
  if (k == "example") return Key::Example;
  return std::nullopt;
}

std::optional<bool> parse_required(const JsonValue& v) {
  if (v.is_boolean()) return v.get<bool>();
  if (!v.is_string()) return std::nullopt;
  std::string s = text::to_lower(text::trim(v.get<std::string>()));
  if (s == "yes" || s == "true" || s == "required") return true;
  if (s == "no" || s == "false" || s == "optional") return false;
  return std::nullopt;
}

std::optional<std::string> as_text(const JsonValue& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return std::nullopt;
  return v.dump();
}

Issue param_issue(IssueCode code, std::string message, std::string field) {
  return make_issue(code, Stage::Parse, std::move(message), std::move(field));
}

}  // namespace

std::string_view to_string(Convention c) {
  switch (c) {
    case Convention::Path: return "path";
    case Convention::Query: return "query";
    case Convention::BodyJson: return "body";
    case Convention::BodyText: return "text";
    case Convention::Header: return "header";
    case Convention::Cookie: return "cookie";
  }
  return "query";
}

std::optional<Convention> convention_from_string(std::string_view s) {
  std::string k = text::to_lower(text::trim(s));
  if (k == "path") return Convention::Path;
  if (k == "query" || k == "url") return Convention::Query;
  if (k == "body" || k == "json") return Convention::BodyJson;
  if (k == "text") return Convention::BodyText;
  if (k == "header") return Convention::Header;
  if (k == "cookie") return Convention::Cookie;
  return std::nullopt;
}

Convention default_convention(std::optional<HttpMethod> method) {
  if (!method) return Convention::BodyJson;
  switch (*method) {
    case HttpMethod::GET:
    case HttpMethod::DELETE:
    case HttpMethod::HEAD:
    case HttpMethod::OPTIONS:
      return Convention::Query;
    default:
      return Convention::BodyJson;
  }
}

ParameterTableResult parse_parameter_table(std::string_view raw, std::optional<HttpMethod> method) {
  ParameterTableResult result;
  auto parsed = parse_json(raw);
  if (!parsed || !parsed.value->is_array()) {
    std::string why = parsed ? "parameters cell is not a JSON array"
                             : "parameters cell is not JSON: " + parsed.error->message;
    result.issues.push_back(param_issue(IssueCode::E_JSON_CELL, why, "parameters"));
    return result;
  }

  std::vector<Parameter> params;
  std::size_t index = 0;
  for (const auto& entry : *parsed.value) {
    ++index;
    std::string where = "parameter #" + std::to_string(index);
    if (!entry.is_object()) {
      result.issues.push_back(
          param_issue(IssueCode::E_JSON_CELL, where + " is not a JSON object", "parameters"));
      continue;
    }
    Parameter p;
    bool has_name = false;
    std::optional<std::string> convention_text;
    bool has_convention_key = false;
    for (const auto& [key, value] : entry.items()) {
      auto kind = classify_key(key);
      if (!kind) continue;
      switch (*kind) {
        case Key::Name:
          if (value.is_string() && !text::trim(value.get<std::string>()).empty()) {
            p.name = std::string(text::trim(value.get<std::string>()));
            has_name = true;
          }
          break;
        case Key::Convention:
          has_convention_key = true;
          convention_text = as_text(value);
          break;
        case Key::Type:
          p.declared_type = as_text(value);
          break;
        case Key::Required:
          p.required = parse_required(value);
          break;
        case Key::Description:
          p.description = as_text(value);
          break;
        case Key::Example:
          p.example = value;
          break;
      }
    }
    if (!has_name) {
      result.issues.push_back(
          param_issue(IssueCode::E_PARAM_NO_NAME, where + " has no name", "parameters"));
      continue;
    }
    std::optional<Convention> conv;
    if (convention_text) conv = convention_from_string(*convention_text);
    if (conv) {
      p.convention = *conv;
    } else {
      p.convention = default_convention(method);
      std::string shown = has_convention_key && convention_text ? "'" + *convention_text + "'" : "missing";
      result.issues.push_back(param_issue(IssueCode::W_PARAM_CONV_UNKNOWN,
                                          "passing convention " + shown + "; defaulted to " +
                                              std::string(to_string(p.convention)),
                                          p.name));
    }
    params.push_back(std::move(p));
  }
  result.value = std::move(params);
  return result;
}

}  // namespace apibind
