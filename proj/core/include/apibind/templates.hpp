// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "apibind/json.hpp"

namespace apibind {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TemplateError : public GenerationError {
 public:
  TemplateError(std::string template_name, std::string placeholder, const std::string& what)
      : GenerationError(what), template_name_(std::move(template_name)), placeholder_(std::move(placeholder)) {}

  const std::string& template_name() const { return template_name_; }
  const std::string& placeholder() const { return placeholder_; }

 private:
  std::string template_name_;
  std::string placeholder_;
};

/// `{{name}}` substitutes a scalar; `{{#name}}...{{/name}}` repeats its body
/// once per element of a list (each element becomes the innermost scope) or
/// once for `true`. Names resolve from the innermost scope outwards. A block
/// tag alone on its line consumes the whole line.
class Template {
 public:
  static Template parse(std::string name, std::string_view source);

  std::string render(const JsonValue& context) const;
  const std::string& name() const { return name_; }

  struct Node;

 private:
  std::string name_;
  std::shared_ptr<const std::vector<Node>> nodes_;
};

inline constexpr std::string_view kRequiredTemplates[] = {"manifest", "module_header", "function", "type",
                                                          "doc_comment"};

/// The five required templates plus optional `module_path`, `manifest_path`
/// and a `type_spelling.json` table.
class TemplateSet {
 public:
  /// Keys are file names (`function.tpl`, `type_spelling.json`, ...).
  static TemplateSet from_sources(const std::map<std::string, std::string>& files);
  static TemplateSet load(const std::filesystem::path& dir);
  static TemplateSet neutral();

  const Template& get(std::string_view name) const;
  const JsonValue& type_spelling() const { return spelling_; }

 private:
  std::map<std::string, Template, std::less<>> templates_;
  JsonValue spelling_;
};

/// File name -> content of the built-in neutral set, as shipped in
/// templates/neutral.
const std::map<std::string, std::string>& neutral_template_files();

}  // namespace apibind
