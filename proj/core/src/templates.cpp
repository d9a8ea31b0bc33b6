// SPDX-License-Identifier: Apache-2.0
#include "apibind/templates.hpp"

#include <fstream>
#include <sstream>

#include "apibind/text.hpp"

namespace apibind {

struct Template::Node {
  enum Kind { Text, Variable, Section } kind;
  std::string value;  // text, or placeholder name
  std::vector<Node> children;
};

namespace {

using Node = Template::Node;

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r") == std::string_view::npos; }

struct Parser {
  const std::string& name;
  std::string_view src;

  [[noreturn]] void fail(const std::string& placeholder, const std::string& what) {
    throw TemplateError(name, placeholder, "template " + name + ": " + what);
  }

  std::vector<Node> parse() {
    std::vector<Node> root;
    std::vector<std::vector<Node>*> stack{&root};
    std::vector<std::string> open;
    std::size_t pos = 0;
    while (pos < src.size()) {
      std::size_t start = src.find("{{", pos);
      if (start == std::string_view::npos) {
        stack.back()->push_back(Node{Node::Text, std::string(src.substr(pos)), {}});
        break;
      }
      std::size_t end = src.find("}}", start + 2);
      if (end == std::string_view::npos) fail("", "unterminated tag at offset " + std::to_string(start));
      std::string_view tag = text::trim(src.substr(start + 2, end - start - 2));
      std::size_t after = end + 2;
      char sigil = tag.empty() ? '\0' : tag.front();
      bool block = sigil == '#' || sigil == '/';
      std::string key(block ? text::trim(tag.substr(1)) : tag);
      if (key.empty()) fail("", "empty tag at offset " + std::to_string(start));

      std::string_view before = src.substr(pos, start - pos);
      if (block) {
        std::size_t nl = start == 0 ? std::string_view::npos : src.rfind('\n', start - 1);
        std::size_t line_start = nl == std::string_view::npos ? 0 : nl + 1;
        bool alone_before = line_start >= pos && blank(src.substr(line_start, start - line_start));
        std::size_t line_end = src.find('\n', after);
        std::size_t stop = line_end == std::string_view::npos ? src.size() : line_end;
        if (alone_before && blank(src.substr(after, stop - after))) {
          before = src.substr(pos, line_start - pos);
          after = line_end == std::string_view::npos ? src.size() : line_end + 1;
        }
      }
      if (!before.empty()) stack.back()->push_back(Node{Node::Text, std::string(before), {}});

      if (sigil == '#') {
        stack.back()->push_back(Node{Node::Section, key, {}});
        stack.push_back(&stack.back()->back().children);
        open.push_back(key);
      } else if (sigil == '/') {
        if (open.empty() || open.back() != key) fail(key, "unexpected {{/" + key + "}}");
        open.pop_back();
        stack.pop_back();
      } else {
        stack.back()->push_back(Node{Node::Variable, key, {}});
      }
      pos = after;
    }
    if (!open.empty()) fail(open.back(), "unclosed {{#" + open.back() + "}}");
    return root;
  }
};

struct Renderer {
  const std::string& name;
  std::vector<const JsonValue*> scopes;

  const JsonValue& lookup(const std::string& key) {
    for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
      if ((*it)->is_object()) {
        auto found = (*it)->find(key);
        if (found != (*it)->end()) return *found;
      }
    }
    throw TemplateError(name, key, "template " + name + ": unknown placeholder '" + key + "'");
  }

  void run(const std::vector<Node>& nodes, std::string& out) {
    for (const auto& n : nodes) {
      switch (n.kind) {
        case Node::Text:
          out += n.value;
          break;
        case Node::Variable: {
          const auto& v = lookup(n.value);
          if (v.is_string()) {
            out += v.get_ref<const std::string&>();
          } else if (v.is_number() || v.is_boolean()) {
            out += v.dump();
          } else {
            throw TemplateError(name, n.value, "template " + name + ": placeholder '" + n.value +
                                                   "' is a list, not a value");
          }
          break;
        }
        case Node::Section: {
          const auto& v = lookup(n.value);
          if (v.is_boolean()) {
            if (v.get<bool>()) run(n.children, out);
          } else if (v.is_array()) {
            for (const auto& item : v) {
              scopes.push_back(&item);
              run(n.children, out);
              scopes.pop_back();
            }
          } else {
            throw TemplateError(name, n.value, "template " + name + ": block '" + n.value +
                                                   "' needs a list or a boolean");
          }
          break;
        }
      }
    }
  }
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GenerationError("cannot read template file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const char* const kOptionalTemplates[] = {"module_path", "manifest_path"};

}  // namespace

Template Template::parse(std::string name, std::string_view source) {
  Template t;
  t.name_ = std::move(name);
  Parser parser{t.name_, source};
  t.nodes_ = std::make_shared<const std::vector<Node>>(parser.parse());
  return t;
}

std::string Template::render(const JsonValue& context) const {
  std::string out;
  Renderer r{name_, {&context}};
  r.run(*nodes_, out);
  return out;
}

TemplateSet TemplateSet::from_sources(const std::map<std::string, std::string>& files) {
  const auto& defaults = neutral_template_files();
  TemplateSet set;
  for (auto name : kRequiredTemplates) {
    std::string file = std::string(name) + ".tpl";
    auto it = files.find(file);
    if (it == files.end()) throw GenerationError("template set is missing " + file);
    set.templates_.emplace(std::string(name), Template::parse(file, it->second));
  }
  for (auto name : kOptionalTemplates) {
    std::string file = std::string(name) + ".tpl";
    auto it = files.find(file);
    const std::string& source = it != files.end() ? it->second : defaults.at(file);
    set.templates_.emplace(std::string(name), Template::parse(file, source));
  }
  auto spelling = files.find("type_spelling.json");
  const std::string& spelling_text =
      spelling != files.end() ? spelling->second : defaults.at("type_spelling.json");
  auto parsed = parse_json(spelling_text);
  if (!parsed || !parsed.value->is_object()) throw GenerationError("type_spelling.json must be a JSON object");
  set.spelling_ = *parsed.value;
  const JsonValue fallback = *parse_json(defaults.at("type_spelling.json")).value;
  for (const auto& [key, value] : fallback.items()) {
    if (!set.spelling_.contains(key)) set.spelling_[key] = value;
  }
  for (const auto& [key, value] : set.spelling_.items()) {
    if (!value.is_string()) throw GenerationError("type_spelling.json: '" + key + "' must be a string");
  }
  return set;
}

TemplateSet TemplateSet::load(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw GenerationError("template directory '" + dir.string() + "' does not exist");
  }
  std::map<std::string, std::string> files;
  for (auto name : kRequiredTemplates) {
    auto path = dir / (std::string(name) + ".tpl");
    if (!std::filesystem::exists(path)) throw GenerationError("template set is missing " + path.string());
    files[path.filename().string()] = read_file(path);
  }
  for (auto name : kOptionalTemplates) {
    auto path = dir / (std::string(name) + ".tpl");
    if (std::filesystem::exists(path)) files[path.filename().string()] = read_file(path);
  }
  if (auto path = dir / "type_spelling.json"; std::filesystem::exists(path)) {
    files["type_spelling.json"] = read_file(path);
  }
  return from_sources(files);
}

TemplateSet TemplateSet::neutral() { return from_sources(neutral_template_files()); }

const Template& TemplateSet::get(std::string_view name) const {
  auto it = templates_.find(name);
  if (it == templates_.end()) throw GenerationError("no template named " + std::string(name));
  return it->second;
}

const std::map<std::string, std::string>& neutral_template_files() {
  static const std::map<std::string, std::string> files{
      {"manifest.tpl", R"(package {{package}}
version {{version}}
digest sha256:{{digest}}
functions {{function_count}}
types {{type_count}}
{{#modules}}

module {{module}} {{file}}
{{#functions}}
  fn {{name}} {{method}} {{path}}
{{/functions}}
{{#types}}
  type {{name}}
{{/types}}
{{/modules}}
)"},
      {"module_header.tpl", R"(# package {{package}} {{version}}
# module {{module}}
)"},
      {"type.tpl", R"(
type {{name}} {
{{#fields}}
  {{name}}{{optional}}: {{type}} @json {{wire_literal}}
{{/fields}}
}
)"},
      {"function.tpl", R"(
{{doc_comment}}fn {{name}} -> {{response_type}}
  http {{method}} {{path}}
{{#params}}
  param {{name}}{{optional}}: {{type}} @{{convention}} {{wire_literal}}
{{/params}}
{{#request}}
  body {{name}}: {{type}}
{{/request}}
)"},
      {"doc_comment.tpl", R"({{#summary_lines}}
/// {{line}}
{{/summary_lines}}
/// see {{doc_url}}
/// record {{record_id}}
)"},
      {"module_path.tpl", "{{module}}.api\n"},
      {"manifest_path.tpl", "manifest.txt\n"},
      {"type_spelling.json", R"({
  "null": "null",
  "bool": "bool",
  "int": "int",
  "float": "float",
  "string": "string",
  "any": "any",
  "object": "{}",
  "array": "[{{element}}]",
  "union_separator": " | "
}
)"},
  };
  return files;
}

}  // namespace apibind
