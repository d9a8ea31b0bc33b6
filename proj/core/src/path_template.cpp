// SPDX-License-Identifier: Apache-2.0
#include "apibind/path_template.hpp"

#include <algorithm>
#include <set>

#include "apibind/text.hpp"

namespace apibind {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

Issue syntax_error(std::size_t offset, std::string what) {
  return make_issue(IssueCode::E_PATH_SYNTAX, Stage::Parse,
                    what + " at offset " + std::to_string(offset), "path");
}

bool valid_variable_name(std::string_view name) {
  return !name.empty() && std::none_of(name.begin(), name.end(), [](char c) {
    return c == '{' || c == '}' || c == '/' || is_space(c);
  });
}

bool looks_like_foreign_variable(std::string_view seg) {
  if (seg.size() >= 3 && seg.front() == '<' && seg.back() == '>') return true;
  return seg.size() >= 2 && seg.front() == '$';
}

}  // namespace

std::vector<std::string> PathTemplate::variables() const {
  std::vector<std::string> out;
  for (const auto& seg : segments) {
    if (const auto* v = std::get_if<VariableSegment>(&seg)) out.push_back(v->name);
  }
  return out;
}

bool PathTemplate::has_variable(std::string_view name) const {
  return std::any_of(segments.begin(), segments.end(), [&](const Segment& seg) {
    const auto* v = std::get_if<VariableSegment>(&seg);
    return v && v->name == name;
  });
}

PathParseResult parse_path_template(std::string_view raw) {
  PathParseResult result;
  auto& issues = result.issues;
  std::size_t base = static_cast<std::size_t>(text::trim(raw).data() - raw.data());
  std::string_view path = text::trim(raw);

  if (path.empty()) {
    issues.push_back(syntax_error(0, "empty path"));
    return result;
  }
  if (auto pos = path.find("://"); pos != std::string_view::npos) {
    issues.push_back(syntax_error(base + pos, "absolute URL instead of a path"));
    return result;
  }
  if (auto pos = path.find_first_of("?#"); pos != std::string_view::npos) {
    issues.push_back(syntax_error(base + pos, "query string or fragment in path"));
  }
  if (auto it = std::find_if(path.begin(), path.end(), is_space); it != path.end()) {
    issues.push_back(syntax_error(base + static_cast<std::size_t>(it - path.begin()),
                                  "whitespace in path"));
  }

  PathTemplate tpl;
  std::set<std::string, std::less<>> seen;
  std::size_t start = 0;
  while (start <= path.size()) {
    auto end = path.find('/', start);
    if (end == std::string_view::npos) end = path.size();
    std::string_view seg = path.substr(start, end - start);
    std::size_t offset = base + start;

    if (!seg.empty()) {
      std::optional<std::string> var;
      auto open = seg.find('{');
      auto close = seg.find('}');
      if (open != std::string_view::npos || close != std::string_view::npos) {
        if (open == std::string_view::npos) {
          issues.push_back(syntax_error(offset + close, "unbalanced '}'"));
        } else if (close == std::string_view::npos || close < open) {
          issues.push_back(syntax_error(offset + open, "unbalanced '{'"));
        } else if (open != 0 || close != seg.size() - 1) {
          issues.push_back(syntax_error(offset, "variable must span a whole segment"));
        } else {
          std::string_view name = seg.substr(1, seg.size() - 2);
          if (name.empty()) {
            issues.push_back(syntax_error(offset, "empty variable name"));
          } else if (!valid_variable_name(name)) {
            issues.push_back(syntax_error(offset + 1, "invalid variable name"));
          } else {
            var = std::string(name);
          }
        }
      } else if (seg.front() == ':') {
        std::string_view name = seg.substr(1);
        if (name.empty()) {
          issues.push_back(syntax_error(offset, "empty variable name"));
        } else {
          var = std::string(name);
        }
      } else {
        if (looks_like_foreign_variable(seg)) {
          issues.push_back(make_issue(IssueCode::W_PATH_SUSPECT, Stage::Parse,
                                      "segment '" + std::string(seg) +
                                          "' looks like a variable in an unsupported syntax",
                                      "path"));
        }
        tpl.segments.emplace_back(LiteralSegment{std::string(seg)});
      }

      if (var) {
        if (!seen.insert(*var).second) {
          issues.push_back(syntax_error(offset, "duplicate variable '" + *var + "'"));
        }
        tpl.segments.emplace_back(VariableSegment{std::move(*var)});
      }
    }
    start = end + 1;
  }

  bool failed = std::any_of(issues.begin(), issues.end(),
                            [](const Issue& i) { return i.is_error(); });
  if (!failed) result.value = std::move(tpl);
  return result;
}

std::string render_path_template(const PathTemplate& path) {
  if (path.segments.empty()) return "/";
  std::string out;
  for (const auto& seg : path.segments) {
    out += '/';
    if (const auto* lit = std::get_if<LiteralSegment>(&seg)) {
      out += lit->text;
    } else {
      out += '{';
      out += std::get<VariableSegment>(seg).name;
      out += '}';
    }
  }
  return out;
}

std::optional<std::string> canonical_path(std::string_view raw) {
  auto parsed = parse_path_template(raw);
  if (!parsed.value) return std::nullopt;
  return render_path_template(*parsed.value);
}

bool is_well_formed(const PathTemplate& path) {
  std::set<std::string, std::less<>> seen;
  for (const auto& seg : path.segments) {
    if (const auto* lit = std::get_if<LiteralSegment>(&seg)) {
      const auto& t = lit->text;
      if (t.empty() || t.front() == ':') return false;
      if (t.find_first_of("/{}?# \t\r\n") != std::string::npos) return false;
    } else {
      const auto& name = std::get<VariableSegment>(seg).name;
      if (!valid_variable_name(name) || name.find_first_of("?#") != std::string::npos) return false;
      if (!seen.insert(name).second) return false;
    }
  }
  return true;
}

}  // namespace apibind
