// SPDX-License-Identifier: Apache-2.0
#include "apibind/render.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "apibind/text.hpp"

namespace apibind {

namespace {

JsonValue lines_of(const std::optional<std::string>& s) {
  JsonValue out = JsonValue::array();
  if (!s) return out;
  for (auto line : text::split(*s, '\n')) {
    line = text::trim(line);
    out.push_back(JsonValue{{"line", std::string(line)}});
  }
  return out;
}

bool param_required(const Parameter& p) {
  if (p.convention == Convention::Path) return true;
  return p.required.value_or(false);
}

struct Context {
  const NamedIr& ir;
  const TemplateSet& templates;
  Template array_spelling = Template::parse("type_spelling.json:array", templates.type_spelling()["array"].get<std::string>());

  std::string spell(const InferredType& t) const {
    const auto& s = templates.type_spelling();
    auto key = [&](const char* k) { return s[k].get<std::string>(); };
    switch (t.kind()) {
      case TypeKind::Bottom:
      case TypeKind::Any: return key("any");
      case TypeKind::Null: return key("null");
      case TypeKind::Bool: return key("bool");
      case TypeKind::Int: return key("int");
      case TypeKind::Float: return key("float");
      case TypeKind::String: return key("string");
      case TypeKind::Object: return key("object");
      case TypeKind::Ref: return t.ref_name();
      case TypeKind::Array: return array_spelling.render(JsonValue{{"element", spell(t.element())}});
      case TypeKind::Union: {
        std::string out;
        for (const auto& b : t.branches()) {
          if (!out.empty()) out += key("union_separator");
          out += spell(b);
        }
        return out;
      }
    }
    return key("any");
  }

  std::string render_path(std::string_view which, const JsonValue& ctx) const {
    std::string p(text::trim(templates.get(which).render(ctx)));
    std::filesystem::path path(p);
    bool ok = !p.empty() && path.is_relative() &&
              std::none_of(path.begin(), path.end(), [](const auto& part) { return part == ".."; });
    if (!ok) throw GenerationError(std::string(which) + ".tpl produced an unusable path '" + p + "'");
    return path.lexically_normal().generic_string();
  }

  JsonValue param_json(const NamedParam& p) const {
    bool required = param_required(p.param);
    return JsonValue{{"name", p.identifier},
                     {"wire_name", p.param.name},
                     {"wire_literal", JsonValue(p.param.name).dump()},
                     {"convention", std::string(to_string(p.param.convention))},
                     {"type", spell(p.type)},
                     {"required", required},
                     {"optional", required ? "" : "?"},
                     {"description_lines", lines_of(p.param.description)}};
  }

  JsonValue function_json(const NamedFunction& f, const NamedModule& m) const {
    const auto& src = *f.source;
    JsonValue params = JsonValue::array();
    for (const auto& p : f.params) params.push_back(param_json(p));
    JsonValue request = JsonValue::array();
    if (f.request) request.push_back(JsonValue{{"name", f.request->identifier}, {"type", spell(f.request->type)}});
    JsonValue ctx{{"name", f.identifier},
                  {"raw_name", src.raw_name},
                  {"method", std::string(to_string(src.method))},
                  {"path", render_path_template(src.path)},
                  {"doc_url", src.doc_url},
                  {"record_id", src.record_id.display()},
                  {"module", m.identifier},
                  {"group", m.group},
                  {"summary_lines", lines_of(src.doc_summary)},
                  {"params", std::move(params)},
                  {"request", std::move(request)},
                  {"response_type", spell(f.response_type)}};
    ctx["doc_comment"] = templates.get("doc_comment").render(ctx);
    return ctx;
  }

  JsonValue type_json(const NamedDecl& d, const NamedModule& m) const {
    JsonValue fields = JsonValue::array();
    for (const auto& f : d.fields) {
      fields.push_back(JsonValue{{"name", f.identifier},
                                 {"wire_name", f.wire_name},
                                 {"wire_literal", JsonValue(f.wire_name).dump()},
                                 {"type", spell(f.type)},
                                 {"required", f.required},
                                 {"optional", f.required ? "" : "?"}});
    }
    return JsonValue{{"name", d.identifier},
                     {"raw_name", d.source->name},
                     {"origin", std::string(to_string(d.source->origin))},
                     {"record_id", d.source->source_record.display()},
                     {"module", m.identifier},
                     {"fields", std::move(fields)}};
  }

  JsonValue package_json() const {
    return JsonValue{{"package", ir.meta.name},
                     {"version", ir.meta.version},
                     {"digest", ir.meta.digest},
                     {"function_count", ir.functions.size()},
                     {"type_count", ir.decls.size()}};
  }
};

}  // namespace

std::string spell_type(const InferredType& t, const TemplateSet& templates) {
  NamedIr empty;
  Context ctx{empty, templates};
  return ctx.spell(t);
}

std::vector<RenderedFile> render_files(const NamedIr& ir, const TemplateSet& templates) {
  Context c{ir, templates};
  std::vector<RenderedFile> files;
  std::set<std::string> paths;
  auto add = [&](std::string path, std::string content) {
    if (!paths.insert(path).second) throw GenerationError("two outputs map to the same path '" + path + "'");
    files.push_back(RenderedFile{std::move(path), std::move(content)});
  };

  JsonValue package = c.package_json();
  JsonValue modules = JsonValue::array();
  for (const auto& m : ir.modules) {
    JsonValue mctx = package;
    mctx["module"] = m.identifier;
    mctx["group"] = m.group;
    std::string file = c.render_path("module_path", mctx);
    mctx["file"] = file;

    std::string content = templates.get("module_header").render(mctx);
    JsonValue types = JsonValue::array();
    for (std::size_t i : m.decls) {
      JsonValue t = c.type_json(ir.decls[i], m);
      content += templates.get("type").render(t);
      types.push_back(std::move(t));
    }
    JsonValue functions = JsonValue::array();
    for (std::size_t i : m.functions) {
      const auto& f = ir.functions[i];
      JsonValue fctx = c.function_json(f, m);
      std::string stub = templates.get("function").render(fctx);
      if (stub.find(f.source->doc_url) == std::string::npos) {
        throw GenerationError("function.tpl output for " + f.identifier + " does not contain its doc URL");
      }
      content += stub;
      functions.push_back(std::move(fctx));
    }
    mctx["types"] = std::move(types);
    mctx["functions"] = std::move(functions);
    modules.push_back(std::move(mctx));
    add(file, std::move(content));
  }
  package["modules"] = std::move(modules);
  add(c.render_path("manifest_path", package), templates.get("manifest").render(package));

  std::sort(files.begin(), files.end(), [](const RenderedFile& a, const RenderedFile& b) { return a.path < b.path; });
  return files;
}

std::vector<std::filesystem::path> render_package(const NamedIr& ir, const TemplateSet& templates,
                                                  const std::filesystem::path& out_dir) {
  auto files = render_files(ir, templates);
  auto manifest_path = Context{ir, templates}.render_path("manifest_path", Context{ir, templates}.package_json());
  std::stable_partition(files.begin(), files.end(),
                        [&](const RenderedFile& f) { return f.path.generic_string() != manifest_path; });
  std::vector<std::filesystem::path> written;
  for (const auto& f : files) {
    auto target = out_dir / f.path;
    std::error_code ec;
    std::filesystem::create_directories(target.parent_path(), ec);
    if (ec) throw GenerationError("cannot create '" + target.parent_path().string() + "': " + ec.message());
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    out << f.content;
    if (!out) throw GenerationError("cannot write '" + target.string() + "'");
    written.push_back(f.path);
  }
  std::sort(written.begin(), written.end());
  return written;
}

}  // namespace apibind
