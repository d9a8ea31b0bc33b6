// SPDX-License-Identifier: Apache-2.0
#include "apibind/ir.hpp"

#include <openssl/sha.h>

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "apibind/infer.hpp"
#include "apibind/ingest.hpp"
#include "apibind/parse.hpp"
#include "apibind/text.hpp"

namespace apibind {

namespace {

void append_word(std::string& out, std::string_view text) {
  bool pending = !out.empty();
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) {
      if (pending) out += '_';
      pending = false;
      out += static_cast<char>(std::tolower(u));
    } else {
      pending = !out.empty();
    }
  }
}

std::size_t convention_rank(Convention c) {
  for (std::size_t i = 0; i < std::size(kAllConventions); ++i) {
    if (kAllConventions[i] == c) return i;
  }
  return std::size(kAllConventions);
}

}  // namespace

std::string raw_function_name(HttpMethod method, const PathTemplate& path) {
  std::string out;
  append_word(out, to_string(method));
  for (const auto& seg : path.segments) {
    const auto& text = std::holds_alternative<LiteralSegment>(seg) ? std::get<LiteralSegment>(seg).text
                                                                    : std::get<VariableSegment>(seg).name;
    append_word(out, text);
  }
  return out;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned char b : digest) {
    out += kHex[b >> 4];
    out += kHex[b & 0xF];
  }
  return out;
}

BindingIr build_reference(const std::vector<ApiCallRecord>& valid_records, std::string package_name,
                          BuildReport* report) {
  BindingIr ir;
  DeclarationRegistry registry;
  std::set<std::string> taken;
  std::vector<ApiCallRecord> enriched;
  enriched.reserve(valid_records.size());

  auto note = [&](std::size_t index, Issue issue) {
    if (report) report->notes.push_back(BuildNote{index, std::move(issue)});
  };
  auto lift = [&](std::size_t index, const InferredType& t, const std::string& name, DeclOrigin origin,
                  const RecordId& id) {
    auto lifted = registry.lift(t, name, origin, id);
    for (auto& issue : lifted.issues) note(index, std::move(issue));
    return lifted.type;
  };

  for (std::size_t i = 0; i < valid_records.size(); ++i) {
    ApiCallRecord rec = infer_record(parse_record(valid_records[i]));
    auto method = rec.method();
    if (!method || !rec.parsed || !rec.parsed->path) {
      throw std::invalid_argument("record " + rec.id.display() + " cannot be bound: method or path unusable");
    }

    BindingFunction fn;
    fn.method = *method;
    fn.path = *rec.parsed->path;
    std::string base = raw_function_name(fn.method, fn.path);
    fn.raw_name = base;
    for (int n = 2; taken.contains(fn.raw_name); ++n) fn.raw_name = base + "_" + std::to_string(n);
    if (fn.raw_name != base) {
      note(i, make_issue(IssueCode::W_MERGE_CONFLICT, Stage::Generate,
                         "function name " + base + " already used; renamed to " + fn.raw_name));
    }
    taken.insert(fn.raw_name);

    std::string type_base = text::upper_camel(fn.raw_name);
    const auto& params = rec.parsed->params ? *rec.parsed->params : std::vector<Parameter>{};
    for (std::size_t p = 0; p < params.size(); ++p) {
      std::string name = type_base + "Param" + text::upper_camel(params[p].name);
      fn.params.push_back(BoundParameter{
          params[p], lift(i, rec.inferred->param_types.at(p), name, DeclOrigin::Request, rec.id)});
    }
    std::stable_sort(fn.params.begin(), fn.params.end(), [](const BoundParameter& a, const BoundParameter& b) {
      return convention_rank(a.param.convention) < convention_rank(b.param.convention);
    });
    if (rec.inferred->request_type) {
      fn.request_type = lift(i, *rec.inferred->request_type, type_base + "Request", DeclOrigin::Request, rec.id);
    }
    fn.response_type = lift(i, rec.inferred->response_type, type_base + "Response", DeclOrigin::Response, rec.id);
    fn.doc_url = rec.source_url;
    fn.doc_summary = rec.description;
    fn.record_id = rec.id;
    fn.group = rec.group.value_or(std::string(kDefaultGroup));

    ir.groups[fn.group].push_back(fn.raw_name);
    ir.functions.push_back(std::move(fn));
    enriched.push_back(std::move(rec));
  }

  ir.decls = registry.decls();
  ir.meta.name = std::move(package_name);
  ir.meta.digest = sha256_hex(source_csv(enriched));
  ir.meta.version = ir.meta.digest.substr(0, 12);
  return ir;
}

}  // namespace apibind
