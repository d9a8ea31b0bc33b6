// SPDX-License-Identifier: Apache-2.0
#include "apibind/infer.hpp"

#include "apibind/text.hpp"

namespace apibind {

namespace {

int kind_class(TypeKind k) {
  return k == TypeKind::Float ? static_cast<int>(TypeKind::Int) : static_cast<int>(k);
}

Issue infer_issue(IssueCode code, std::string message, std::string field) {
  return make_issue(code, Stage::Infer, std::move(message), std::move(field));
}

std::optional<InferredType> example_type(const std::optional<std::string>& cell, const char* column,
                                         std::vector<Issue>& issues) {
  if (!cell) return std::nullopt;
  auto parsed = parse_json(*cell);
  if (!parsed) return std::nullopt;  // already tagged E_JSON_CELL at ingest
  auto finalized = finalize_type(infer_value_type(*parsed.value));
  if (finalized.replaced_empty_array) {
    issues.push_back(infer_issue(IssueCode::W_EMPTY_ARRAY, std::string(column) + " contains an empty array",
                                 column));
  }
  return finalized.type;
}

}  // namespace

std::optional<InferredType> declared_type_of(std::string_view declared) {
  std::string t = text::to_lower(text::trim(declared));
  if (t == "string") return InferredType::string();
  if (t == "integer" || t == "int") return InferredType::integer();
  if (t == "number") return InferredType::floating();
  if (t == "boolean") return InferredType::boolean();
  if (t == "array") return InferredType::array(InferredType::any());
  if (t == "object") return InferredType::object({});
  return std::nullopt;
}

ParameterType type_of_parameter(const Parameter& p) {
  ParameterType out;
  std::optional<InferredType> declared;
  if (p.declared_type) declared = declared_type_of(*p.declared_type);

  if (p.example) {
    auto finalized = finalize_type(infer_value_type(*p.example));
    out.type = std::move(finalized.type);
    if (finalized.replaced_empty_array) {
      out.issues.push_back(infer_issue(IssueCode::W_EMPTY_ARRAY, "example of " + p.name + " is an empty array", p.name));
    }
    if (declared && kind_class(declared->kind()) != kind_class(out.type.kind())) {
      out.issues.push_back(infer_issue(IssueCode::W_PARAM_TYPE_CONFLICT,
                                       "declared type '" + *p.declared_type + "' but example is " +
                                           to_string(out.type) + "; example wins",
                                       p.name));
    }
    return out;
  }
  if (declared) {
    out.type = *declared;
    if (declared->is(TypeKind::Object)) {
      out.issues.push_back(infer_issue(IssueCode::W_PARAM_TYPE_OPAQUE,
                                       p.name + " is declared as an object without structure", p.name));
    }
    return out;
  }
  out.type = InferredType::string();
  std::string why = p.declared_type ? "unknown type '" + *p.declared_type + "'" : "no type or example";
  out.issues.push_back(infer_issue(IssueCode::W_PARAM_TYPE_DEFAULTED, why + "; defaulted to string", p.name));
  return out;
}

ApiCallRecord infer_record(ApiCallRecord rec) {
  if (rec.inferred) return rec;
  InferredArtifacts artifacts;
  std::vector<Issue> issues;

  if (rec.parsed && rec.parsed->params) {
    for (const auto& p : *rec.parsed->params) {
      auto pt = type_of_parameter(p);
      issues.insert(issues.end(), pt.issues.begin(), pt.issues.end());
      artifacts.param_types.push_back(std::move(pt.type));
    }
  }
  artifacts.request_type = example_type(rec.request_example, "request_example", issues);
  if (auto response = example_type(rec.response_example, "response_example", issues)) {
    artifacts.response_type = std::move(*response);
  } else {
    artifacts.response_type = InferredType::any();
    if (!rec.response_example) {
      issues.push_back(infer_issue(IssueCode::W_NO_EXAMPLE, "no response example; result typed as any",
                                   "response_example"));
    }
  }
  rec.add_issues(issues);
  rec.inferred = std::move(artifacts);
  return rec;
}

}  // namespace apibind
