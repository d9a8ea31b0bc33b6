// SPDX-License-Identifier: Apache-2.0
#include "apibind/validate.hpp"

#include <algorithm>
#include <set>

namespace apibind {

namespace {

Issue check_issue(IssueCode code, std::string message, std::optional<std::string> field = std::nullopt) {
  return make_issue(code, Stage::Validate, std::move(message), std::move(field));
}

bool is_body(Convention c) { return c == Convention::BodyJson || c == Convention::BodyText; }

}  // namespace

ApiCallRecord cross_validate(ApiCallRecord rec, CheckSet checks) {
  const ParsedArtifacts empty;
  const ParsedArtifacts& art = rec.parsed ? *rec.parsed : empty;
  const std::vector<Parameter> no_params;
  const std::vector<Parameter>& params = art.params ? *art.params : no_params;
  std::vector<Issue> found;

  if (art.path && checks.contains(Check::PathVariablesDeclared)) {
    for (const auto& var : art.path->variables()) {
      bool declared = std::any_of(params.begin(), params.end(), [&](const Parameter& p) {
        return p.convention == Convention::Path && p.name == var;
      });
      if (!declared) {
        found.push_back(check_issue(IssueCode::E_PATHVAR_UNDECLARED,
                                    "path variable '" + var + "' has no Path parameter", var));
      }
    }
  }

  if (art.path && checks.contains(Check::PathParametersUsed)) {
    for (const auto& p : params) {
      if (p.convention == Convention::Path && !art.path->has_variable(p.name)) {
        found.push_back(check_issue(IssueCode::E_PARAM_PATH_UNUSED,
                                    "Path parameter '" + p.name + "' does not occur in the path", p.name));
      }
    }
  }

  if (checks.contains(Check::UniqueParameterNames)) {
    std::set<std::pair<Convention, std::string>> seen;
    for (const auto& p : params) {
      if (!seen.emplace(p.convention, p.name).second) {
        found.push_back(check_issue(IssueCode::E_DUP_PARAM,
                                    "parameter '" + p.name + "' repeated as " + std::string(to_string(p.convention)),
                                    p.name));
      }
    }
  }

  auto declared = rec.method();
  if (checks.contains(Check::CurlMethodMatches) && art.curl && declared && art.curl->method != *declared) {
    found.push_back(check_issue(IssueCode::E_METHOD_MISMATCH,
                                "curl example uses " + std::string(to_string(art.curl->method)) +
                                    " but the call is documented as " + std::string(to_string(*declared)),
                                "http_method"));
  }

  if (checks.contains(Check::NoBodyOnGet) && declared &&
      (*declared == HttpMethod::GET || *declared == HttpMethod::HEAD)) {
    bool body = (art.curl && art.curl->body) || rec.request_example.has_value() ||
                std::any_of(params.begin(), params.end(), [](const Parameter& p) { return is_body(p.convention); });
    if (body) {
      found.push_back(check_issue(IssueCode::W_BODY_ON_GET,
                                  "request body documented for " + std::string(to_string(*declared))));
    }
  }

  if (checks.contains(Check::HasPayloadExample) && !rec.request_example && !rec.response_example) {
    found.push_back(check_issue(IssueCode::W_NO_EXAMPLE, "no request or response example", "examples"));
  }

  rec.add_issues(found);
  return rec;
}

bool passes_gate(const ApiCallRecord& rec, bool strict) {
  return strict ? rec.issues.empty() : !rec.has_errors();
}

Routed route(std::vector<ApiCallRecord> records, bool strict) {
  Routed out;
  for (auto& r : records) {
    (passes_gate(r, strict) ? out.valid : out.rejected).push_back(std::move(r));
  }
  return out;
}

}  // namespace apibind
