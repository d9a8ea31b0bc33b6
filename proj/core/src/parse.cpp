// SPDX-License-Identifier: Apache-2.0
#include "apibind/parse.hpp"

#include <algorithm>

namespace apibind {

ApiCallRecord parse_record(ApiCallRecord rec) {
  if (rec.parsed) return rec;
  ParsedArtifacts artifacts;

  auto path = parse_path_template(rec.raw_path);
  rec.add_issues(path.issues);
  artifacts.path = std::move(path.value);

  if (rec.raw_curl) {
    auto curl = parse_curl(*rec.raw_curl);
    rec.add_issues(curl.issues);
    artifacts.curl = std::move(curl.value);
  } else {
    rec.add_issue(make_issue(IssueCode::W_NO_EXAMPLE, Stage::Parse, "no curl usage example", "curl_example"));
  }

  if (rec.raw_parameters) {
    // Ingest already tagged cells that are not JSON at all.
    bool tagged = std::any_of(rec.issues.begin(), rec.issues.end(), [](const Issue& i) {
      return i.code == IssueCode::E_JSON_CELL && i.stage == Stage::Ingest && i.field == "parameters";
    });
    if (!tagged) {
      auto params = parse_parameter_table(*rec.raw_parameters, rec.method());
      rec.add_issues(params.issues);
      artifacts.params = std::move(params.value);
    }
  }

  rec.parsed = std::move(artifacts);
  return rec;
}

}  // namespace apibind
