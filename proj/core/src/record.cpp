// SPDX-License-Identifier: Apache-2.0
#include "apibind/record.hpp"

#include <algorithm>
#include <stdexcept>

#include "apibind/json.hpp"

namespace apibind {

RecordId::RecordId(std::string atom) : RecordId(std::vector<std::string>{std::move(atom)}) {}

RecordId::RecordId(std::vector<std::string> atoms) {
  for (auto& a : atoms) {
    if (std::find(atoms_.begin(), atoms_.end(), a) == atoms_.end()) atoms_.push_back(std::move(a));
  }
  if (atoms_.empty()) throw std::invalid_argument("RecordId needs at least one atom");
}

RecordId RecordId::merged_with(const RecordId& other) const {
  std::vector<std::string> all = atoms_;
  all.insert(all.end(), other.atoms_.begin(), other.atoms_.end());
  return RecordId(std::move(all));
}

std::string RecordId::to_cell() const {
  if (atoms_.size() == 1 && !atoms_.front().starts_with('[')) return atoms_.front();
  return JsonValue(atoms_).dump();
}

RecordId RecordId::from_cell(std::string_view cell) {
  if (cell.starts_with('[')) {
    auto parsed = parse_json(cell);
    if (parsed && parsed.value->is_array() && !parsed.value->empty() &&
        std::all_of(parsed.value->begin(), parsed.value->end(),
                    [](const JsonValue& v) { return v.is_string(); })) {
      return RecordId(parsed.value->get<std::vector<std::string>>());
    }
  }
  return RecordId(std::string(cell));
}

std::string RecordId::display() const {
  std::string out;
  for (const auto& a : atoms_) {
    if (!out.empty()) out += '+';
    out += a;
  }
  return out;
}

void ApiCallRecord::add_issue(Issue issue) {
  if (std::find(issues.begin(), issues.end(), issue) == issues.end()) issues.push_back(std::move(issue));
}

void ApiCallRecord::add_issues(const std::vector<Issue>& more) {
  for (const auto& i : more) add_issue(i);
}

bool ApiCallRecord::has_errors() const {
  return std::any_of(issues.begin(), issues.end(), [](const Issue& i) { return i.is_error(); });
}

bool ApiCallRecord::has_issue(IssueCode code) const {
  return std::any_of(issues.begin(), issues.end(), [&](const Issue& i) { return i.code == code; });
}

bool same_fields(const ApiCallRecord& a, const ApiCallRecord& b) {
  return a.id == b.id && a.source_url == b.source_url && a.http_method == b.http_method &&
         a.raw_path == b.raw_path && a.raw_curl == b.raw_curl && a.raw_parameters == b.raw_parameters &&
         a.request_example == b.request_example && a.response_example == b.response_example &&
         a.description == b.description && a.group == b.group && a.issues == b.issues;
}

}  // namespace apibind
