// SPDX-License-Identifier: Apache-2.0
#include "apibind/dashboard.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace apibind {

namespace {

DashboardReport from_counts(std::size_t total, std::size_t valid, const std::map<IssueCode, std::size_t>& codes,
                            const std::map<Stage, std::size_t>& stages) {
  DashboardReport r;
  r.total_records = total;
  r.valid_records = valid;
  if (total > 0) r.percent_valid = 100.0 * static_cast<double>(valid) / static_cast<double>(total);
  for (const auto& [code, count] : codes) {
    if (count == 0) continue;
    r.issue_frequency.push_back(
        IssueFrequency{code, count, 100.0 * static_cast<double>(count) / static_cast<double>(total)});
  }
  std::sort(r.issue_frequency.begin(), r.issue_frequency.end(), [](const IssueFrequency& a, const IssueFrequency& b) {
    if (a.count != b.count) return a.count > b.count;
    return to_string(a.code) < to_string(b.code);
  });
  for (Stage s : kAllStages) r.per_stage_counts[s] = 0;
  for (const auto& [stage, count] : stages) r.per_stage_counts[stage] += count;
  return r;
}

std::string format_percent(std::optional<double> value) {
  if (!value) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", round_percent(*value));
  return buf;
}

}  // namespace

double round_percent(double value) { return std::round(value * 10.0) / 10.0; }

DashboardReport dashboard(const std::vector<ApiCallRecord>& records) {
  std::size_t valid = 0;
  std::map<IssueCode, std::size_t> codes;
  std::map<Stage, std::size_t> stages;
  for (const auto& rec : records) {
    if (!rec.has_errors()) ++valid;
    std::set<IssueCode> seen;
    for (const auto& issue : rec.issues) {
      ++stages[issue.stage];
      if (seen.insert(issue.code).second) ++codes[issue.code];
    }
  }
  return from_counts(records.size(), valid, codes, stages);
}

DashboardReport merge_dashboards(const DashboardReport& a, const DashboardReport& b) {
  std::map<IssueCode, std::size_t> codes;
  std::map<Stage, std::size_t> stages;
  for (const auto* r : {&a, &b}) {
    for (const auto& f : r->issue_frequency) codes[f.code] += f.count;
    for (const auto& [stage, count] : r->per_stage_counts) stages[stage] += count;
  }
  return from_counts(a.total_records + b.total_records, a.valid_records + b.valid_records, codes, stages);
}

std::string dashboard_text(const DashboardReport& report) {
  std::string out;
  out += "total records   " + std::to_string(report.total_records) + "\n";
  out += "valid records   " + std::to_string(report.valid_records) + "\n";
  out += "percent valid   " + format_percent(report.percent_valid) + "\n";

  std::size_t code_width = 4;
  for (const auto& f : report.issue_frequency) code_width = std::max(code_width, to_string(f.code).size());
  auto row = [&](std::string_view a, std::string_view b, std::string_view c) {
    std::string line(a);
    line.append(code_width + 2 - a.size(), ' ');
    line.append(8 - std::min<std::size_t>(8, b.size()), ' ');
    line += b;
    line.append(10 - std::min<std::size_t>(10, c.size()), ' ');
    line += c;
    return line + "\n";
  };
  out += "\n";
  out += row("code", "records", "percent");
  for (const auto& f : report.issue_frequency) {
    out += row(to_string(f.code), std::to_string(f.count), format_percent(f.percent));
  }
  out += "\n";
  out += "stage       issues\n";
  for (const auto& [stage, count] : report.per_stage_counts) {
    std::string name(to_string(stage));
    std::string n = std::to_string(count);
    name.append(18 - name.size() - std::min<std::size_t>(n.size(), 8), ' ');
    out += name + n + "\n";
  }
  return out;
}

JsonValue dashboard_json(const DashboardReport& report) {
  JsonValue doc = JsonValue::object();
  doc["total_records"] = report.total_records;
  doc["valid_records"] = report.valid_records;
  doc["percent_valid"] = report.percent_valid ? JsonValue(round_percent(*report.percent_valid)) : JsonValue(nullptr);
  JsonValue freq = JsonValue::array();
  for (const auto& f : report.issue_frequency) {
    JsonValue entry = JsonValue::object();
    entry["code"] = to_string(f.code);
    entry["count"] = f.count;
    entry["percent"] = round_percent(f.percent);
    freq.push_back(std::move(entry));
  }
  doc["issue_frequency"] = std::move(freq);
  JsonValue stages = JsonValue::object();
  for (const auto& [stage, count] : report.per_stage_counts) stages[std::string(to_string(stage))] = count;
  doc["per_stage_counts"] = std::move(stages);
  return doc;
}

}  // namespace apibind
