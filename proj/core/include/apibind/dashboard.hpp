// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apibind/issue.hpp"
#include "apibind/json.hpp"
#include "apibind/record.hpp"

namespace apibind {

struct IssueFrequency {
  IssueCode code;
  std::size_t count = 0;  // records carrying the code at least once
  double percent = 0.0;   // of total_records
  friend bool operator==(const IssueFrequency&, const IssueFrequency&) = default;
};

/// Summary of a corpus. Only the counts are primary; percentages and the
/// ordering of issue_frequency are recomputed from them.
struct DashboardReport {
  std::size_t total_records = 0;
  std::size_t valid_records = 0;  // records without Error issues
  std::optional<double> percent_valid;
  std::vector<IssueFrequency> issue_frequency;  // count descending, then code name
  std::map<Stage, std::size_t> per_stage_counts;  // issues, every stage present

  friend bool operator==(const DashboardReport&, const DashboardReport&) = default;
};

DashboardReport dashboard(const std::vector<ApiCallRecord>& records);

/// For reports over disjoint record sets, equals the dashboard of their union.
DashboardReport merge_dashboards(const DashboardReport& a, const DashboardReport& b);

/// Percentages in both renderings use one decimal place.
double round_percent(double value);
std::string dashboard_text(const DashboardReport& report);
JsonValue dashboard_json(const DashboardReport& report);

}  // namespace apibind
