// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include "apibind/dashboard.hpp"
#include "apibind/record.hpp"

namespace apibind {

struct DashboardFormats {
  bool text = true;
  bool json = true;
};

struct PipelineConfig {
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path out_dir = "out";
  std::optional<std::filesystem::path> rejects_path;  // defaults to <out_dir>/rejects.csv
  bool merge = false;
  bool strict = false;  // warnings also reject at the gate
  std::optional<std::filesystem::path> templates_dir;      // built-in neutral set when absent
  std::optional<std::filesystem::path> identifier_policy;  // built-in defaults when absent
  DashboardFormats dashboard_formats;
};

enum ExitStatus : int {
  kExitOk = 0,
  kExitFailure = 1,  // corpus-level, template or I/O failure, or nothing to generate
  kExitUsage = 2,    // inconsistent configuration
};

inline constexpr const char* kStageFile = "stage.csv";
inline constexpr const char* kAcceptedFile = "accepted.csv";
inline constexpr const char* kRejectsFile = "rejects.csv";
inline constexpr const char* kDashboardText = "dashboard.txt";
inline constexpr const char* kDashboardJson = "dashboard.json";
inline constexpr const char* kPackageDir = "package";

/// Load, optionally merge, then parse, infer and cross-validate every record.
/// Records come back in input order; package name is the first input's stem.
std::vector<ApiCallRecord> analyze_corpus(const PipelineConfig& config);

/// Writes <out_dir>/stage.csv, the rejects CSV and the dashboard files.
int cmd_analyze(const PipelineConfig& config, std::ostream& out, std::ostream& err);

/// Analyzes, routes, and renders accepted records into <out_dir>/package
/// (replacing a previous package there). Writes accepted.csv, the rejects CSV
/// and the dashboard files alongside.
int cmd_generate(const PipelineConfig& config, std::ostream& out, std::ostream& err);

/// Prints the dashboard of the given stage CSVs without re-running checks.
int cmd_dashboard(const PipelineConfig& config, std::ostream& out, std::ostream& err);

}  // namespace apibind
