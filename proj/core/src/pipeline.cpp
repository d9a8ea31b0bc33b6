// SPDX-License-Identifier: Apache-2.0
#include "apibind/pipeline.hpp"

#include <fstream>

#include "apibind/identifiers.hpp"
#include "apibind/infer.hpp"
#include "apibind/ingest.hpp"
#include "apibind/ir.hpp"
#include "apibind/parse.hpp"
#include "apibind/render.hpp"
#include "apibind/templates.hpp"
#include "apibind/validate.hpp"

namespace apibind {

namespace fs = std::filesystem;

namespace {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

fs::path rejects_path(const PipelineConfig& c) { return c.rejects_path.value_or(c.out_dir / kRejectsFile); }

bool same_path(const fs::path& a, const fs::path& b) {
  return fs::weakly_canonical(a) == fs::weakly_canonical(b);
}

void check_config(const PipelineConfig& c, bool writes) {
  if (c.inputs.empty()) throw ConfigError("no input files given");
  if (!writes) return;
  for (const auto& in : c.inputs) {
    if (same_path(in, c.out_dir)) throw ConfigError("output directory is also an input: " + in.string());
  }
  auto rejects = rejects_path(c);
  for (const char* primary : {kStageFile, kAcceptedFile, kDashboardText, kDashboardJson}) {
    if (same_path(rejects, c.out_dir / primary)) {
      throw ConfigError("rejects path collides with primary output " + std::string(primary));
    }
  }
  auto package = fs::weakly_canonical(c.out_dir / kPackageDir);
  auto r = fs::weakly_canonical(rejects);
  auto [end, _] = std::mismatch(package.begin(), package.end(), r.begin(), r.end());
  if (end == package.end()) throw ConfigError("rejects path lies inside the package directory");
  for (const auto& in : c.inputs) {
    if (same_path(in, rejects)) throw ConfigError("rejects path is also an input: " + in.string());
  }
}

void write_text(const fs::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw CorpusError("cannot write '" + path.string() + "'");
}

void write_dashboards(const PipelineConfig& c, const DashboardReport& report) {
  if (c.dashboard_formats.text) write_text(c.out_dir / kDashboardText, dashboard_text(report));
  if (c.dashboard_formats.json) write_text(c.out_dir / kDashboardJson, dashboard_json(report).dump(2) + "\n");
}

std::string summary(const DashboardReport& r) {
  std::string pct = r.percent_valid ? std::to_string(round_percent(*r.percent_valid)) : std::string("n/a");
  if (r.percent_valid) pct = pct.substr(0, pct.find('.') + 2);
  return std::to_string(r.valid_records) + "/" + std::to_string(r.total_records) + " records valid (" + pct + "%)";
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "apibind: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PolicyError& e) {
    err << "apibind: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "apibind: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace

std::vector<ApiCallRecord> analyze_corpus(const PipelineConfig& config) {
  std::vector<ApiCallRecord> records;
  for (const auto& in : config.inputs) {
    auto loaded = load_corpus(in);
    records.insert(records.end(), std::make_move_iterator(loaded.begin()), std::make_move_iterator(loaded.end()));
  }
  if (config.merge) records = merge_corpus(std::move(records));
  for (auto& rec : records) rec = cross_validate(infer_record(parse_record(std::move(rec))));
  return records;
}

int cmd_analyze(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_config(config, true);
    auto records = analyze_corpus(config);
    auto report = dashboard(records);
    write_stage(records, config.out_dir / kStageFile);
    std::vector<ApiCallRecord> rejected;
    for (const auto& r : records) {
      if (!passes_gate(r, config.strict)) rejected.push_back(r);
    }
    write_stage(rejected, rejects_path(config));
    write_dashboards(config, report);
    out << "analyzed " << summary(report) << "; " << rejected.size() << " rejected\n";
    return kExitOk;
  });
}

int cmd_generate(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_config(config, true);
    auto policy = config.identifier_policy ? IdentifierPolicy::load(*config.identifier_policy) : IdentifierPolicy{};
    auto templates = config.templates_dir ? TemplateSet::load(*config.templates_dir) : TemplateSet::neutral();

    auto records = analyze_corpus(config);
    auto report = dashboard(records);
    auto routed = route(std::move(records), config.strict);
    write_stage(routed.rejected, rejects_path(config));
    write_dashboards(config, report);
    if (!routed.rejected.empty()) {
      err << "apibind: " << routed.rejected.size() << " record(s) rejected, listed in "
          << rejects_path(config).string() << "\n";
    }
    if (routed.valid.empty()) {
      err << "apibind: no valid records; nothing to generate\n";
      return kExitFailure;
    }

    BuildReport build;
    auto ir = build_reference(routed.valid, config.inputs.front().stem().string(), &build);
    for (auto& n : build.notes) routed.valid[n.record_index].add_issue(std::move(n.issue));
    auto named = apply_identifier_policy(ir, policy);

    auto package_dir = config.out_dir / kPackageDir;
    fs::remove_all(package_dir);
    auto written = render_package(named, templates, package_dir);
    write_stage(routed.valid, config.out_dir / kAcceptedFile);
    out << "generated " << ir.functions.size() << " function(s), " << ir.decls.size() << " type(s) in "
        << written.size() << " file(s) under " << package_dir.string() << "\n";
    return kExitOk;
  });
}

int cmd_dashboard(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_config(config, false);
    std::vector<ApiCallRecord> records;
    for (const auto& in : config.inputs) {
      auto loaded = load_corpus(in);
      records.insert(records.end(), std::make_move_iterator(loaded.begin()), std::make_move_iterator(loaded.end()));
    }
    auto report = dashboard(records);
    if (config.dashboard_formats.text) out << dashboard_text(report);
    if (config.dashboard_formats.json) out << dashboard_json(report).dump(2) << "\n";
    return kExitOk;
  });
}

}  // namespace apibind
