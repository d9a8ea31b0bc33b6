// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "apibind/pipeline.hpp"

namespace {

void add_common(CLI::App* cmd, apibind::PipelineConfig& config) {
  cmd->add_option("-i,--input", config.inputs, "Input corpus or stage CSV files")->required()->check(CLI::ExistingFile);
}

void add_outputs(CLI::App* cmd, apibind::PipelineConfig& config, std::string& rejects) {
  cmd->add_option("-o,--out-dir", config.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--rejects", rejects, "Rejects CSV (default <out-dir>/rejects.csv)");
  cmd->add_flag("--merge", config.merge, "Merge records describing the same call");
  cmd->add_flag("--strict", config.strict, "Reject records carrying warnings too");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"apibind: typed API bindings from scraped documentation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "apibind 0.1.0");

  apibind::PipelineConfig config;
  std::string rejects;
  std::string templates;
  std::string policy;
  std::string format = "both";

  auto* analyze = app.add_subcommand("analyze", "Parse and validate records, write the stage CSV and dashboard");
  add_common(analyze, config);
  add_outputs(analyze, config, rejects);

  auto* generate = app.add_subcommand("generate", "Render a binding package from the valid records");
  add_common(generate, config);
  add_outputs(generate, config, rejects);
  generate->add_option("--templates", templates, "Template directory (default: built-in neutral set)")
      ->check(CLI::ExistingDirectory);
  generate->add_option("--identifier-policy", policy, "Identifier policy JSON file")->check(CLI::ExistingFile);

  auto* dash = app.add_subcommand("dashboard", "Print the dashboard of stage CSV files");
  add_common(dash, config);

  for (auto* cmd : {analyze, generate, dash}) {
    cmd->add_option("--dashboard-format", format, "text, json or both")
        ->check(CLI::IsMember({"text", "json", "both"}))
        ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? apibind::kExitOk : apibind::kExitUsage;
  }

  if (!rejects.empty()) config.rejects_path = rejects;
  if (!templates.empty()) config.templates_dir = templates;
  if (!policy.empty()) config.identifier_policy = policy;
  config.dashboard_formats.text = format != "json";
  config.dashboard_formats.json = format != "text";
  if (dash->parsed() && dash->count("--dashboard-format") == 0) config.dashboard_formats.json = false;

  if (analyze->parsed()) return apibind::cmd_analyze(config, std::cout, std::cerr);
  if (generate->parsed()) return apibind::cmd_generate(config, std::cout, std::cerr);
  return apibind::cmd_dashboard(config, std::cout, std::cerr);
}
