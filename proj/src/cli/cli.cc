// Copyright 2026 The IDIA Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "idia/cli/cli.h"

#include <CLI11.hpp>
#include <fmt/format.h>

#include "idia/core/text.h"

namespace idia::cli {
namespace {

// "m=DIR" pairs for the heatmap mode of `sweep`.
bool ParseRunSpecs(const std::vector<std::string>& specs,
                   std::map<int, std::string>& runs, std::ostream& err) {
  for (const std::string& spec : specs) {
    const size_t eq = spec.find('=');
    int64_t m = 0;
    if (eq == std::string::npos || eq + 1 == spec.size() ||
        !ParseInt64(std::string_view(spec).substr(0, eq), &m)) {
      err << fmt::format("error: --run expects m=DIR, got '{}'\n", spec);
      return false;
    }
    if (!runs.emplace(static_cast<int>(m), spec.substr(eq + 1)).second) {
      err << fmt::format("error: --run repeats m={}\n", m);
      return false;
    }
  }
  return true;
}

}  // namespace

int RunCli(const std::vector<std::string>& argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Identity inference privacy audit for vision-language models",
               "idia"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ToolkitVersion()));
  std::string workdir = ".";
  app.add_option("--workdir", workdir,
                 "Directory that relative paths resolve against");

  AnalyzeArgs analyze;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Label identities from a caption dump");
  analyze_cmd->add_option("--captions", analyze.captions, "Caption dump (JSONL)")
      ->required();
  analyze_cmd->add_option("--roster", analyze.roster, "Roster (JSONL)")
      ->required();
  analyze_cmd->add_option("--out", analyze.out, "Labeled roster output")
      ->required();
  analyze_cmd->add_option("--evidence", analyze.evidence,
                          "Evidence output (JSONL)");
  analyze_cmd->add_option("--min-images", analyze.min_images,
                          "Drop identities with fewer images");
  analyze_cmd->add_option("--recognition", analyze.recognition,
                          "Recognition counts CSV for low-recognition selection");
  analyze_cmd->add_option("--n-total", analyze.n_total, "Identities to select");
  analyze_cmd->add_option("--n-inject", analyze.n_inject,
                          "Selected identities to inject");
  analyze_cmd->add_option("--selection-out", analyze.selection_out,
                          "Selection output (JSON)");

  auto add_attack_options = [](CLI::App* cmd, AttackArgs& args) {
    cmd->add_option("--roster", args.roster, "Labeled roster (JSONL)");
    cmd->add_option("--prompts", args.prompts, "Prompt names, one per line");
    cmd->add_option("--backend", args.backend,
                    "synthetic:<spec.json>, local:<dir> or http://host:port");
    cmd->add_option("--config", args.config, "Attack configuration file");
    cmd->add_option("--temperature", args.temperature,
                    "Log temperature for the local backend");
    cmd->add_option("--parallelism", args.parallelism,
                    "Concurrent backend queries");
  };

  AttackArgs attack;
  CLI::App* attack_cmd =
      app.add_subcommand("attack", "Run the multi-trial attack");
  add_attack_options(attack_cmd, attack);
  attack_cmd->get_option("--roster")->required();
  attack_cmd->get_option("--prompts")->required();
  attack_cmd->get_option("--backend")->required();
  attack_cmd->add_option("--out", attack.out, "Run output directory")
      ->required();

  SweepArgs sweep;
  std::vector<std::string> run_specs;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Metrics over k, or a k-by-m grid over stored runs");
  add_attack_options(sweep_cmd, sweep.attack);
  sweep_cmd->add_option("--ks", sweep.ks, "Sample counts, ascending")
      ->delimiter(',')
      ->required();
  sweep_cmd->add_option("--run", run_specs, "m=DIR of a stored run");
  sweep_cmd->add_option("--out", sweep.out, "Output directory")->required();

  ReportArgs report;
  CLI::App* report_cmd =
      app.add_subcommand("report", "Summarize a stored run");
  report_cmd->add_option("--run", report.run, "Run directory")->required();
  report_cmd->add_option("--out", report.out, "Output directory");
  report_cmd->add_option("--thresholds", report.thresholds,
                         "Thresholds for the threshold curve")
      ->delimiter(',');
  report_cmd->add_option("--threshold-grid", report.threshold_grid,
                         "Evenly spaced thresholds i/n, i < n");
  report_cmd->add_option("--ks", report.ks, "Prefix sample counts")
      ->delimiter(',');

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  if (!args.empty()) args.pop_back();
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  if (analyze_cmd->parsed()) return CmdAnalyze(analyze, workdir, out, err);
  if (attack_cmd->parsed()) return CmdAttack(attack, workdir, out, err);
  if (sweep_cmd->parsed()) {
    if (!ParseRunSpecs(run_specs, sweep.runs, err)) return kExitParse;
    if (sweep.runs.empty() &&
        (sweep.attack.roster.empty() || sweep.attack.prompts.empty() ||
         sweep.attack.backend.empty())) {
      err << "error: sweep needs --roster, --prompts and --backend, or --run\n";
      return kExitParse;
    }
    return CmdSweep(sweep, workdir, out, err);
  }
  return CmdReport(report, workdir, out, err);
}

}  // namespace idia::cli
