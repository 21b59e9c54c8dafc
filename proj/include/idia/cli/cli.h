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

#ifndef IDIA_CLI_CLI_H_
#define IDIA_CLI_CLI_H_

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace idia::cli {

// Fixed for scripting.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitBackend = 3,
  kExitMismatch = 4,
  kExitIntegrity = 5,
};

std::string_view ToolkitVersion();

struct AnalyzeArgs {
  std::string captions;
  std::string roster;
  std::string out;
  std::string evidence;  // default "<out>.evidence.jsonl"
  std::optional<int> min_images;
  std::string recognition;  // optional CSV for low-recognition selection
  size_t n_total = 200;
  size_t n_inject = 100;
  std::string selection_out;  // default "<out>.selection.json"
};

struct AttackArgs {
  std::string roster;
  std::string prompts;
  std::string backend;
  std::string config;  // optional
  std::string out;
  double temperature = 0.0;
  std::optional<int> parallelism;  // overrides the config file
};

struct SweepArgs {
  // Fresh sweep: attack once at max(ks).
  AttackArgs attack;
  // Heatmap over stored runs: m -> run directory.
  std::map<int, std::string> runs;
  std::vector<int> ks;
  std::string out;
};

struct ReportArgs {
  std::string run;
  std::string out;  // default "<run>/report"
  std::vector<double> thresholds;
  std::optional<int> threshold_grid;
  std::vector<int> ks;
};

// Each command resolves relative paths against `workdir`.
int CmdAnalyze(const AnalyzeArgs& args, const std::string& workdir,
               std::ostream& out, std::ostream& err);
int CmdAttack(const AttackArgs& args, const std::string& workdir,
              std::ostream& out, std::ostream& err);
int CmdSweep(const SweepArgs& args, const std::string& workdir,
             std::ostream& out, std::ostream& err);
int CmdReport(const ReportArgs& args, const std::string& workdir,
              std::ostream& out, std::ostream& err);

// Parses `argv` (argv[0] is the program name) and dispatches.
int RunCli(const std::vector<std::string>& argv, std::ostream& out,
           std::ostream& err);

}  // namespace idia::cli

#endif  // IDIA_CLI_CLI_H_
