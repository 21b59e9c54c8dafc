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

#include <cstdlib>
#include <filesystem>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "idia/attack/run_io.h"
#include "idia/cli/cli.h"
#include "idia/cli/config.h"
#include "idia/core/digest.h"
#include "idia/core/serialization.h"
#include "idia/core/status_macros.h"
#include "idia/dataset/dataset_analysis.h"
#include "idia/eval/evaluation.h"
#include "idia/eval/report.h"
#include "idia/target/open_backend.h"

#ifndef IDIA_VERSION
#define IDIA_VERSION "0.0.0"
#endif

namespace idia::cli {
namespace {

namespace fs = std::filesystem;

std::string Resolve(const std::string& workdir, const std::string& path) {
  if (path.empty()) return path;
  fs::path p(path);
  if (p.is_absolute()) return p.string();
  return (fs::path(workdir) / p).string();
}

std::string In(const std::string& dir, std::string_view name) {
  return (fs::path(dir) / std::string(name)).string();
}

int Fail(std::ostream& err, int code, const absl::Status& status) {
  err << "error: " << std::string(status.message()) << "\n";
  return code;
}

absl::Status EnsureDir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        fmt::format("cannot create {}: {}", dir, ec.message()));
  }
  return absl::OkStatus();
}

// Backend failures that surface as a whole-batch error.
int BackendExitCode(const absl::Status& status) {
  if (absl::IsFailedPrecondition(status)) return kExitMismatch;
  return kExitBackend;
}

struct AttackInputs {
  std::vector<Identity> roster;
  std::optional<PromptSet> prompts;
  AttackConfig config;
  std::unique_ptr<target::TargetBackend> backend;
  std::map<std::string, std::string> digests;
};

// Loads everything cmd_attack and a fresh sweep need. Returns an exit code
// other than kExitOk on failure, after printing a diagnostic.
int LoadAttackInputs(const AttackArgs& args, const std::string& workdir,
                     AttackInputs& in, std::ostream& err) {
  const std::string roster_path = Resolve(workdir, args.roster);
  const std::string prompts_path = Resolve(workdir, args.prompts);
  auto roster_text = ReadFile(roster_path);
  if (!roster_text.ok()) return Fail(err, kExitParse, roster_text.status());
  auto roster = ParseRoster(*roster_text, args.roster);
  if (!roster.ok()) return Fail(err, kExitParse, roster.status());
  in.roster = *std::move(roster);
  in.digests["roster"] = Sha256Hex(*roster_text);

  auto prompts_text = ReadFile(prompts_path);
  if (!prompts_text.ok()) return Fail(err, kExitParse, prompts_text.status());
  auto prompts = ParsePrompts(*prompts_text);
  if (!prompts.ok()) {
    return Fail(err, kExitParse,
                absl::InvalidArgumentError(fmt::format(
                    "{}: {}", args.prompts, prompts.status().message())));
  }
  in.prompts = *std::move(prompts);
  in.digests["prompts"] = Sha256Hex(*prompts_text);

  if (!args.config.empty()) {
    auto text = ReadFile(Resolve(workdir, args.config));
    if (!text.ok()) return Fail(err, kExitParse, text.status());
    auto config = ParseConfig(*text, args.config);
    if (!config.ok()) return Fail(err, kExitParse, config.status());
    in.config = *config;
    in.digests["config"] = Sha256Hex(*text);
  }
  if (absl::Status s = ApplyEnvironment(in.config); !s.ok()) {
    return Fail(err, kExitParse, s);
  }
  if (args.parallelism.has_value()) in.config.parallelism = *args.parallelism;
  if (absl::Status s = ValidateAttackConfig(in.config); !s.ok()) {
    return Fail(err, kExitParse, s);
  }

  // Roster/prompt consistency: names and ids. Insufficient images are left
  // to the configured policy.
  const ValidationSummary summary =
      ValidateRoster(in.roster, *in.prompts, in.config.k);
  std::vector<std::string> offending;
  for (const Finding& f : summary.findings) {
    if (f.kind == FindingKind::kNameNotInPrompts ||
        f.kind == FindingKind::kDuplicateId) {
      offending.push_back(fmt::format("{} ({})", f.identity_id, FindingName(f.kind)));
    }
  }
  if (!offending.empty()) {
    err << "error: roster does not match prompts; offending identities:\n";
    for (const std::string& o : offending) err << "  " << o << "\n";
    return kExitMismatch;
  }

  const std::string backend_file =
      target::BackendInputPath(args.backend, workdir);
  if (!backend_file.empty() && fs::is_regular_file(backend_file)) {
    if (auto d = Sha256HexOfFile(backend_file); d.ok()) {
      in.digests["backend"] = *d;
    }
  }
  target::BackendOptions options;
  if (const char* token = std::getenv("IDIA_BEARER_TOKEN")) {
    options.bearer_token = token;
  }
  options.temperature = args.temperature;
  auto backend = target::OpenBackend(args.backend, in.roster, options, workdir);
  if (!backend.ok()) {
    // A spec or embedding file that does not parse is an input error; a
    // backend that cannot be reached is a backend error.
    const int code = absl::IsInvalidArgument(backend.status()) ? kExitParse
                                                               : kExitBackend;
    return Fail(err, code, backend.status());
  }
  if (absl::Status s = (*backend)->Probe(); !s.ok()) {
    return Fail(err, kExitBackend, s);
  }
  in.backend = *std::move(backend);
  return kExitOk;
}

attack::RunManifest BaseManifest(const AttackArgs& args,
                                 const AttackInputs& in) {
  attack::RunManifest manifest;
  manifest.toolkit_version = std::string(ToolkitVersion());
  manifest.backend_uri = args.backend;
  manifest.input_digests = in.digests;
  manifest.notes.push_back(
      "queries failing after retries are dropped from their trial; the score "
      "divides by answered queries");
  if (std::getenv("IDIA_SEED") != nullptr) {
    manifest.notes.push_back("seed taken from IDIA_SEED");
  }
  return manifest;
}

absl::Status WriteSeriesOutputs(const std::string& dir,
                                const eval::MetricSeries& series) {
  if (absl::Status s = WriteFile(In(dir, "series.csv"), eval::SeriesCsv(series));
      !s.ok()) {
    return s;
  }
  for (std::string_view metric : eval::kMetricNames) {
    if (absl::Status s = WriteFile(In(dir, fmt::format("series_{}.dat", metric)),
                                   eval::SeriesPlotData(series, metric));
        !s.ok()) {
      return s;
    }
  }
  return absl::OkStatus();
}

}  // namespace

std::string_view ToolkitVersion() { return IDIA_VERSION; }

int CmdAnalyze(const AnalyzeArgs& args, const std::string& workdir,
               std::ostream& out, std::ostream& err) {
  auto caption_text = ReadFile(Resolve(workdir, args.captions));
  if (!caption_text.ok()) return Fail(err, kExitParse, caption_text.status());
  auto dump = dataset::ParseCaptionDump(*caption_text, args.captions);
  if (!dump.ok()) return Fail(err, kExitParse, dump.status());
  auto roster_text = ReadFile(Resolve(workdir, args.roster));
  if (!roster_text.ok()) return Fail(err, kExitParse, roster_text.status());
  auto roster = ParseRoster(*roster_text, args.roster);
  if (!roster.ok()) return Fail(err, kExitParse, roster.status());

  std::vector<Identity> identities = *std::move(roster);
  if (args.min_images.has_value()) {
    auto filtered = dataset::EligibilityFilter(identities, *args.min_images);
    if (!filtered.ok()) return Fail(err, kExitParse, filtered.status());
    for (const auto& [id, count] : filtered->dropped) {
      err << fmt::format("note: dropped '{}' ({} images < {})\n", id, count,
                         *args.min_images);
    }
    identities = std::move(filtered->retained);
  }

  std::set<std::string> roster_ids;
  for (const Identity& identity : identities) roster_ids.insert(identity.id);
  for (const auto& [id, captions] : dump->captions) {
    if (!roster_ids.contains(id)) {
      err << fmt::format("warning: caption dump id '{}' is not in the roster\n", id);
    }
  }

  const std::vector<dataset::MembershipEvidence> evidence =
      dataset::CaptionMembership(*dump, identities);
  std::string evidence_text;
  size_t members = 0, nonmembers = 0, unknown = 0;
  for (size_t i = 0; i < identities.size(); ++i) {
    const dataset::MembershipEvidence& e = evidence[i];
    identities[i].ground_truth = e.label;
    members += e.label == MembershipLabel::kMember;
    nonmembers += e.label == MembershipLabel::kNonMember;
    if (e.label == MembershipLabel::kUnknown) {
      ++unknown;
      err << fmt::format(
          "warning: identity '{}' has no captions in the dump; labeled unknown\n",
          e.identity_id);
    }
    Json record{{"id", e.identity_id},
                {"label", LabelName(e.label)},
                {"captions_checked", e.captions_checked},
                {"caption_index", e.caption_index.has_value()
                                      ? Json(*e.caption_index)
                                      : Json(nullptr)},
                {"matched_caption", e.matched_caption}};
    evidence_text += record.dump();
    evidence_text += '\n';
  }

  const std::string out_path = Resolve(workdir, args.out);
  const std::string evidence_path = Resolve(
      workdir, args.evidence.empty() ? args.out + ".evidence.jsonl" : args.evidence);
  if (absl::Status s = WriteFile(out_path, SerializeRoster(identities)); !s.ok()) {
    return Fail(err, kExitFailure, s);
  }
  if (absl::Status s = WriteFile(evidence_path, evidence_text); !s.ok()) {
    return Fail(err, kExitFailure, s);
  }

  if (!args.recognition.empty()) {
    auto text = ReadFile(Resolve(workdir, args.recognition));
    if (!text.ok()) return Fail(err, kExitParse, text.status());
    auto counts = dataset::ParseRecognitionCounts(*text, args.recognition);
    if (!counts.ok()) return Fail(err, kExitParse, counts.status());
    auto selection =
        dataset::SelectLowRecognition(*counts, args.n_total, args.n_inject);
    if (!selection.ok()) return Fail(err, kExitParse, selection.status());
    const std::string selection_path = Resolve(
        workdir, args.selection_out.empty() ? args.out + ".selection.json"
                                            : args.selection_out);
    Json json{{"n_total", args.n_total},
              {"n_inject", args.n_inject},
              {"inject", selection->inject},
              {"holdout", selection->holdout}};
    if (absl::Status s = WriteFile(selection_path, json.dump(2) + "\n"); !s.ok()) {
      return Fail(err, kExitFailure, s);
    }
  }

  out << fmt::format("labeled {} identities: {} member, {} non-member, {} unknown\n",
                     identities.size(), members, nonmembers, unknown);
  return kExitOk;
}

int CmdAttack(const AttackArgs& args, const std::string& workdir,
              std::ostream& out, std::ostream& err) {
  AttackInputs in;
  if (int code = LoadAttackInputs(args, workdir, in, err); code != kExitOk) {
    return code;
  }
  auto run = attack::RunAttack(in.roster, *in.prompts, *in.backend, in.config);
  if (!run.ok()) return Fail(err, BackendExitCode(run.status()), run.status());
  if (run->failed_queries > 0) {
    err << fmt::format("warning: {} queries failed after retries and were dropped\n",
                       run->failed_queries);
  }
  const std::string dir = Resolve(workdir, args.out);
  if (absl::Status s = attack::WriteRun(dir, *run, BaseManifest(args, in)); !s.ok()) {
    return Fail(err, kExitFailure, s);
  }
  size_t skipped = 0;
  for (const auto& s : run->identities) skipped += s.skipped;
  out << fmt::format("wrote {} trial outcomes ({} trials, {} identities, {} skipped) to {}\n",
                     run->outcomes.size(), run->config.trials,
                     run->identities.size(), skipped, dir);
  return kExitOk;
}

int CmdSweep(const SweepArgs& args, const std::string& workdir,
             std::ostream& out, std::ostream& err) {
  const std::string dir = Resolve(workdir, args.out);
  if (absl::Status s = EnsureDir(dir); !s.ok()) return Fail(err, kExitFailure, s);

  if (!args.runs.empty()) {
    std::map<int, attack::AttackRun> runs;
    for (const auto& [m, run_dir] : args.runs) {
      auto run = attack::ReadRun(Resolve(workdir, run_dir));
      if (!run.ok()) return Fail(err, kExitIntegrity, run.status());
      runs.emplace(m, *std::move(run));
    }
    auto grid = eval::Heatmap(runs, args.ks);
    if (!grid.ok()) return Fail(err, kExitMismatch, grid.status());
    for (auto [name, text] :
         {std::pair<std::string, std::string>{"grid.csv", eval::GridCsv(*grid)},
          {"grid.json", ToJson(*grid).dump(2) + "\n"},
          {"heatmap_tpr.dat", eval::GridPlotData(*grid, "tpr")},
          {"heatmap_fnr.dat", eval::GridPlotData(*grid, "fnr")}}) {
      if (absl::Status s = WriteFile(In(dir, name), text); !s.ok()) {
        return Fail(err, kExitFailure, s);
      }
    }
    out << fmt::format("wrote {}x{} grid to {}\n", grid->row_axis.size(),
                       grid->col_axis.size(), dir);
    return kExitOk;
  }

  AttackInputs in;
  if (int code = LoadAttackInputs(args.attack, workdir, in, err); code != kExitOk) {
    return code;
  }
  if (args.ks.empty()) {
    return Fail(err, kExitParse, absl::InvalidArgumentError("--ks is required"));
  }
  auto sweep = eval::SweepAttackSamples(in.roster, *in.prompts, *in.backend,
                                        args.ks, in.config);
  if (!sweep.ok()) {
    const int code = absl::IsInvalidArgument(sweep.status())
                         ? kExitParse
                         : BackendExitCode(sweep.status());
    return Fail(err, code, sweep.status());
  }
  if (absl::Status s = attack::WriteRun(In(dir, "run"), sweep->run,
                                        BaseManifest(args.attack, in));
      !s.ok()) {
    return Fail(err, kExitFailure, s);
  }
  if (absl::Status s = WriteSeriesOutputs(dir, sweep->series); !s.ok()) {
    return Fail(err, kExitFailure, s);
  }
  out << fmt::format("wrote series over k = [{}] to {}\n",
                     fmt::join(args.ks, ","), dir);
  return kExitOk;
}

int CmdReport(const ReportArgs& args, const std::string& workdir,
              std::ostream& out, std::ostream& err) {
  const std::string run_dir = Resolve(workdir, args.run);
  attack::RunManifest manifest;
  auto run = attack::ReadRun(run_dir, &manifest);
  if (!run.ok()) return Fail(err, kExitIntegrity, run.status());
  auto aggregate = eval::Aggregate(*run);
  if (!aggregate.ok()) return Fail(err, kExitMismatch, aggregate.status());

  const std::string dir =
      args.out.empty() ? In(run_dir, "report") : Resolve(workdir, args.out);
  if (absl::Status s = EnsureDir(dir); !s.ok()) return Fail(err, kExitFailure, s);

  eval::MetricSeries single{{run->config.k}, {*aggregate}};
  std::vector<std::pair<std::string, std::string>> files = {
      {"report.csv", eval::SeriesCsv(single)},
      {"summary.json", eval::SummaryJson(*run, *aggregate, manifest).dump(2) + "\n"},
      {"summary.txt", eval::SummaryText(*aggregate)}};

  std::vector<double> thresholds = args.thresholds;
  if (args.threshold_grid.has_value()) {
    thresholds = eval::ThresholdGrid(*args.threshold_grid);
  }
  if (!thresholds.empty()) {
    auto curve = eval::ThresholdCurveFromRun(*run, thresholds);
    if (!curve.ok()) return Fail(err, kExitParse, curve.status());
    files.emplace_back("threshold_curve.csv", eval::ThresholdCurveCsv(*curve));
  }
  if (!args.ks.empty()) {
    auto series = eval::SeriesFromRun(*run, args.ks);
    if (!series.ok()) return Fail(err, kExitParse, series.status());
    files.emplace_back("series.csv", eval::SeriesCsv(*series));
    for (std::string_view metric : eval::kMetricNames) {
      files.emplace_back(fmt::format("series_{}.dat", metric),
                         eval::SeriesPlotData(*series, metric));
    }
  }
  for (const auto& [name, text] : files) {
    if (absl::Status s = WriteFile(In(dir, name), text); !s.ok()) {
      return Fail(err, kExitFailure, s);
    }
  }
  out << eval::SummaryText(*aggregate);
  return kExitOk;
}

}  // namespace idia::cli
