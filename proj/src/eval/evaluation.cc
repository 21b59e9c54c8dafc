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

#include "idia/eval/evaluation.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <fmt/format.h>

#include "idia/core/status_macros.h"

namespace idia::eval {
namespace {

// Stored outcomes resolved against identity labels once per evaluation.
struct Resolved {
  const TrialOutcome* outcome;
  MembershipLabel label;
};

absl::StatusOr<std::vector<std::vector<Resolved>>> ByTrial(
    const attack::AttackRun& run) {
  std::unordered_map<std::string_view, MembershipLabel> labels;
  labels.reserve(run.identities.size());
  for (const attack::IdentityStatus& s : run.identities) labels[s.id] = s.label;
  std::vector<std::vector<Resolved>> trials(
      static_cast<size_t>(std::max(run.config.trials, 0)));
  for (const TrialOutcome& outcome : run.outcomes) {
    auto it = labels.find(outcome.identity_id);
    if (it == labels.end()) {
      return absl::InvalidArgumentError(fmt::format(
          "outcome for unknown identity '{}'", outcome.identity_id));
    }
    if (outcome.trial < 0 || outcome.trial >= run.config.trials) {
      return absl::InvalidArgumentError(
          fmt::format("outcome with trial {} outside the run", outcome.trial));
    }
    trials[static_cast<size_t>(outcome.trial)].push_back({&outcome, it->second});
  }
  return trials;
}

absl::Status CheckView(const attack::AttackRun& run, const View& view) {
  if (view.prefix_k.has_value() &&
      (*view.prefix_k < 1 || *view.prefix_k > run.config.k)) {
    return absl::InvalidArgumentError(fmt::format(
        "prefix k = {} outside [1, {}]", *view.prefix_k, run.config.k));
  }
  if (view.tau.has_value() && !(*view.tau >= 0.0 && *view.tau < 1.0)) {
    return absl::InvalidArgumentError("threshold must lie in [0, 1)");
  }
  return absl::OkStatus();
}

// (answered, correct) over the first `prefix` sampled images.
std::pair<int64_t, int64_t> Counts(const TrialOutcome& outcome, size_t prefix) {
  int64_t answered = 0;
  int64_t correct = 0;
  const size_t n = std::min(prefix, outcome.results.size());
  for (size_t i = 0; i < n; ++i) {
    answered += outcome.results[i] != ImageResult::kFailed;
    correct += outcome.results[i] == ImageResult::kHit;
  }
  return {answered, correct};
}

// -1 when nothing was answered.
int DecisionUnder(const TrialOutcome& outcome, const View& view,
                  double config_tau) {
  if (!view.prefix_k.has_value() && !view.tau.has_value()) {
    return outcome.queried_count > 0 ? outcome.decision : -1;
  }
  int64_t answered = outcome.queried_count;
  int64_t correct = outcome.correct_count;
  if (view.prefix_k.has_value()) {
    std::tie(answered, correct) =
        Counts(outcome, static_cast<size_t>(*view.prefix_k));
  }
  if (answered == 0) return -1;
  return attack::PredictMembership(Fraction(correct, answered),
                                   view.tau.value_or(config_tau));
}

absl::StatusOr<ConfusionReport> Tally(std::span<const Resolved> outcomes,
                                      const View& view, double config_tau) {
  ConfusionReport report;
  for (const Resolved& r : outcomes) {
    const int decision = DecisionUnder(*r.outcome, view, config_tau);
    if (decision < 0) {
      ++report.excluded;
      continue;
    }
    switch (r.label) {
      case MembershipLabel::kMember:
        (decision ? report.tp : report.fn) += 1;
        break;
      case MembershipLabel::kNonMember:
        (decision ? report.fp : report.tn) += 1;
        break;
      case MembershipLabel::kUnknown:
        ++report.excluded;
        (decision ? report.unknown_predicted_member
                  : report.unknown_predicted_nonmember) += 1;
        break;
    }
  }
  if (report.tp + report.fn == 0) {
    return absl::FailedPreconditionError(
        "no member identity was evaluated; TPR is undefined");
  }
  return report;
}

std::optional<double> ToDouble(const std::optional<Fraction>& f) {
  if (!f.has_value()) return std::nullopt;
  return f->ToDouble();
}

absl::StatusOr<AggregateReport> AggregateResolved(
    const attack::AttackRun& run,
    const std::vector<std::vector<Resolved>>& trials, const View& view) {
  if (trials.empty()) return absl::InvalidArgumentError("run has no trials");
  std::vector<double> tpr, fnr, tnr, fpr, acc, excluded, upm, upn;
  bool have_nonmembers = true;
  for (const auto& trial : trials) {
    IDIA_ASSIGN_OR_RETURN(report, Tally(trial, view, run.config.tau));
    tpr.push_back(report.tpr().ToDouble());
    fnr.push_back(report.fnr().ToDouble());
    if (auto v = ToDouble(report.tnr()); v.has_value()) {
      tnr.push_back(*v);
      fpr.push_back(*ToDouble(report.fpr()));
    } else {
      have_nonmembers = false;
    }
    acc.push_back(report.accuracy().ToDouble());
    excluded.push_back(static_cast<double>(report.excluded));
    upm.push_back(static_cast<double>(report.unknown_predicted_member));
    upn.push_back(static_cast<double>(report.unknown_predicted_nonmember));
  }
  AggregateReport out;
  out.trials = static_cast<int>(trials.size());
  for (const attack::IdentityStatus& s : run.identities) {
    if (s.skipped) continue;
    out.members += s.label == MembershipLabel::kMember;
    out.nonmembers += s.label == MembershipLabel::kNonMember;
  }
  out.tpr = Summarize(tpr);
  out.fnr = Summarize(fnr);
  if (have_nonmembers) {
    out.tnr = Summarize(tnr);
    out.fpr = Summarize(fpr);
  }
  out.accuracy = Summarize(acc);
  out.excluded = Summarize(excluded);
  out.unknown_predicted_member = Summarize(upm);
  out.unknown_predicted_nonmember = Summarize(upn);
  return out;
}

absl::Status CheckStrictlyIncreasing(std::span<const int> axis,
                                     std::string_view what) {
  if (axis.empty()) return absl::InvalidArgumentError(fmt::format("{} is empty", what));
  for (size_t i = 1; i < axis.size(); ++i) {
    if (axis[i] <= axis[i - 1]) {
      return absl::InvalidArgumentError(
          fmt::format("{} must be strictly increasing", what));
    }
  }
  return absl::OkStatus();
}

}  // namespace

MetricStat Summarize(std::span<const double> values) {
  if (values.empty()) return {};
  if (std::all_of(values.begin(), values.end(),
                  [&](double v) { return v == values.front(); })) {
    return {values.front(), 0.0};
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return {mean, std::sqrt(sq / static_cast<double>(values.size()))};
}

absl::StatusOr<ConfusionReport> Confusion(const attack::AttackRun& run,
                                          int trial, const View& view) {
  IDIA_RETURN_IF_ERROR(CheckView(run, view));
  if (trial < 0 || trial >= run.config.trials) {
    return absl::InvalidArgumentError(fmt::format("no trial {}", trial));
  }
  IDIA_ASSIGN_OR_RETURN(trials, ByTrial(run));
  return Tally(trials[static_cast<size_t>(trial)], view, run.config.tau);
}

absl::StatusOr<AggregateReport> Aggregate(const attack::AttackRun& run,
                                          const View& view) {
  IDIA_RETURN_IF_ERROR(CheckView(run, view));
  IDIA_ASSIGN_OR_RETURN(trials, ByTrial(run));
  return AggregateResolved(run, trials, view);
}

absl::StatusOr<MetricSeries> SeriesFromRun(const attack::AttackRun& run,
                                           std::span<const int> ks) {
  IDIA_RETURN_IF_ERROR(CheckStrictlyIncreasing(ks, "k axis"));
  IDIA_ASSIGN_OR_RETURN(trials, ByTrial(run));
  MetricSeries series;
  for (int k : ks) {
    const View view{k, std::nullopt};
    IDIA_RETURN_IF_ERROR(CheckView(run, view));
    IDIA_ASSIGN_OR_RETURN(point, AggregateResolved(run, trials, view));
    series.axis.push_back(k);
    series.points.push_back(std::move(point));
  }
  return series;
}

absl::StatusOr<SweepResult> SweepAttackSamples(
    const std::vector<Identity>& roster, const PromptSet& prompts,
    const target::TargetBackend& backend, std::span<const int> ks,
    const AttackConfig& base, const attack::RunOptions& options) {
  IDIA_RETURN_IF_ERROR(CheckStrictlyIncreasing(ks, "k axis"));
  AttackConfig config = base;
  config.k = ks.back();
  IDIA_ASSIGN_OR_RETURN(run,
                        attack::RunAttack(roster, prompts, backend, config, options));
  IDIA_ASSIGN_OR_RETURN(series, SeriesFromRun(run, ks));
  return SweepResult{std::move(run), std::move(series)};
}

absl::StatusOr<SweepGrid> Heatmap(const std::map<int, attack::AttackRun>& runs,
                                  std::span<const int> ks) {
  if (runs.empty()) return absl::InvalidArgumentError("no runs for heatmap");
  IDIA_RETURN_IF_ERROR(CheckStrictlyIncreasing(ks, "k axis"));
  const attack::AttackRun& first = runs.begin()->second;
  for (const auto& [m, run] : runs) {
    if (run.identities != first.identities ||
        run.prompt_digest != first.prompt_digest) {
      return absl::InvalidArgumentError(fmt::format(
          "run for m = {} does not share the roster and prompts of m = {}", m,
          runs.begin()->first));
    }
  }
  SweepGrid grid;
  grid.row_axis.assign(ks.begin(), ks.end());
  for (const auto& [m, run] : runs) grid.col_axis.push_back(m);
  grid.cells.resize(ks.size());
  for (const auto& [m, run] : runs) {
    IDIA_ASSIGN_OR_RETURN(series, SeriesFromRun(run, ks));
    for (size_t r = 0; r < ks.size(); ++r) {
      grid.cells[r].push_back(std::move(series.points[r]));
    }
  }
  return grid;
}

absl::StatusOr<ThresholdCurve> ThresholdCurveFromRun(
    const attack::AttackRun& run, std::span<const double> thresholds) {
  for (size_t i = 0; i < thresholds.size(); ++i) {
    if (!(thresholds[i] >= 0.0 && thresholds[i] < 1.0)) {
      return absl::InvalidArgumentError("thresholds must lie in [0, 1)");
    }
    if (i > 0 && thresholds[i] < thresholds[i - 1]) {
      return absl::InvalidArgumentError("thresholds must be ascending");
    }
  }
  IDIA_ASSIGN_OR_RETURN(trials, ByTrial(run));
  ThresholdCurve curve;
  for (double t : thresholds) {
    IDIA_ASSIGN_OR_RETURN(report,
                          AggregateResolved(run, trials, View{std::nullopt, t}));
    curve.points.push_back({t, report.tpr, report.fpr});
  }
  return curve;
}

std::vector<double> ThresholdGrid(int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(static_cast<double>(i) / n);
  return out;
}

}  // namespace idia::eval
