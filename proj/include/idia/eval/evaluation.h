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

#ifndef IDIA_EVAL_EVALUATION_H_
#define IDIA_EVAL_EVALUATION_H_

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "idia/attack/attack.h"
#include "idia/core/types.h"

namespace idia::eval {

// How to re-read stored outcomes. By default the stored decision is used.
// `prefix_k` keeps only the first k sampled images of each outcome (the
// sampling order is uniform, so a prefix is itself a uniform k-sample).
// `tau` re-thresholds the recomputed score.
struct View {
  std::optional<int> prefix_k;
  std::optional<double> tau;
};

// Confusion counts over identities for one trial. Unknown-truth identities
// and identities with no answered query are excluded and tallied.
// Fails if the trial does not exist or no member identity was evaluated
// (TPR undefined).
absl::StatusOr<ConfusionReport> Confusion(const attack::AttackRun& run,
                                          int trial, const View& view = {});

// Mean and population standard deviation of each rate across trials.
absl::StatusOr<AggregateReport> Aggregate(const attack::AttackRun& run,
                                          const View& view = {});

// Mean/std of `values` (population std). Identical inputs give exactly
// that value and 0.
MetricStat Summarize(std::span<const double> values);

struct MetricSeries {
  std::vector<int> axis;
  std::vector<AggregateReport> points;
};

// One aggregate per k, all read from the same stored run by prefix, so the
// series is paired across k. Requires ks strictly increasing, each in
// [1, run.config.k].
absl::StatusOr<MetricSeries> SeriesFromRun(const attack::AttackRun& run,
                                           std::span<const int> ks);

struct SweepResult {
  attack::AttackRun run;
  MetricSeries series;
};

// Attacks once with k = max(ks) and reads every smaller k by prefix.
absl::StatusOr<SweepResult> SweepAttackSamples(
    const std::vector<Identity>& roster, const PromptSet& prompts,
    const target::TargetBackend& backend, std::span<const int> ks,
    const AttackConfig& base, const attack::RunOptions& options = {});

// Cell (k, m) is the aggregate of run m read at prefix k. All runs must
// cover the same identities (same ids, labels and skip status) and the same
// prompt digest.
absl::StatusOr<SweepGrid> Heatmap(const std::map<int, attack::AttackRun>& runs,
                                  std::span<const int> ks);

struct ThresholdPoint {
  double threshold = 0.0;
  MetricStat tpr;
  std::optional<MetricStat> fpr;
};

struct ThresholdCurve {
  std::vector<ThresholdPoint> points;
};

// Re-evaluates the membership predictor at each threshold from the stored
// scores; no backend is involved. Thresholds must be ascending, in [0, 1).
absl::StatusOr<ThresholdCurve> ThresholdCurveFromRun(
    const attack::AttackRun& run, std::span<const double> thresholds);

// n evenly spaced thresholds 0, 1/n, ..., (n-1)/n.
std::vector<double> ThresholdGrid(int n);

}  // namespace idia::eval

#endif  // IDIA_EVAL_EVALUATION_H_
