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

#ifndef IDIA_EVAL_REPORT_H_
#define IDIA_EVAL_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idia/attack/run_io.h"
#include "idia/eval/evaluation.h"

namespace idia::eval {

// Metric names in report order.
inline constexpr std::string_view kMetricNames[] = {"tpr", "tnr", "fpr", "fnr",
                                                    "accuracy"};

// nullopt for rates that are undefined (no non-members).
std::optional<MetricStat> MetricByName(const AggregateReport& report,
                                       std::string_view name);

// CSV with header "k,m,metric,mean,std". `m` is left empty for series that
// are not tied to a training-occurrence value.
std::string SeriesCsv(const MetricSeries& series, std::optional<int> m = {});
std::string GridCsv(const SweepGrid& grid);

// "threshold,tpr_mean,tpr_std,fpr_mean,fpr_std"
std::string ThresholdCurveCsv(const ThresholdCurve& curve);

// Whitespace-separated "x y yerr" lines for one metric.
std::string SeriesPlotData(const MetricSeries& series, std::string_view metric);
// One block per column m, blocks separated by a blank line, "# m=<m>" header.
std::string GridPlotData(const SweepGrid& grid, std::string_view metric);

// Self-describing summary object: config echo, aggregate rates, run facts,
// and a footer explaining the dispersion and query-failure conventions.
Json SummaryJson(const attack::AttackRun& run, const AggregateReport& report,
                 const attack::RunManifest& manifest);

// Human-readable "TPR  92.08% ± 0.31%" block.
std::string SummaryText(const AggregateReport& report);

}  // namespace idia::eval

#endif  // IDIA_EVAL_REPORT_H_
