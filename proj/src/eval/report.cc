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

#include "idia/eval/report.h"

#include <cctype>

#include <fmt/format.h>

namespace idia::eval {

std::optional<MetricStat> MetricByName(const AggregateReport& report,
                                       std::string_view name) {
  if (name == "tpr") return report.tpr;
  if (name == "tnr") return report.tnr;
  if (name == "fpr") return report.fpr;
  if (name == "fnr") return report.fnr;
  if (name == "accuracy") return report.accuracy;
  return std::nullopt;
}

namespace {

void AppendRows(std::string& out, int k, std::optional<int> m,
                const AggregateReport& report) {
  const std::string m_text = m.has_value() ? fmt::format("{}", *m) : "";
  for (std::string_view metric : kMetricNames) {
    std::optional<MetricStat> stat = MetricByName(report, metric);
    if (!stat.has_value()) continue;
    out += fmt::format("{},{},{},{},{}\n", k, m_text, metric, stat->mean,
                       stat->stddev);
  }
}

constexpr char kCsvHeader[] = "k,m,metric,mean,std\n";

}  // namespace

std::string SeriesCsv(const MetricSeries& series, std::optional<int> m) {
  std::string out = kCsvHeader;
  for (size_t i = 0; i < series.axis.size(); ++i) {
    AppendRows(out, series.axis[i], m, series.points[i]);
  }
  return out;
}

std::string GridCsv(const SweepGrid& grid) {
  std::string out = kCsvHeader;
  for (size_t r = 0; r < grid.row_axis.size(); ++r) {
    for (size_t c = 0; c < grid.col_axis.size(); ++c) {
      AppendRows(out, grid.row_axis[r], grid.col_axis[c], grid.cells[r][c]);
    }
  }
  return out;
}

std::string ThresholdCurveCsv(const ThresholdCurve& curve) {
  std::string out = "threshold,tpr_mean,tpr_std,fpr_mean,fpr_std\n";
  for (const ThresholdPoint& p : curve.points) {
    if (p.fpr.has_value()) {
      out += fmt::format("{},{},{},{},{}\n", p.threshold, p.tpr.mean,
                         p.tpr.stddev, p.fpr->mean, p.fpr->stddev);
    } else {
      out += fmt::format("{},{},{},,\n", p.threshold, p.tpr.mean, p.tpr.stddev);
    }
  }
  return out;
}

std::string SeriesPlotData(const MetricSeries& series, std::string_view metric) {
  std::string out = fmt::format("# x=k y={} yerr=std\n", metric);
  for (size_t i = 0; i < series.axis.size(); ++i) {
    if (auto stat = MetricByName(series.points[i], metric)) {
      out += fmt::format("{} {} {}\n", series.axis[i], stat->mean, stat->stddev);
    }
  }
  return out;
}

std::string GridPlotData(const SweepGrid& grid, std::string_view metric) {
  std::string out;
  for (size_t c = 0; c < grid.col_axis.size(); ++c) {
    if (c > 0) out += '\n';
    out += fmt::format("# m={} x=k y={} yerr=std\n", grid.col_axis[c], metric);
    for (size_t r = 0; r < grid.row_axis.size(); ++r) {
      if (auto stat = MetricByName(grid.cells[r][c], metric)) {
        out += fmt::format("{} {} {}\n", grid.row_axis[r], stat->mean,
                           stat->stddev);
      }
    }
  }
  return out;
}

Json SummaryJson(const attack::AttackRun& run, const AggregateReport& report,
                 const attack::RunManifest& manifest) {
  int64_t skipped = 0;
  for (const auto& s : run.identities) skipped += s.skipped;
  return Json{
      {"config", ToJson(run.config)},
      {"backend", run.backend},
      {"prompt_digest", run.prompt_digest},
      {"prompt_count", run.prompt_count},
      {"toolkit_version", manifest.toolkit_version},
      {"identities", run.identities.size()},
      {"skipped_identities", skipped},
      {"failed_queries", run.failed_queries},
      {"aggregate", ToJson(report)},
      {"footer",
       Json::array(
           {"std is the population standard deviation across trials",
            "rates are computed over identities, not images",
            "identities with unknown ground truth are excluded from rates and "
            "reported as a predicted-member census",
            "queries that failed after retries are dropped and the score uses "
            "the answered images only"})}};
}

std::string SummaryText(const AggregateReport& report) {
  std::string out = fmt::format(
      "trials {}  members {}  non-members {}\n", report.trials, report.members,
      report.nonmembers);
  for (std::string_view metric : kMetricNames) {
    std::string label(metric);
    for (char& ch : label) ch = static_cast<char>(std::toupper(ch));
    if (auto stat = MetricByName(report, metric)) {
      out += fmt::format("{:<9}{:6.2f}% ± {:.2f}%\n", label, 100.0 * stat->mean,
                         100.0 * stat->stddev);
    } else {
      out += fmt::format("{:<9}undefined (no non-members)\n", label);
    }
  }
  if (report.unknown_predicted_member.mean > 0 ||
      report.unknown_predicted_nonmember.mean > 0) {
    out += fmt::format("unknown-truth census: {:.2f} predicted member, {:.2f} "
                       "predicted non-member (mean per trial)\n",
                       report.unknown_predicted_member.mean,
                       report.unknown_predicted_nonmember.mean);
  }
  out += "std: population standard deviation across trials\n";
  return out;
}

}  // namespace idia::eval
