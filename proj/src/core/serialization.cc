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

#include "idia/core/serialization.h"

#include <fstream>
#include <sstream>
#include <type_traits>

#include <fmt/format.h>
#include "idia/core/text.h"
#include "idia/core/status_macros.h"

namespace idia {
namespace {

template <typename T>
absl::StatusOr<T> Field(const Json& json, const char* key) {
  if (!json.is_object()) {
    return absl::InvalidArgumentError("expected a JSON object");
  }
  auto it = json.find(key);
  if (it == json.end()) {
    return absl::InvalidArgumentError(fmt::format("missing field '{}'", key));
  }
  if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
    if (!it->is_number_integer() ||
        (std::is_unsigned_v<T> && !it->is_number_unsigned())) {
      return absl::InvalidArgumentError(fmt::format(
          "field '{}' must be {}", key,
          std::is_unsigned_v<T> ? "a non-negative integer" : "an integer"));
    }
  }
  try {
    return it->template get<T>();
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(
        fmt::format("field '{}': {}", key, e.what()));
  }
}

Json StatJson(const MetricStat& s) {
  return Json{{"mean", s.mean}, {"std", s.stddev}};
}

absl::StatusOr<MetricStat> StatFromJson(const Json& json, const char* key) {
  IDIA_ASSIGN_OR_RETURN(obj, Field<Json>(json, key));
  IDIA_ASSIGN_OR_RETURN(mean, Field<double>(obj, "mean"));
  IDIA_ASSIGN_OR_RETURN(stddev, Field<double>(obj, "std"));
  return MetricStat{mean, stddev};
}

Json OptionalStatJson(const std::optional<MetricStat>& s) {
  return s.has_value() ? StatJson(*s) : Json(nullptr);
}

absl::StatusOr<std::optional<MetricStat>> OptionalStatFromJson(
    const Json& json, const char* key) {
  auto it = json.find(key);
  if (it == json.end() || it->is_null()) return std::optional<MetricStat>();
  IDIA_ASSIGN_OR_RETURN(stat, StatFromJson(json, key));
  return std::optional<MetricStat>(stat);
}

}  // namespace

Json ToJson(const ImageRef& image) {
  return Json{{"kind", ImageKindName(image.kind)}, {"value", image.value}};
}

Json ToJson(const Identity& identity) {
  Json images = Json::array();
  for (const ImageRef& image : identity.images) images.push_back(ToJson(image));
  return Json{{"id", identity.id},
              {"name", identity.name},
              {"label", LabelName(identity.ground_truth)},
              {"images", std::move(images)}};
}

Json ToJson(const PromptSet& prompts) {
  return Json{{"prompts", prompts.prompts()}, {"digest", prompts.digest()}};
}

Json ToJson(const AttackConfig& config) {
  return Json{{"k", config.k},
              {"trials", config.trials},
              {"tau", config.tau},
              {"seed", config.seed},
              {"parallelism", config.parallelism},
              {"insufficient_images_policy",
               PolicyName(config.insufficient_images_policy)}};
}

Json ToJson(const TrialOutcome& outcome) {
  Json results = Json::array();
  for (ImageResult r : outcome.results) results.push_back(static_cast<int>(r));
  return Json{{"trial", outcome.trial},
              {"identity", outcome.identity_id},
              {"correct", outcome.correct_count},
              {"queried", outcome.queried_count},
              {"decision", outcome.decision},
              {"sampled", outcome.sampled},
              {"results", std::move(results)}};
}

Json ToJson(const ConfusionReport& r) {
  Json out{{"tp", r.tp},
           {"fp", r.fp},
           {"tn", r.tn},
           {"fn", r.fn},
           {"excluded", r.excluded},
           {"unknown_predicted_member", r.unknown_predicted_member},
           {"unknown_predicted_nonmember", r.unknown_predicted_nonmember}};
  return out;
}

Json ToJson(const AggregateReport& r) {
  return Json{{"trials", r.trials},
              {"members", r.members},
              {"nonmembers", r.nonmembers},
              {"tpr", StatJson(r.tpr)},
              {"tnr", OptionalStatJson(r.tnr)},
              {"fpr", OptionalStatJson(r.fpr)},
              {"fnr", StatJson(r.fnr)},
              {"accuracy", StatJson(r.accuracy)},
              {"excluded", StatJson(r.excluded)},
              {"unknown_predicted_member", StatJson(r.unknown_predicted_member)},
              {"unknown_predicted_nonmember",
               StatJson(r.unknown_predicted_nonmember)}};
}

Json ToJson(const SweepGrid& grid) {
  Json cells = Json::array();
  for (const auto& row : grid.cells) {
    Json out_row = Json::array();
    for (const AggregateReport& cell : row) out_row.push_back(ToJson(cell));
    cells.push_back(std::move(out_row));
  }
  return Json{{"row_axis", grid.row_axis},
              {"col_axis", grid.col_axis},
              {"cells", std::move(cells)}};
}

absl::StatusOr<ImageRef> ImageRefFromJson(const Json& json) {
  if (json.is_string()) {
    return ImageRef{ImageKind::kOpaqueToken, json.get<std::string>()};
  }
  IDIA_ASSIGN_OR_RETURN(kind_text, Field<std::string>(json, "kind"));
  IDIA_ASSIGN_OR_RETURN(kind, ParseImageKind(kind_text));
  IDIA_ASSIGN_OR_RETURN(value, Field<std::string>(json, "value"));
  if (value.empty()) return absl::InvalidArgumentError("empty image value");
  return ImageRef{kind, std::move(value)};
}

absl::StatusOr<Identity> IdentityFromJson(const Json& json) {
  Identity identity;
  IDIA_ASSIGN_OR_RETURN(id, Field<std::string>(json, "id"));
  IDIA_ASSIGN_OR_RETURN(name, Field<std::string>(json, "name"));
  identity.id = std::move(id);
  identity.name = std::move(name);
  if (auto it = json.find("label"); it != json.end()) {
    if (!it->is_string()) return absl::InvalidArgumentError("label must be a string");
    IDIA_ASSIGN_OR_RETURN(label, ParseLabel(it->get<std::string>()));
    identity.ground_truth = label;
  }
  if (auto it = json.find("images"); it != json.end()) {
    if (!it->is_array()) {
      return absl::InvalidArgumentError("images must be an array");
    }
    for (const Json& item : *it) {
      IDIA_ASSIGN_OR_RETURN(image, ImageRefFromJson(item));
      identity.images.push_back(std::move(image));
    }
  }
  return identity;
}

absl::StatusOr<PromptSet> PromptSetFromJson(const Json& json) {
  IDIA_ASSIGN_OR_RETURN(prompts, Field<std::vector<std::string>>(json, "prompts"));
  return PromptSet::Create(std::move(prompts));
}

absl::StatusOr<AttackConfig> AttackConfigFromJson(const Json& json) {
  AttackConfig config;
  IDIA_ASSIGN_OR_RETURN(k, Field<int>(json, "k"));
  IDIA_ASSIGN_OR_RETURN(trials, Field<int>(json, "trials"));
  IDIA_ASSIGN_OR_RETURN(tau, Field<double>(json, "tau"));
  IDIA_ASSIGN_OR_RETURN(seed, Field<uint64_t>(json, "seed"));
  IDIA_ASSIGN_OR_RETURN(parallelism, Field<int>(json, "parallelism"));
  IDIA_ASSIGN_OR_RETURN(policy_text,
                        Field<std::string>(json, "insufficient_images_policy"));
  IDIA_ASSIGN_OR_RETURN(policy, ParsePolicy(policy_text));
  config.k = k;
  config.trials = trials;
  config.tau = tau;
  config.seed = seed;
  config.parallelism = parallelism;
  config.insufficient_images_policy = policy;
  if (absl::Status s = ValidateAttackConfig(config); !s.ok()) return s;
  return config;
}

absl::StatusOr<TrialOutcome> TrialOutcomeFromJson(const Json& json) {
  TrialOutcome outcome;
  IDIA_ASSIGN_OR_RETURN(trial, Field<int>(json, "trial"));
  IDIA_ASSIGN_OR_RETURN(identity, Field<std::string>(json, "identity"));
  IDIA_ASSIGN_OR_RETURN(correct, Field<int64_t>(json, "correct"));
  IDIA_ASSIGN_OR_RETURN(queried, Field<int64_t>(json, "queried"));
  IDIA_ASSIGN_OR_RETURN(decision, Field<int>(json, "decision"));
  IDIA_ASSIGN_OR_RETURN(sampled, Field<std::vector<std::string>>(json, "sampled"));
  IDIA_ASSIGN_OR_RETURN(results, Field<std::vector<int>>(json, "results"));
  if (sampled.size() != results.size()) {
    return absl::InvalidArgumentError("sampled/results length mismatch");
  }
  int64_t hits = 0;
  int64_t answered = 0;
  for (int r : results) {
    if (r < -1 || r > 1) {
      return absl::InvalidArgumentError("result entries must be -1, 0 or 1");
    }
    hits += r == 1;
    answered += r != -1;
    outcome.results.push_back(static_cast<ImageResult>(r));
  }
  if (hits != correct || answered != queried) {
    return absl::InvalidArgumentError(
        "correct/queried disagree with per-image results");
  }
  if (decision != 0 && decision != 1) {
    return absl::InvalidArgumentError("decision must be 0 or 1");
  }
  outcome.trial = trial;
  outcome.identity_id = std::move(identity);
  outcome.correct_count = correct;
  outcome.queried_count = queried;
  outcome.decision = decision;
  outcome.sampled = std::move(sampled);
  return outcome;
}

absl::StatusOr<ConfusionReport> ConfusionReportFromJson(const Json& json) {
  ConfusionReport r;
  IDIA_ASSIGN_OR_RETURN(tp, Field<int64_t>(json, "tp"));
  IDIA_ASSIGN_OR_RETURN(fp, Field<int64_t>(json, "fp"));
  IDIA_ASSIGN_OR_RETURN(tn, Field<int64_t>(json, "tn"));
  IDIA_ASSIGN_OR_RETURN(fn, Field<int64_t>(json, "fn"));
  IDIA_ASSIGN_OR_RETURN(excluded, Field<int64_t>(json, "excluded"));
  IDIA_ASSIGN_OR_RETURN(upm, Field<int64_t>(json, "unknown_predicted_member"));
  IDIA_ASSIGN_OR_RETURN(upn,
                        Field<int64_t>(json, "unknown_predicted_nonmember"));
  if (tp < 0 || fp < 0 || tn < 0 || fn < 0) {
    return absl::InvalidArgumentError("confusion counts must be non-negative");
  }
  r.tp = tp;
  r.fp = fp;
  r.tn = tn;
  r.fn = fn;
  r.excluded = excluded;
  r.unknown_predicted_member = upm;
  r.unknown_predicted_nonmember = upn;
  return r;
}

absl::StatusOr<AggregateReport> AggregateReportFromJson(const Json& json) {
  AggregateReport r;
  IDIA_ASSIGN_OR_RETURN(trials, Field<int>(json, "trials"));
  IDIA_ASSIGN_OR_RETURN(members, Field<int64_t>(json, "members"));
  IDIA_ASSIGN_OR_RETURN(nonmembers, Field<int64_t>(json, "nonmembers"));
  IDIA_ASSIGN_OR_RETURN(tpr, StatFromJson(json, "tpr"));
  IDIA_ASSIGN_OR_RETURN(tnr, OptionalStatFromJson(json, "tnr"));
  IDIA_ASSIGN_OR_RETURN(fpr, OptionalStatFromJson(json, "fpr"));
  IDIA_ASSIGN_OR_RETURN(fnr, StatFromJson(json, "fnr"));
  IDIA_ASSIGN_OR_RETURN(accuracy, StatFromJson(json, "accuracy"));
  IDIA_ASSIGN_OR_RETURN(excluded, StatFromJson(json, "excluded"));
  IDIA_ASSIGN_OR_RETURN(upm, StatFromJson(json, "unknown_predicted_member"));
  IDIA_ASSIGN_OR_RETURN(upn, StatFromJson(json, "unknown_predicted_nonmember"));
  r.trials = trials;
  r.members = members;
  r.nonmembers = nonmembers;
  r.tpr = tpr;
  r.tnr = tnr;
  r.fpr = fpr;
  r.fnr = fnr;
  r.accuracy = accuracy;
  r.excluded = excluded;
  r.unknown_predicted_member = upm;
  r.unknown_predicted_nonmember = upn;
  return r;
}

absl::StatusOr<SweepGrid> SweepGridFromJson(const Json& json) {
  SweepGrid grid;
  IDIA_ASSIGN_OR_RETURN(rows, Field<std::vector<int>>(json, "row_axis"));
  IDIA_ASSIGN_OR_RETURN(cols, Field<std::vector<int>>(json, "col_axis"));
  IDIA_ASSIGN_OR_RETURN(cells, Field<Json>(json, "cells"));
  grid.row_axis = std::move(rows);
  grid.col_axis = std::move(cols);
  if (!cells.is_array()) return absl::InvalidArgumentError("cells must be an array");
  for (const Json& row : cells) {
    if (!row.is_array()) return absl::InvalidArgumentError("cell row must be an array");
    std::vector<AggregateReport> out_row;
    for (const Json& cell : row) {
      IDIA_ASSIGN_OR_RETURN(report, AggregateReportFromJson(cell));
      out_row.push_back(std::move(report));
    }
    grid.cells.push_back(std::move(out_row));
  }
  if (absl::Status s = ValidateSweepGrid(grid); !s.ok()) return s;
  return grid;
}

absl::StatusOr<std::vector<Json>> ParseJsonLines(std::string_view text,
                                                 std::string_view source) {
  std::vector<Json> out;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    line = StripAsciiWhitespace(line);
    if (line.empty()) continue;
    Json value = Json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (value.is_discarded()) {
      return absl::InvalidArgumentError(
          fmt::format("{}:{}: malformed JSON record", source, line_no));
    }
    out.push_back(std::move(value));
  }
  return out;
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(fmt::format("cannot open {}", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::PermissionDeniedError(fmt::format("cannot write {}", path));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) return absl::DataLossError(fmt::format("short write to {}", path));
  return absl::OkStatus();
}

absl::StatusOr<std::vector<Identity>> ParseRoster(std::string_view text,
                                                  std::string_view source) {
  std::vector<Identity> roster;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    line = StripAsciiWhitespace(line);
    if (line.empty()) continue;
    Json value = Json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (value.is_discarded()) {
      return absl::InvalidArgumentError(
          fmt::format("{}:{}: malformed JSON record", source, line_no));
    }
    auto identity = IdentityFromJson(value);
    if (!identity.ok()) {
      return absl::InvalidArgumentError(fmt::format("{}:{}: {}", source, line_no, identity.status().message()));
    }
    if (absl::Status s = ValidateIdentity(*identity); !s.ok()) {
      return absl::InvalidArgumentError(
          fmt::format("{}:{}: {}", source, line_no, s.message()));
    }
    roster.push_back(*std::move(identity));
  }
  return roster;
}

absl::StatusOr<std::vector<Identity>> ReadRoster(const std::string& path) {
  IDIA_ASSIGN_OR_RETURN(text, ReadFile(path));
  return ParseRoster(text, path);
}

std::string SerializeRoster(const std::vector<Identity>& roster) {
  std::string out;
  for (const Identity& identity : roster) {
    out += ToJson(identity).dump();
    out += '\n';
  }
  return out;
}

absl::StatusOr<PromptSet> ParsePrompts(std::string_view text) {
  std::vector<std::string> prompts;
  for (std::string_view line : SplitLines(text)) {
    line = StripAsciiWhitespace(line);
    if (line.empty()) continue;
    prompts.emplace_back(line);
  }
  return PromptSet::Create(std::move(prompts));
}

absl::StatusOr<PromptSet> ReadPrompts(const std::string& path) {
  IDIA_ASSIGN_OR_RETURN(text, ReadFile(path));
  return ParsePrompts(text);
}

std::string SerializePrompts(const PromptSet& prompts) {
  std::string out;
  for (const std::string& p : prompts.prompts()) {
    out += p;
    out += '\n';
  }
  return out;
}

}  // namespace idia
