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

#ifndef IDIA_CORE_SERIALIZATION_H_
#define IDIA_CORE_SERIALIZATION_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "idia/core/types.h"
#include "json.hpp"

namespace idia {

using Json = nlohmann::ordered_json;

// Field-for-field JSON forms of the domain types. Key order is fixed so that
// dump() output is byte-stable.
Json ToJson(const ImageRef& image);
Json ToJson(const Identity& identity);
Json ToJson(const PromptSet& prompts);
Json ToJson(const AttackConfig& config);
Json ToJson(const TrialOutcome& outcome);
Json ToJson(const ConfusionReport& report);
Json ToJson(const AggregateReport& report);
Json ToJson(const SweepGrid& grid);

absl::StatusOr<ImageRef> ImageRefFromJson(const Json& json);
absl::StatusOr<Identity> IdentityFromJson(const Json& json);
absl::StatusOr<PromptSet> PromptSetFromJson(const Json& json);
absl::StatusOr<AttackConfig> AttackConfigFromJson(const Json& json);
absl::StatusOr<TrialOutcome> TrialOutcomeFromJson(const Json& json);
absl::StatusOr<ConfusionReport> ConfusionReportFromJson(const Json& json);
absl::StatusOr<AggregateReport> AggregateReportFromJson(const Json& json);
absl::StatusOr<SweepGrid> SweepGridFromJson(const Json& json);

// One JSON value per non-blank line. Errors carry "<source>:<line>: ".
absl::StatusOr<std::vector<Json>> ParseJsonLines(std::string_view text,
                                                 std::string_view source);

absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, std::string_view contents);

// Roster file: one Identity record per line.
absl::StatusOr<std::vector<Identity>> ParseRoster(std::string_view text,
                                                  std::string_view source);
absl::StatusOr<std::vector<Identity>> ReadRoster(const std::string& path);
std::string SerializeRoster(const std::vector<Identity>& roster);

// Prompt file: one UTF-8 name per line; blank lines are ignored.
absl::StatusOr<PromptSet> ParsePrompts(std::string_view text);
absl::StatusOr<PromptSet> ReadPrompts(const std::string& path);
std::string SerializePrompts(const PromptSet& prompts);

}  // namespace idia

#endif  // IDIA_CORE_SERIALIZATION_H_
