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

#include "idia/cli/config.h"

#include <cstdlib>
#include <set>

#include <fmt/format.h>

#include "idia/core/text.h"

namespace idia::cli {

absl::StatusOr<AttackConfig> ParseConfig(std::string_view text,
                                         std::string_view source) {
  AttackConfig config;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = StripAsciiWhitespace(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    auto error = [&](std::string_view what) {
      return absl::InvalidArgumentError(
          fmt::format("{}:{}: {}", source, line_no, what));
    };
    if (eq == std::string_view::npos) return error("expected 'key = value'");
    const std::string_view key = StripAsciiWhitespace(line.substr(0, eq));
    const std::string_view value = StripAsciiWhitespace(line.substr(eq + 1));
    if (!seen.emplace(key).second) {
      return error(fmt::format("duplicate key '{}'", key));
    }
    int64_t i = 0;
    if (key == "k" || key == "trials" || key == "parallelism") {
      if (!ParseInt64(value, &i) || i < 1 || i > (int64_t{1} << 30)) {
        return error(fmt::format("{} must be a positive integer", key));
      }
      (key == "k" ? config.k : key == "trials" ? config.trials
                                               : config.parallelism) =
          static_cast<int>(i);
    } else if (key == "tau") {
      if (!ParseDouble(value, &config.tau)) return error("tau must be a number");
    } else if (key == "seed") {
      if (!ParseUint64(value, &config.seed)) {
        return error("seed must be an unsigned 64-bit integer");
      }
    } else if (key == "insufficient_images_policy") {
      auto policy = ParsePolicy(value);
      if (!policy.ok()) return error(std::string(policy.status().message()));
      config.insufficient_images_policy = *policy;
    } else {
      return error(fmt::format("unknown key '{}'", key));
    }
  }
  if (absl::Status s = ValidateAttackConfig(config); !s.ok()) {
    return absl::InvalidArgumentError(
        fmt::format("{}: {}", source, std::string(s.message())));
  }
  return config;
}

absl::Status ApplyEnvironment(AttackConfig& config) {
  const char* seed = std::getenv("IDIA_SEED");
  if (seed == nullptr || *seed == '\0') return absl::OkStatus();
  if (!ParseUint64(seed, &config.seed)) {
    return absl::InvalidArgumentError(
        fmt::format("IDIA_SEED='{}' is not an unsigned 64-bit integer", seed));
  }
  return absl::OkStatus();
}

std::string SerializeConfig(const AttackConfig& config) {
  return fmt::format(
      "k = {}\ntrials = {}\ntau = {}\nseed = {}\nparallelism = {}\n"
      "insufficient_images_policy = {}\n",
      config.k, config.trials, config.tau, config.seed, config.parallelism,
      PolicyName(config.insufficient_images_policy));
}

}  // namespace idia::cli
