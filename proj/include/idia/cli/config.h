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

#ifndef IDIA_CLI_CONFIG_H_
#define IDIA_CLI_CONFIG_H_

#include <string_view>

#include "absl/status/statusor.h"
#include "idia/core/types.h"

namespace idia::cli {

// Flat "key = value" text. Recognized keys: k, trials, tau, seed,
// parallelism, insufficient_images_policy. '#' starts a comment. Unknown or
// repeated keys are errors. Missing keys keep their defaults (k = 30,
// trials = 20, tau = 0.5, seed = 0, parallelism = 1, policy = skip).
absl::StatusOr<AttackConfig> ParseConfig(std::string_view text,
                                         std::string_view source);

// Applies IDIA_SEED from the environment, if set.
absl::Status ApplyEnvironment(AttackConfig& config);

std::string SerializeConfig(const AttackConfig& config);

}  // namespace idia::cli

#endif  // IDIA_CLI_CONFIG_H_
