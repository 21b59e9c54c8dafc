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

#ifndef IDIA_ATTACK_ATTACK_H_
#define IDIA_ATTACK_ATTACK_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "idia/core/fraction.h"
#include "idia/core/types.h"
#include "idia/target/backend.h"

namespace idia::attack {

// 1 iff the model predicted the identity's own name.
inline int Decide(Prediction prediction, size_t target_index) {
  return prediction.prompt_index == target_index ? 1 : 0;
}

// Fraction of correct decisions, i.e. the attack score over the queried
// images. Fails on an empty list.
absl::StatusOr<Fraction> Score(std::span<const int> decisions);

// Membership prediction: 1 iff score > tau, strictly. A score equal to the
// threshold is a non-member.
inline int PredictMembership(const Fraction& score, double tau) {
  return score.GreaterThan(tau) ? 1 : 0;
}

// Per-(trial, identity) RNG seed. Part of the replay contract.
uint64_t TrialSeed(uint64_t seed, int trial, std::string_view identity_id);

// k distinct positions from [0, pool), in sampling order: a partial
// Fisher-Yates shuffle driven by mt19937_64 with unbiased bounded draws.
std::vector<size_t> SampleWithoutReplacement(size_t pool, size_t k,
                                             uint64_t seed);

struct IdentityStatus {
  std::string id;
  std::string name;
  MembershipLabel label = MembershipLabel::kUnknown;
  size_t pool_size = 0;
  bool skipped = false;
  std::string skip_reason;

  friend bool operator==(const IdentityStatus&, const IdentityStatus&) = default;
};

struct AttackRun {
  AttackConfig config;
  std::string prompt_digest;
  size_t prompt_count = 0;
  std::string backend;
  std::vector<IdentityStatus> identities;
  // Trial-major, then roster order. Skipped identities have no outcomes.
  std::vector<TrialOutcome> outcomes;
  int64_t failed_queries = 0;
  std::chrono::system_clock::time_point started;
  std::chrono::system_clock::time_point finished;

  // Index into `identities`, or nullopt.
  std::optional<size_t> IdentityIndex(std::string_view id) const;
};

struct RunOptions {
  target::RetryPolicy retry;
  // Identities whose queries are issued as one batch.
  size_t identities_per_batch = 512;
};

// Runs the multi-trial attack. For each trial and each evaluated identity,
// k images are sampled without replacement from the identity's pool and
// each is sent to the backend once. Queries that still fail after retries
// are dropped from that trial's score.
//
// Fails with kFailedPrecondition if an evaluated identity's name is not a
// prompt, ids repeat, or an identity has fewer than k images under the
// "error" policy. A batch in which every query failed aborts the run with
// the backend's status.
absl::StatusOr<AttackRun> RunAttack(const std::vector<Identity>& roster,
                                    const PromptSet& prompts,
                                    const target::TargetBackend& backend,
                                    const AttackConfig& config,
                                    const RunOptions& options = {});

}  // namespace idia::attack

#endif  // IDIA_ATTACK_ATTACK_H_
