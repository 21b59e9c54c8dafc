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

#include "idia/attack/attack.h"

#include <algorithm>
#include <numeric>
#include <random>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "idia/core/digest.h"
#include "idia/core/status_macros.h"

namespace idia::attack {
namespace {

// Unbiased draw from [0, n) (Lemire's multiply-and-reject).
uint64_t Bounded(std::mt19937_64& rng, uint64_t n) {
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * n;
  auto low = static_cast<uint64_t>(m);
  if (low < n) {
    const uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(rng()) * n;
      low = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

struct Evaluated {
  const Identity* identity;
  size_t target_index;
};

}  // namespace

absl::StatusOr<Fraction> Score(std::span<const int> decisions) {
  if (decisions.empty()) {
    return absl::InvalidArgumentError("score of an empty decision list");
  }
  int64_t correct = 0;
  for (int d : decisions) {
    if (d != 0 && d != 1) {
      return absl::InvalidArgumentError("decisions must be 0 or 1");
    }
    correct += d;
  }
  return Fraction(correct, static_cast<int64_t>(decisions.size()));
}

uint64_t TrialSeed(uint64_t seed, int trial, std::string_view identity_id) {
  return HashCombine(HashCombine(seed, static_cast<uint64_t>(trial)),
                     Fnv1a64(identity_id));
}

std::vector<size_t> SampleWithoutReplacement(size_t pool, size_t k,
                                             uint64_t seed) {
  k = std::min(k, pool);
  std::vector<size_t> order(pool);
  std::iota(order.begin(), order.end(), size_t{0});
  std::mt19937_64 rng(seed);
  for (size_t i = 0; i < k; ++i) {
    const size_t j = i + static_cast<size_t>(Bounded(rng, pool - i));
    std::swap(order[i], order[j]);
  }
  order.resize(k);
  return order;
}

std::optional<size_t> AttackRun::IdentityIndex(std::string_view id) const {
  for (size_t i = 0; i < identities.size(); ++i) {
    if (identities[i].id == id) return i;
  }
  return std::nullopt;
}

absl::StatusOr<AttackRun> RunAttack(const std::vector<Identity>& roster,
                                    const PromptSet& prompts,
                                    const target::TargetBackend& backend,
                                    const AttackConfig& config,
                                    const RunOptions& options) {
  IDIA_RETURN_IF_ERROR(ValidateAttackConfig(config));

  AttackRun run;
  run.config = config;
  run.prompt_digest = prompts.digest();
  run.prompt_count = prompts.size();
  run.backend = backend.Describe();
  run.started = std::chrono::system_clock::now();

  std::vector<Evaluated> evaluated;
  std::vector<std::string> missing_names;
  std::vector<std::string> duplicate_ids;
  std::vector<std::string> short_pools;
  std::unordered_map<std::string, size_t> seen_ids;
  for (const Identity& identity : roster) {
    if (!seen_ids.emplace(identity.id, 0).second) {
      duplicate_ids.push_back(identity.id);
    }
    IdentityStatus status{identity.id, identity.name, identity.ground_truth,
                          identity.images.size(), false, ""};
    if (identity.images.size() < static_cast<size_t>(config.k)) {
      if (config.insufficient_images_policy == InsufficientImagesPolicy::kError) {
        short_pools.push_back(
            fmt::format("{} ({} images)", identity.id, identity.images.size()));
        continue;
      }
      status.skipped = true;
      status.skip_reason = fmt::format("insufficient-images ({} < {})",
                                       identity.images.size(), config.k);
      run.identities.push_back(std::move(status));
      continue;
    }
    const std::optional<size_t> target = prompts.IndexOf(identity.name);
    if (!target.has_value()) {
      missing_names.push_back(identity.id);
    } else {
      evaluated.push_back({&identity, *target});
    }
    run.identities.push_back(std::move(status));
  }
  if (!duplicate_ids.empty()) {
    return absl::FailedPreconditionError(
        fmt::format("duplicate identity ids: {}", fmt::join(duplicate_ids, ", ")));
  }
  if (!short_pools.empty()) {
    return absl::FailedPreconditionError(
        fmt::format("identities with fewer than k = {} images: {}", config.k,
                    fmt::join(short_pools, ", ")));
  }
  if (!missing_names.empty()) {
    return absl::FailedPreconditionError(
        fmt::format("names missing from prompts for identities: {}",
                    fmt::join(missing_names, ", ")));
  }

  const size_t batch = std::max<size_t>(1, options.identities_per_batch);
  std::vector<ImageRef> images;
  for (int trial = 0; trial < config.trials; ++trial) {
    for (size_t begin = 0; begin < evaluated.size(); begin += batch) {
      const size_t end = std::min(evaluated.size(), begin + batch);
      images.clear();
      std::vector<size_t> offsets{0};
      for (size_t e = begin; e < end; ++e) {
        const Identity& identity = *evaluated[e].identity;
        for (size_t pos : SampleWithoutReplacement(
                 identity.images.size(), static_cast<size_t>(config.k),
                 TrialSeed(config.seed, trial, identity.id))) {
          images.push_back(identity.images[pos]);
        }
        offsets.push_back(images.size());
      }
      IDIA_ASSIGN_OR_RETURN(
          records, target::QueryBatch(backend, images, prompts,
                                      config.parallelism, options.retry));
      for (size_t e = begin; e < end; ++e) {
        TrialOutcome outcome;
        outcome.trial = trial;
        outcome.identity_id = evaluated[e].identity->id;
        for (size_t r = offsets[e - begin]; r < offsets[e - begin + 1]; ++r) {
          const target::QueryRecord& record = records[r];
          outcome.sampled.push_back(record.image.value);
          if (!record.ok()) {
            outcome.results.push_back(ImageResult::kFailed);
            ++run.failed_queries;
            continue;
          }
          const int hit = Decide(*record.prediction, evaluated[e].target_index);
          outcome.results.push_back(hit ? ImageResult::kHit : ImageResult::kMiss);
          outcome.correct_count += hit;
          ++outcome.queried_count;
        }
        outcome.decision =
            outcome.queried_count > 0
                ? PredictMembership(outcome.score(), config.tau)
                : 0;
        run.outcomes.push_back(std::move(outcome));
      }
    }
  }
  run.finished = std::chrono::system_clock::now();
  return run;
}

}  // namespace idia::attack
