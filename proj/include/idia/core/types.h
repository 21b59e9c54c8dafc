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

#ifndef IDIA_CORE_TYPES_H_
#define IDIA_CORE_TYPES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "idia/core/fraction.h"

namespace idia {

enum class MembershipLabel { kMember, kNonMember, kUnknown };

std::string_view LabelName(MembershipLabel label);
absl::StatusOr<MembershipLabel> ParseLabel(std::string_view text);

enum class ImageKind { kFilePath, kEmbeddingRow, kOpaqueToken };

std::string_view ImageKindName(ImageKind kind);
absl::StatusOr<ImageKind> ParseImageKind(std::string_view text);

struct ImageRef {
  ImageKind kind = ImageKind::kOpaqueToken;
  std::string value;

  friend bool operator==(const ImageRef&, const ImageRef&) = default;
};

struct ImageRefHash {
  size_t operator()(const ImageRef& ref) const;
};

struct Identity {
  std::string id;
  std::string name;
  std::vector<ImageRef> images;
  MembershipLabel ground_truth = MembershipLabel::kUnknown;

  friend bool operator==(const Identity&, const Identity&) = default;
};

// Checks the per-record invariants: non-empty id, name non-empty after
// normalization, non-empty image values, no duplicate images.
absl::Status ValidateIdentity(const Identity& identity);

// Ordered candidate-name list. Prediction indices refer to this order.
class PromptSet {
 public:
  // Fails if `prompts` is empty or two entries normalize to the same name.
  static absl::StatusOr<PromptSet> Create(std::vector<std::string> prompts);

  const std::vector<std::string>& prompts() const { return prompts_; }
  size_t size() const { return prompts_.size(); }
  const std::string& operator[](size_t i) const { return prompts_[i]; }

  // Position of the prompt whose normalized form equals NormalizeName(name).
  std::optional<size_t> IndexOf(std::string_view name) const;
  // As IndexOf, for a key that is already in normalized form.
  std::optional<size_t> IndexOfNormalized(const std::string& key) const;

  // Hex SHA-256 over the prompts joined with '\n'; order-sensitive.
  const std::string& digest() const { return digest_; }

  friend bool operator==(const PromptSet& a, const PromptSet& b) {
    return a.prompts_ == b.prompts_;
  }

 private:
  PromptSet() = default;

  std::vector<std::string> prompts_;
  std::unordered_map<std::string, size_t> index_of_;
  std::string digest_;
};

struct Prediction {
  size_t prompt_index = 0;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

enum class InsufficientImagesPolicy { kSkip, kError };

std::string_view PolicyName(InsufficientImagesPolicy policy);
absl::StatusOr<InsufficientImagesPolicy> ParsePolicy(std::string_view text);

struct AttackConfig {
  int k = 30;
  int trials = 20;
  double tau = 0.5;
  uint64_t seed = 0;
  int parallelism = 1;
  InsufficientImagesPolicy insufficient_images_policy =
      InsufficientImagesPolicy::kSkip;

  friend bool operator==(const AttackConfig&, const AttackConfig&) = default;
};

absl::Status ValidateAttackConfig(const AttackConfig& config);

// Per-image outcome in the order images were sampled.
enum class ImageResult : int8_t { kFailed = -1, kMiss = 0, kHit = 1 };

struct TrialOutcome {
  int trial = 0;
  std::string identity_id;
  int64_t correct_count = 0;
  // Answered queries; images whose query failed after retries are excluded.
  int64_t queried_count = 0;
  int decision = 0;
  std::vector<std::string> sampled;
  std::vector<ImageResult> results;

  // correct_count / queried_count. Requires queried_count > 0.
  Fraction score() const { return Fraction(correct_count, queried_count); }

  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

// Per-trial confusion counts over identities. Rates are exact fractions;
// tnr/fpr are absent when no non-member was evaluated.
struct ConfusionReport {
  int64_t tp = 0;
  int64_t fp = 0;
  int64_t tn = 0;
  int64_t fn = 0;
  // Identities left out of the counts (unknown ground truth or no answered
  // queries).
  int64_t excluded = 0;
  // Census of unknown-truth identities.
  int64_t unknown_predicted_member = 0;
  int64_t unknown_predicted_nonmember = 0;

  Fraction tpr() const { return Fraction(tp, tp + fn); }
  Fraction fnr() const { return Fraction(fn, tp + fn); }
  std::optional<Fraction> tnr() const;
  std::optional<Fraction> fpr() const;
  Fraction accuracy() const { return Fraction(tp + tn, tp + tn + fp + fn); }

  friend bool operator==(const ConfusionReport&,
                         const ConfusionReport&) = default;
};

struct MetricStat {
  double mean = 0.0;
  double stddev = 0.0;

  friend bool operator==(const MetricStat&, const MetricStat&) = default;
};

// Confusion rates averaged over trials, with population standard deviation.
struct AggregateReport {
  int trials = 0;
  int64_t members = 0;
  int64_t nonmembers = 0;
  MetricStat tpr;
  MetricStat fnr;
  std::optional<MetricStat> tnr;
  std::optional<MetricStat> fpr;
  MetricStat accuracy;
  MetricStat excluded;
  MetricStat unknown_predicted_member;
  MetricStat unknown_predicted_nonmember;

  friend bool operator==(const AggregateReport&,
                         const AggregateReport&) = default;
};

// Rows are attacker sample counts k, columns training occurrences m (or a
// single column). cells[r][c] corresponds to (row_axis[r], col_axis[c]).
struct SweepGrid {
  std::vector<int> row_axis;
  std::vector<int> col_axis;
  std::vector<std::vector<AggregateReport>> cells;

  friend bool operator==(const SweepGrid&, const SweepGrid&) = default;
};

absl::Status ValidateSweepGrid(const SweepGrid& grid);

enum class FindingKind { kNameNotInPrompts, kDuplicateId, kInsufficientImages,
                         kInvalidRecord };

std::string_view FindingName(FindingKind kind);

struct Finding {
  FindingKind kind;
  std::string identity_id;
  std::string detail;
};

struct ValidationSummary {
  std::vector<Finding> findings;

  bool ok() const { return findings.empty(); }
  size_t Count(FindingKind kind) const;
};

// Pure report; callers decide which findings are fatal.
ValidationSummary ValidateRoster(const std::vector<Identity>& roster,
                                 const PromptSet& prompts, int k);

}  // namespace idia

#endif  // IDIA_CORE_TYPES_H_
