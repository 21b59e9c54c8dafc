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

#include "idia/core/types.h"

#include <cmath>
#include <unordered_set>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include "idia/core/digest.h"
#include "idia/core/normalize.h"

namespace idia {

std::string_view LabelName(MembershipLabel label) {
  switch (label) {
    case MembershipLabel::kMember:
      return "member";
    case MembershipLabel::kNonMember:
      return "non-member";
    case MembershipLabel::kUnknown:
      return "unknown";
  }
  return "unknown";
}

absl::StatusOr<MembershipLabel> ParseLabel(std::string_view text) {
  if (text == "member") return MembershipLabel::kMember;
  if (text == "non-member") return MembershipLabel::kNonMember;
  if (text == "unknown") return MembershipLabel::kUnknown;
  return absl::InvalidArgumentError(
      fmt::format("unknown membership label '{}'", text));
}

std::string_view ImageKindName(ImageKind kind) {
  switch (kind) {
    case ImageKind::kFilePath:
      return "file-path";
    case ImageKind::kEmbeddingRow:
      return "embedding-row";
    case ImageKind::kOpaqueToken:
      return "opaque-token";
  }
  return "opaque-token";
}

absl::StatusOr<ImageKind> ParseImageKind(std::string_view text) {
  if (text == "file-path") return ImageKind::kFilePath;
  if (text == "embedding-row") return ImageKind::kEmbeddingRow;
  if (text == "opaque-token") return ImageKind::kOpaqueToken;
  return absl::InvalidArgumentError(
      fmt::format("unknown image kind '{}'", text));
}

size_t ImageRefHash::operator()(const ImageRef& ref) const {
  return static_cast<size_t>(
      HashCombine(static_cast<uint64_t>(ref.kind), Fnv1a64(ref.value)));
}

absl::Status ValidateIdentity(const Identity& identity) {
  if (identity.id.empty()) {
    return absl::InvalidArgumentError("identity id is empty");
  }
  if (NormalizeName(identity.name).empty()) {
    return absl::InvalidArgumentError(
        fmt::format("identity '{}' has an empty name", identity.id));
  }
  std::unordered_set<ImageRef, ImageRefHash> seen;
  for (const ImageRef& image : identity.images) {
    if (image.value.empty()) {
      return absl::InvalidArgumentError(
          fmt::format("identity '{}' has an empty image ref", identity.id));
    }
    if (!seen.insert(image).second) {
      return absl::InvalidArgumentError(
          fmt::format("identity '{}' lists image '{}' twice", identity.id, image.value));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<PromptSet> PromptSet::Create(std::vector<std::string> prompts) {
  if (prompts.empty()) {
    return absl::InvalidArgumentError("prompt set is empty");
  }
  PromptSet set;
  set.index_of_.reserve(prompts.size());
  for (size_t i = 0; i < prompts.size(); ++i) {
    std::string key = NormalizeName(prompts[i]);
    if (key.empty()) {
      return absl::InvalidArgumentError(
          fmt::format("prompt {} is empty after normalization", i));
    }
    auto [it, inserted] = set.index_of_.emplace(std::move(key), i);
    if (!inserted) {
      return absl::InvalidArgumentError(
          fmt::format("prompts {} and {} normalize to the same name '{}'", it->second, i, it->first));
    }
  }
  set.digest_ = Sha256Hex(fmt::format("{}", fmt::join(prompts, "\n")));
  set.prompts_ = std::move(prompts);
  return set;
}

std::optional<size_t> PromptSet::IndexOf(std::string_view name) const {
  auto it = index_of_.find(NormalizeName(name));
  if (it == index_of_.end()) return std::nullopt;
  return it->second;
}

std::optional<size_t> PromptSet::IndexOfNormalized(
    const std::string& key) const {
  auto it = index_of_.find(key);
  if (it == index_of_.end()) return std::nullopt;
  return it->second;
}

std::string_view PolicyName(InsufficientImagesPolicy policy) {
  return policy == InsufficientImagesPolicy::kSkip ? "skip" : "error";
}

absl::StatusOr<InsufficientImagesPolicy> ParsePolicy(std::string_view text) {
  if (text == "skip") return InsufficientImagesPolicy::kSkip;
  if (text == "error") return InsufficientImagesPolicy::kError;
  return absl::InvalidArgumentError(fmt::format("insufficient_images_policy must be 'skip' or 'error', got '{}'", text));
}

absl::Status ValidateAttackConfig(const AttackConfig& config) {
  if (config.k < 1) return absl::InvalidArgumentError("k must be >= 1");
  if (config.trials < 1) {
    return absl::InvalidArgumentError("trials must be >= 1");
  }
  if (!(config.tau >= 0.0 && config.tau < 1.0)) {
    return absl::InvalidArgumentError("tau must lie in [0, 1)");
  }
  if (config.parallelism < 1) {
    return absl::InvalidArgumentError("parallelism must be >= 1");
  }
  return absl::OkStatus();
}

std::optional<Fraction> ConfusionReport::tnr() const {
  if (tn + fp == 0) return std::nullopt;
  return Fraction(tn, tn + fp);
}

std::optional<Fraction> ConfusionReport::fpr() const {
  if (tn + fp == 0) return std::nullopt;
  return Fraction(fp, tn + fp);
}

absl::Status ValidateSweepGrid(const SweepGrid& grid) {
  if (grid.cells.size() != grid.row_axis.size()) {
    return absl::InvalidArgumentError("sweep grid row count mismatch");
  }
  for (const auto& row : grid.cells) {
    if (row.size() != grid.col_axis.size()) {
      return absl::InvalidArgumentError("sweep grid column count mismatch");
    }
  }
  return absl::OkStatus();
}

std::string_view FindingName(FindingKind kind) {
  switch (kind) {
    case FindingKind::kNameNotInPrompts:
      return "name-not-in-prompts";
    case FindingKind::kDuplicateId:
      return "duplicate-id";
    case FindingKind::kInsufficientImages:
      return "insufficient-images";
    case FindingKind::kInvalidRecord:
      return "invalid-record";
  }
  return "invalid-record";
}

size_t ValidationSummary::Count(FindingKind kind) const {
  size_t n = 0;
  for (const Finding& f : findings) n += f.kind == kind;
  return n;
}

ValidationSummary ValidateRoster(const std::vector<Identity>& roster,
                                 const PromptSet& prompts, int k) {
  ValidationSummary summary;
  std::unordered_set<std::string> ids;
  for (const Identity& identity : roster) {
    if (absl::Status s = ValidateIdentity(identity); !s.ok()) {
      summary.findings.push_back(
          {FindingKind::kInvalidRecord, identity.id, std::string(s.message())});
    }
    if (!ids.insert(identity.id).second) {
      summary.findings.push_back({FindingKind::kDuplicateId, identity.id,
                                  "id appears more than once"});
    }
    if (!prompts.IndexOf(identity.name).has_value()) {
      summary.findings.push_back(
          {FindingKind::kNameNotInPrompts, identity.id,
           fmt::format("'{}' is not a prompt", identity.name)});
    }
    if (static_cast<int64_t>(identity.images.size()) < k) {
      summary.findings.push_back(
          {FindingKind::kInsufficientImages, identity.id,
           fmt::format("{} images, need {}", identity.images.size(), k)});
    }
  }
  return summary;
}

}  // namespace idia
