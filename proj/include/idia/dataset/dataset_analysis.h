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

#ifndef IDIA_DATASET_DATASET_ANALYSIS_H_
#define IDIA_DATASET_DATASET_ANALYSIS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "idia/core/types.h"

namespace idia::dataset {

// Retrieved captions per identity id, in file order.
struct CaptionDump {
  std::map<std::string, std::vector<std::string>> captions;
};

// Line-delimited {"id": ..., "caption": ...}. Errors name the source line.
absl::StatusOr<CaptionDump> ParseCaptionDump(std::string_view text,
                                             std::string_view source);

struct MembershipEvidence {
  std::string identity_id;
  MembershipLabel label = MembershipLabel::kUnknown;
  size_t captions_checked = 0;
  // First caption (in dump order) containing the name, when a member.
  std::optional<size_t> caption_index;
  std::string matched_caption;
};

// An identity is a member iff at least one of its captions contains its
// normalized name as a token (bounded by non-letters or string edges), a
// non-member if none does, and unknown if the dump has no entry for it.
// Result order follows the roster.
std::vector<MembershipEvidence> CaptionMembership(
    const CaptionDump& dump, const std::vector<Identity>& roster);

// True if `caption` contains `name` under the matching rule above.
bool CaptionMentions(std::string_view caption, std::string_view name);

struct EligibilityResult {
  std::vector<Identity> retained;
  // (identity id, image count) of every dropped identity.
  std::vector<std::pair<std::string, size_t>> dropped;
};

// Keeps identities with at least `min_images` images (inclusive).
absl::StatusOr<EligibilityResult> EligibilityFilter(
    const std::vector<Identity>& roster, int min_images);

// Identity id -> correct predictions of an external face classifier.
using RecognitionCounts = std::vector<std::pair<std::string, int64_t>>;

// CSV "id,count" with an optional header row. Ids must be unique and counts
// non-negative.
absl::StatusOr<RecognitionCounts> ParseRecognitionCounts(
    std::string_view text, std::string_view source);

struct Selection {
  std::vector<std::string> inject;
  std::vector<std::string> holdout;
};

// Sorts by (count, id) ascending, keeps the first n_total, and splits them
// into the first n_inject (to be mixed into training data) and the rest.
absl::StatusOr<Selection> SelectLowRecognition(const RecognitionCounts& counts,
                                               size_t n_total, size_t n_inject);

}  // namespace idia::dataset

#endif  // IDIA_DATASET_DATASET_ANALYSIS_H_
