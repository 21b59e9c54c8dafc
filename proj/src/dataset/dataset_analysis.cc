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

#include "idia/dataset/dataset_analysis.h"

#include <algorithm>
#include <unordered_set>

#include <fmt/format.h>

#include "idia/core/normalize.h"
#include "idia/core/serialization.h"
#include "idia/core/text.h"

namespace idia::dataset {

absl::StatusOr<CaptionDump> ParseCaptionDump(std::string_view text,
                                             std::string_view source) {
  CaptionDump dump;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    line = StripAsciiWhitespace(line);
    if (line.empty()) continue;
    const Json record = Json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (record.is_discarded() || !record.is_object()) {
      return absl::InvalidArgumentError(
          fmt::format("{}:{}: malformed caption record", source, line_no));
    }
    auto id = record.find("id");
    auto caption = record.find("caption");
    if (id == record.end() || !id->is_string() || caption == record.end() ||
        !caption->is_string()) {
      return absl::InvalidArgumentError(fmt::format(
          "{}:{}: caption record needs string fields 'id' and 'caption'",
          source, line_no));
    }
    dump.captions[id->get<std::string>()].push_back(caption->get<std::string>());
  }
  return dump;
}

bool CaptionMentions(std::string_view caption, std::string_view name) {
  return FindBoundedToken(NormalizeName(caption), NormalizeName(name)) !=
         std::string_view::npos;
}

std::vector<MembershipEvidence> CaptionMembership(
    const CaptionDump& dump, const std::vector<Identity>& roster) {
  std::vector<MembershipEvidence> out;
  out.reserve(roster.size());
  for (const Identity& identity : roster) {
    MembershipEvidence evidence;
    evidence.identity_id = identity.id;
    auto it = dump.captions.find(identity.id);
    if (it == dump.captions.end()) {
      out.push_back(std::move(evidence));
      continue;
    }
    const std::string name = NormalizeName(identity.name);
    evidence.label = MembershipLabel::kNonMember;
    evidence.captions_checked = it->second.size();
    for (size_t i = 0; i < it->second.size(); ++i) {
      if (FindBoundedToken(NormalizeName(it->second[i]), name) !=
          std::string_view::npos) {
        evidence.label = MembershipLabel::kMember;
        evidence.caption_index = i;
        evidence.matched_caption = it->second[i];
        break;
      }
    }
    out.push_back(std::move(evidence));
  }
  return out;
}

absl::StatusOr<EligibilityResult> EligibilityFilter(
    const std::vector<Identity>& roster, int min_images) {
  if (min_images < 1) {
    return absl::InvalidArgumentError("min_images must be >= 1");
  }
  EligibilityResult result;
  for (const Identity& identity : roster) {
    if (identity.images.size() >= static_cast<size_t>(min_images)) {
      result.retained.push_back(identity);
    } else {
      result.dropped.emplace_back(identity.id, identity.images.size());
    }
  }
  return result;
}

absl::StatusOr<RecognitionCounts> ParseRecognitionCounts(
    std::string_view text, std::string_view source) {
  RecognitionCounts counts;
  std::unordered_set<std::string> seen;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    line = StripAsciiWhitespace(line);
    if (line.empty()) continue;
    const std::vector<std::string_view> fields = Split(line, ',');
    if (fields.size() != 2) {
      return absl::InvalidArgumentError(
          fmt::format("{}:{}: expected 'id,count'", source, line_no));
    }
    const std::string_view id = StripAsciiWhitespace(fields[0]);
    int64_t count = 0;
    if (!ParseInt64(fields[1], &count)) {
      if (counts.empty() && seen.empty()) continue;  // header row
      return absl::InvalidArgumentError(
          fmt::format("{}:{}: bad count '{}'", source, line_no, fields[1]));
    }
    if (count < 0) {
      return absl::InvalidArgumentError(
          fmt::format("{}:{}: negative count", source, line_no));
    }
    if (id.empty() || !seen.emplace(id).second) {
      return absl::InvalidArgumentError(
          fmt::format("{}:{}: empty or duplicate id '{}'", source, line_no, id));
    }
    counts.emplace_back(std::string(id), count);
  }
  return counts;
}

absl::StatusOr<Selection> SelectLowRecognition(const RecognitionCounts& counts,
                                               size_t n_total,
                                               size_t n_inject) {
  if (n_inject > n_total) {
    return absl::InvalidArgumentError("n_inject exceeds n_total");
  }
  if (n_total > counts.size()) {
    return absl::InvalidArgumentError(fmt::format(
        "n_total = {} exceeds the {} available identities", n_total,
        counts.size()));
  }
  std::vector<const std::pair<std::string, int64_t>*> order;
  order.reserve(counts.size());
  for (const auto& entry : counts) order.push_back(&entry);
  std::partial_sort(order.begin(), order.begin() + static_cast<ptrdiff_t>(n_total),
                    order.end(), [](const auto* a, const auto* b) {
                      return std::tie(a->second, a->first) <
                             std::tie(b->second, b->first);
                    });
  Selection selection;
  for (size_t i = 0; i < n_total; ++i) {
    (i < n_inject ? selection.inject : selection.holdout)
        .push_back(order[i]->first);
  }
  return selection;
}

}  // namespace idia::dataset
