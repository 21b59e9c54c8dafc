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

#include <atomic>
#include <thread>

#include "idia/target/backend.h"
#include "idia/target/synthetic_backend.h"
#include "testing/test_util.h"

namespace idia::target {
namespace {

using ::idia::testing::MakeIdentity;
using ::idia::testing::NumberedNames;
using ::idia::testing::StatusIs;

// Echoes the numeric suffix of the image token, modulo the prompt count, and
// fails for tokens listed in `failing`. Finishes late images first.
class ScriptedBackend final : public TargetBackend {
 public:
  explicit ScriptedBackend(absl::StatusCode fail_code = absl::StatusCode::kOk,
                           int fail_times = 0)
      : fail_code_(fail_code), fail_times_(fail_times) {}

  absl::StatusOr<Prediction> Query(const ImageRef& image,
                                   const PromptSet& prompts) const override {
    ++calls_;
    const size_t n = std::stoul(image.value);
    std::this_thread::sleep_for(std::chrono::microseconds(200 * (n % 5)));
    if (fail_code_ != absl::StatusCode::kOk &&
        (fail_times_ < 0 || failures_.fetch_add(1) < fail_times_)) {
      return absl::Status(fail_code_, "scripted failure");
    }
    if (image.value == "999") return Prediction{prompts.size()};
    return Prediction{n % prompts.size()};
  }
  BackendKind kind() const override { return BackendKind::kLocal; }
  std::string Describe() const override { return "scripted"; }

  int calls() const { return calls_; }

 private:
  absl::StatusCode fail_code_;
  int fail_times_;
  mutable std::atomic<int> calls_{0};
  mutable std::atomic<int> failures_{0};
};

std::vector<ImageRef> Tokens(int n) {
  std::vector<ImageRef> images;
  for (int i = 0; i < n; ++i) images.push_back({ImageKind::kOpaqueToken, std::to_string(i)});
  return images;
}

RetryPolicy FastRetry(int budget = 2) {
  return {.retry_budget = budget,
          .initial_backoff = std::chrono::milliseconds(1),
          .max_backoff = std::chrono::milliseconds(2)};
}

TEST(QueryBatchTest, EmptyInputGivesEmptyResult) {
  ScriptedBackend backend;
  const PromptSet prompts = *PromptSet::Create({"A"});
  IDIA_ASSERT_OK_AND_ASSIGN(auto records, QueryBatch(backend, {}, prompts, 4));
  EXPECT_TRUE(records.empty());
  EXPECT_EQ(backend.calls(), 0);
}

TEST(QueryBatchTest, ResultsFollowInputOrderAtAnyParallelism) {
  ScriptedBackend backend;
  const PromptSet prompts = *PromptSet::Create(NumberedNames(7));
  const std::vector<ImageRef> images = Tokens(64);
  for (int parallelism : {1, 3, 8, 100}) {
    IDIA_ASSERT_OK_AND_ASSIGN(auto records,
                              QueryBatch(backend, images, prompts, parallelism));
    ASSERT_EQ(records.size(), images.size());
    for (size_t i = 0; i < records.size(); ++i) {
      EXPECT_EQ(records[i].image, images[i]);
      EXPECT_EQ(records[i].prompt_count, 7u);
      ASSERT_TRUE(records[i].ok());
      EXPECT_EQ(records[i].prediction->prompt_index, i % 7);
      EXPECT_EQ(records[i].attempts, 1);
    }
  }
}

TEST(QueryBatchTest, SyntheticBackendIsIdenticalAcrossParallelism) {
  const Identity identity = MakeIdentity("a", "Person 2", 3);
  auto backend = *SyntheticBackend::Create({.seed = 4, .default_p = 0.5}, {identity});
  const PromptSet prompts = *PromptSet::Create(NumberedNames(10));
  IDIA_ASSERT_OK_AND_ASSIGN(auto serial, QueryBatch(*backend, identity.images, prompts, 1));
  IDIA_ASSERT_OK_AND_ASSIGN(auto parallel, QueryBatch(*backend, identity.images, prompts, 3));
  ASSERT_EQ(serial.size(), 3u);
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(serial[i].prediction, parallel[i].prediction);
    EXPECT_EQ(serial[i].backend, BackendKind::kSynthetic);
  }
}

TEST(QueryBatchTest, PerQueryFailuresAreRecordedNotFatal) {
  ScriptedBackend backend(absl::StatusCode::kNotFound, 3);
  const PromptSet prompts = *PromptSet::Create({"A", "B"});
  IDIA_ASSERT_OK_AND_ASSIGN(auto records,
                            QueryBatch(backend, Tokens(10), prompts, 1, FastRetry()));
  int failed = 0;
  for (const QueryRecord& r : records) {
    if (!r.ok()) {
      ++failed;
      EXPECT_THAT(r.status, StatusIs(absl::StatusCode::kNotFound));
      EXPECT_EQ(r.attempts, 1);
    }
  }
  EXPECT_EQ(failed, 3);
}

TEST(QueryBatchTest, RetriesOnlyTransientErrors) {
  ScriptedBackend flaky(absl::StatusCode::kUnavailable, 2);
  const PromptSet prompts = *PromptSet::Create({"A", "B"});
  IDIA_ASSERT_OK_AND_ASSIGN(auto records,
                            QueryBatch(flaky, Tokens(1), prompts, 1, FastRetry(2)));
  ASSERT_TRUE(records[0].ok());
  EXPECT_EQ(records[0].attempts, 3);

  ScriptedBackend exhausted(absl::StatusCode::kDeadlineExceeded, -1);
  EXPECT_THAT(QueryBatch(exhausted, Tokens(1), prompts, 1, FastRetry(2)),
              StatusIs(absl::StatusCode::kDeadlineExceeded));
  EXPECT_EQ(exhausted.calls(), 3);
}

TEST(QueryBatchTest, FailsOnlyWhenEveryQueryFails) {
  ScriptedBackend down(absl::StatusCode::kUnavailable, -1);
  const PromptSet prompts = *PromptSet::Create({"A", "B"});
  EXPECT_THAT(QueryBatch(down, Tokens(5), prompts, 2, FastRetry(0)),
              StatusIs(absl::StatusCode::kUnavailable));
}

TEST(QueryBatchTest, OutOfRangeAnswerIsAFailedQuery) {
  ScriptedBackend backend;
  const PromptSet prompts = *PromptSet::Create({"A", "B"});
  std::vector<ImageRef> images = Tokens(2);
  images.push_back({ImageKind::kOpaqueToken, "999"});
  IDIA_ASSERT_OK_AND_ASSIGN(auto records, QueryBatch(backend, images, prompts, 1));
  EXPECT_TRUE(records[0].ok());
  EXPECT_THAT(records[2].status, StatusIs(absl::StatusCode::kDataLoss));
  EXPECT_FALSE(records[2].ok());
}

TEST(QueryBatchTest, RejectsNonPositiveParallelism) {
  ScriptedBackend backend;
  const PromptSet prompts = *PromptSet::Create({"A"});
  EXPECT_THAT(QueryBatch(backend, Tokens(1), prompts, 0),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

}  // namespace
}  // namespace idia::target
