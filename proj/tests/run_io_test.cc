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

#include "idia/attack/run_io.h"

#include <filesystem>

#include "idia/target/synthetic_backend.h"
#include "testing/test_util.h"

namespace idia::attack {
namespace {

using ::idia::testing::MakeIdentity;
using ::idia::testing::MakeTempDir;
using ::idia::testing::NumberedNames;
using ::idia::testing::StatusIs;
using ::testing::HasSubstr;

class RunIoTest : public ::testing::Test {
 protected:
  void SetUp() override {
    for (int i = 0; i < 6; ++i) {
      roster_.push_back(MakeIdentity(
          fmt::format("id{}", i), fmt::format("Person {}", i), i == 5 ? 2 : 12,
          i % 2 ? MembershipLabel::kNonMember : MembershipLabel::kMember));
    }
    auto backend = target::SyntheticBackend::Create(
        {.seed = 3, .p_by_label = {{"member", 0.8}}}, roster_);
    ASSERT_TRUE(backend.ok());
    const PromptSet prompts = *PromptSet::Create(NumberedNames(50));
    auto run = RunAttack(roster_, prompts, **backend, {.k = 5, .trials = 4});
    ASSERT_TRUE(run.ok()) << run.status();
    run_ = *std::move(run);
    manifest_.toolkit_version = "test";
    manifest_.backend_uri = "synthetic:spec.json";
    manifest_.input_digests = {{"roster", "abc"}};
    manifest_.notes = {"a note"};
  }

  std::string Write(const std::string& name) {
    const std::string dir = MakeTempDir(name);
    EXPECT_TRUE(WriteRun(dir, run_, manifest_).ok());
    return dir;
  }

  std::vector<Identity> roster_;
  AttackRun run_;
  RunManifest manifest_;
};

TEST_F(RunIoTest, RoundTripsRecordsAndManifest) {
  const std::string dir = Write("run_io_roundtrip");
  RunManifest manifest;
  IDIA_ASSERT_OK_AND_ASSIGN(AttackRun back, ReadRun(dir, &manifest));
  EXPECT_EQ(back.outcomes, run_.outcomes);
  EXPECT_EQ(back.identities, run_.identities);
  EXPECT_EQ(back.config, run_.config);
  EXPECT_EQ(back.prompt_digest, run_.prompt_digest);
  EXPECT_EQ(back.prompt_count, 50u);
  EXPECT_EQ(manifest.toolkit_version, "test");
  EXPECT_EQ(manifest.backend, run_.backend);
  EXPECT_EQ(manifest.input_digests.at("roster"), "abc");
  EXPECT_EQ(manifest.outputs.size(), 2u);
  EXPECT_FALSE(manifest.started.empty());
  EXPECT_TRUE(back.identities[5].skipped);
}

TEST_F(RunIoTest, RecordFilesCarryNoWallClock) {
  const std::string a = Write("run_io_a");
  run_.started += std::chrono::hours(5);
  run_.finished += std::chrono::hours(6);
  const std::string b = Write("run_io_b");
  for (const char* file : {kTrialsFile, kIdentitiesFile}) {
    EXPECT_EQ(*ReadFile(a + "/" + file), *ReadFile(b + "/" + file)) << file;
  }
  EXPECT_NE(*ReadFile(a + "/" + kManifestFile), *ReadFile(b + "/" + kManifestFile));
}

TEST_F(RunIoTest, SerializedTrialsAreOneRecordPerLine) {
  const std::string text = SerializeTrials(run_);
  EXPECT_EQ(static_cast<size_t>(std::count(text.begin(), text.end(), '\n')),
            run_.outcomes.size());
  EXPECT_THAT(text, HasSubstr("\"identity\":\"id0\""));
}

TEST_F(RunIoTest, TamperedRecordsFailTheDigestCheck) {
  const std::string dir = Write("run_io_tamper");
  std::string trials = *ReadFile(dir + "/" + kTrialsFile);
  trials[trials.find("\"decision\":") + 11] ^= 1;
  IDIA_ASSERT_OK(WriteFile(dir + "/" + kTrialsFile, trials));
  EXPECT_THAT(ReadRun(dir), StatusIs(absl::StatusCode::kDataLoss, HasSubstr("digest")));
}

TEST_F(RunIoTest, TruncatedAndMissingFilesAreDataLoss) {
  const std::string dir = Write("run_io_truncate");
  const std::string trials = *ReadFile(dir + "/" + kTrialsFile);
  IDIA_ASSERT_OK(WriteFile(dir + "/" + kTrialsFile, trials.substr(0, trials.size() / 2)));
  EXPECT_THAT(ReadRun(dir), StatusIs(absl::StatusCode::kDataLoss));
  std::filesystem::remove(dir + "/" + kTrialsFile);
  EXPECT_THAT(ReadRun(dir), StatusIs(absl::StatusCode::kDataLoss, HasSubstr("missing")));
  std::filesystem::remove(dir + "/" + kManifestFile);
  EXPECT_THAT(ReadRun(dir), StatusIs(absl::StatusCode::kDataLoss));
}

TEST_F(RunIoTest, RecordsContradictingTheManifestAreRejected) {
  // Consistent digests but a decision that disagrees with tau.
  for (TrialOutcome& o : run_.outcomes) {
    if (o.decision == 1) {
      o.decision = 0;
      break;
    }
  }
  const std::string dir = Write("run_io_contradiction");
  EXPECT_THAT(ReadRun(dir), StatusIs(absl::StatusCode::kInvalidArgument,
                                     HasSubstr("trials.jsonl:")));
}

TEST(RunManifestTest, JsonRoundTrip) {
  RunManifest m;
  m.toolkit_version = "1.2.3";
  m.config.k = 7;
  m.backend = "b";
  m.backend_uri = "http://h:1";
  m.prompt_digest = "d";
  m.prompt_count = 9;
  m.failed_queries = 4;
  m.input_digests = {{"x", "y"}};
  m.outputs = {{"trials.jsonl", "00"}};
  m.started = "2026-01-01T00:00:00Z";
  m.finished = "2026-01-01T00:00:01Z";
  m.notes = {"n"};
  IDIA_ASSERT_OK_AND_ASSIGN(RunManifest back, RunManifestFromJson(ToJson(m)));
  EXPECT_EQ(ToJson(back), ToJson(m));
}

TEST(FormatTimestampTest, IsoUtc) {
  EXPECT_EQ(FormatTimestamp(std::chrono::system_clock::time_point{}),
            "1970-01-01T00:00:00Z");
}

}  // namespace
}  // namespace idia::attack
