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

#include "idia/target/synthetic_backend.h"

#include <cmath>
#include <map>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "testing/test_util.h"

namespace idia::target {
namespace {

using ::idia::testing::MakeIdentity;
using ::idia::testing::NumberedNames;
using ::idia::testing::StatusIs;

std::unique_ptr<SyntheticBackend> Oracle(SyntheticOracleSpec spec,
                                         const std::vector<Identity>& roster) {
  auto backend = SyntheticBackend::Create(std::move(spec), roster);
  EXPECT_TRUE(backend.ok()) << backend.status();
  return *std::move(backend);
}

double ChiSquareCritical(int dof, double alpha) {
  return boost::math::quantile(
      boost::math::complement(boost::math::chi_squared(dof), alpha));
}

TEST(SyntheticBackendTest, CertainRecognitionAlwaysNamesTheIdentity) {
  const PromptSet prompts = *PromptSet::Create(NumberedNames(546));
  const std::vector<Identity> roster = {MakeIdentity("p7", "Person 7", 200)};
  SyntheticOracleSpec spec{.seed = 3, .default_p = 1.0};
  auto oracle = Oracle(spec, roster);
  for (const ImageRef& image : roster[0].images) {
    IDIA_ASSERT_OK_AND_ASSIGN(Prediction p, oracle->Query(image, prompts));
    EXPECT_EQ(p.prompt_index, 7u);
  }
}

TEST(SyntheticBackendTest, ZeroRecognitionIsUniformOverWrongAnswers) {
  const PromptSet prompts = *PromptSet::Create(NumberedNames(11));
  const std::vector<Identity> roster = {MakeIdentity("p4", "Person 4", 20000)};
  auto oracle = Oracle({.seed = 5, .default_p = 0.0}, roster);
  std::vector<int> counts(prompts.size(), 0);
  for (const ImageRef& image : roster[0].images) {
    IDIA_ASSERT_OK_AND_ASSIGN(Prediction p, oracle->Query(image, prompts));
    ++counts[p.prompt_index];
  }
  EXPECT_EQ(counts[4], 0);
  const double expected = 20000.0 / 10.0;
  double chi2 = 0.0;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i == 4) continue;
    chi2 += (counts[i] - expected) * (counts[i] - expected) / expected;
  }
  EXPECT_LT(chi2, ChiSquareCritical(9, 0.01));
}

TEST(SyntheticBackendTest, CorrectRateConvergesToP) {
  const PromptSet prompts = *PromptSet::Create(NumberedNames(546));
  constexpr int kQueries = 10000;
  for (double p : {0.1, 0.5, 0.9}) {
    const std::vector<Identity> roster = {MakeIdentity("p0", "Person 0", kQueries)};
    auto oracle = Oracle({.seed = 17, .default_p = p}, roster);
    int correct = 0;
    for (const ImageRef& image : roster[0].images) {
      correct += oracle->Query(image, prompts)->prompt_index == 0;
    }
    const double rate = static_cast<double>(correct) / kQueries;
    EXPECT_NEAR(rate, p, 3 * std::sqrt(p * (1 - p) / kQueries)) << "p=" << p;
  }
}

TEST(SyntheticBackendTest, PureFunctionOfSeedImageAndPrompts) {
  const PromptSet prompts = *PromptSet::Create(NumberedNames(30));
  const std::vector<Identity> roster = {MakeIdentity("a", "Person 1", 50),
                                        MakeIdentity("b", "Person 2", 50)};
  SyntheticOracleSpec spec{.seed = 9, .default_p = 0.5};
  auto first = Oracle(spec, roster);
  auto second = Oracle(spec, roster);
  spec.seed = 10;
  auto reseeded = Oracle(spec, roster);
  int differences = 0;
  for (const Identity& identity : roster) {
    for (const ImageRef& image : identity.images) {
      const size_t a = first->Query(image, prompts)->prompt_index;
      EXPECT_EQ(a, second->Query(image, prompts)->prompt_index);
      EXPECT_EQ(a, first->Query(image, prompts)->prompt_index);
      differences += a != reseeded->Query(image, prompts)->prompt_index;
    }
  }
  EXPECT_GT(differences, 0);
}

TEST(SyntheticBackendTest, AbsentNameGivesUniformAnswers) {
  const PromptSet prompts = *PromptSet::Create(NumberedNames(5));
  const std::vector<Identity> roster = {MakeIdentity("x", "Jane Roe", 5000)};
  auto oracle = Oracle({.seed = 1, .default_p = 1.0}, roster);
  std::vector<int> counts(5, 0);
  for (const ImageRef& image : roster[0].images) {
    ++counts[oracle->Query(image, prompts)->prompt_index];
  }
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - 1000.0) * (c - 1000.0) / 1000.0;
  EXPECT_LT(chi2, ChiSquareCritical(4, 0.01));
}

TEST(SyntheticBackendTest, SinglePromptIsAlwaysIndexZero) {
  const PromptSet prompts = *PromptSet::Create({"Person 0"});
  const std::vector<Identity> roster = {MakeIdentity("x", "Person 0", 50)};
  auto oracle = Oracle({.default_p = 0.0}, roster);
  for (const ImageRef& image : roster[0].images) {
    EXPECT_EQ(oracle->Query(image, prompts)->prompt_index, 0u);
  }
}

TEST(SyntheticBackendTest, UnknownImageIsNotFound) {
  const PromptSet prompts = *PromptSet::Create(NumberedNames(3));
  auto oracle = Oracle({}, {MakeIdentity("x", "Person 0", 2)});
  EXPECT_THAT(oracle->Query({ImageKind::kOpaqueToken, "nope"}, prompts),
              StatusIs(absl::StatusCode::kNotFound));
  // Same value under a different kind is a different image.
  EXPECT_THAT(oracle->Query({ImageKind::kFilePath, "x/img000"}, prompts),
              StatusIs(absl::StatusCode::kNotFound));
}

TEST(SyntheticBackendTest, ProbabilityResolution) {
  const std::vector<Identity> roster = {
      MakeIdentity("m", "A", 1, MembershipLabel::kMember),
      MakeIdentity("n", "B", 1, MembershipLabel::kNonMember),
      MakeIdentity("u", "C", 1, MembershipLabel::kUnknown),
      MakeIdentity("s", "D", 1, MembershipLabel::kMember)};
  SyntheticOracleSpec spec{.default_p = 0.25,
                           .p_by_label = {{"member", 0.9}, {"non-member", 0.0}},
                           .p_by_identity = {{"s", 0.4}}};
  auto oracle = Oracle(spec, roster);
  EXPECT_EQ(oracle->RecognitionProbability("m"), 0.9);
  EXPECT_EQ(oracle->RecognitionProbability("n"), 0.0);
  EXPECT_EQ(oracle->RecognitionProbability("u"), 0.25);
  EXPECT_EQ(oracle->RecognitionProbability("s"), 0.4);
  EXPECT_EQ(oracle->RecognitionProbability("zz"), std::nullopt);
}

TEST(SyntheticBackendTest, RejectsSharedImagesAndBadSpecs) {
  Identity a = MakeIdentity("a", "A", 2);
  Identity b = MakeIdentity("b", "B", 1);
  b.images[0] = a.images[0];
  EXPECT_THAT(SyntheticBackend::Create({}, {a, b}),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ValidateSyntheticSpec({.default_p = 1.5}),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ValidateSyntheticSpec({.p_by_label = {{"member", -0.1}}}),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ValidateSyntheticSpec({.p_by_label = {{"sometimes", 0.1}}}),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(SyntheticSpecTest, JsonRoundTrip) {
  SyntheticOracleSpec spec{.seed = 18446744073709551615ull,
                           .default_p = 0.125,
                           .p_by_label = {{"member", 0.9}},
                           .p_by_identity = {{"a b", 1.0}, {"c", 0.0}}};
  IDIA_ASSERT_OK_AND_ASSIGN(SyntheticOracleSpec back,
                            ParseSyntheticSpec(SerializeSyntheticSpec(spec)));
  EXPECT_EQ(back.seed, spec.seed);
  EXPECT_EQ(back.default_p, spec.default_p);
  EXPECT_EQ(back.p_by_label, spec.p_by_label);
  EXPECT_EQ(back.p_by_identity, spec.p_by_identity);
  EXPECT_THAT(ParseSyntheticSpec("{\"seed\": -1}"),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ParseSyntheticSpec("not json"),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

}  // namespace
}  // namespace idia::target
