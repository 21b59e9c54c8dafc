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

#ifndef IDIA_TESTS_TESTING_TEST_UTIL_H_
#define IDIA_TESTS_TESTING_TEST_UTIL_H_

#include <unistd.h>

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "idia/core/types.h"

#define IDIA_EXPECT_OK(expr) EXPECT_TRUE(::idia::testing::AsStatus(expr).ok()) \
    << ::idia::testing::AsStatus(expr)
#define IDIA_ASSERT_OK(expr) ASSERT_TRUE(::idia::testing::AsStatus(expr).ok()) \
    << ::idia::testing::AsStatus(expr)

#define IDIA_TEST_CONCAT_INNER(a, b) a##b
#define IDIA_TEST_CONCAT(a, b) IDIA_TEST_CONCAT_INNER(a, b)
#define IDIA_ASSERT_OK_AND_ASSIGN(lhs, expr) \
  IDIA_ASSERT_OK_AND_ASSIGN_IMPL(IDIA_TEST_CONCAT(_status_or_, __LINE__), lhs, expr)
#define IDIA_ASSERT_OK_AND_ASSIGN_IMPL(tmp, lhs, expr) \
  auto tmp = (expr);                                   \
  ASSERT_TRUE(tmp.ok()) << tmp.status();               \
  lhs = std::move(tmp).value()

namespace idia::testing {

inline absl::Status AsStatus(const absl::Status& status) { return status; }
template <typename T>
absl::Status AsStatus(const absl::StatusOr<T>& status_or) {
  return status_or.status();
}

MATCHER_P(StatusIs, code,
          fmt::format("has status code {}",
                      absl::StatusCodeToString(code))) {
  const absl::Status status = ::idia::testing::AsStatus(arg);
  *result_listener << "status is " << status;
  return status.code() == code;
}

MATCHER_P2(StatusIs, code, message_matcher, "") {
  const absl::Status status = ::idia::testing::AsStatus(arg);
  *result_listener << "status is " << status;
  return status.code() == code &&
         ::testing::ExplainMatchResult(message_matcher,
                                       std::string(status.message()),
                                       result_listener);
}

inline std::string FixturePath(const std::string& relative) {
  return (std::filesystem::path(IDIA_FIXTURE_DIR) / relative).string();
}

// Fresh directory under the gtest temp root, removed first if present.
// Unique per process and test, so tests can run in parallel.
inline std::string MakeTempDir(const std::string& name) {
  const ::testing::TestInfo* info =
      ::testing::UnitTest::GetInstance()->current_test_info();
  const std::string test =
      info == nullptr ? "" : std::string(info->test_suite_name()) + "." + info->name();
  const std::filesystem::path dir =
      std::filesystem::path(::testing::TempDir()) /
      ("idia_" + name + "_" + std::to_string(::getpid()) + "_" + test);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

inline Identity MakeIdentity(const std::string& id, const std::string& name,
                             int images,
                             MembershipLabel label = MembershipLabel::kMember) {
  Identity identity{id, name, {}, label};
  for (int i = 0; i < images; ++i) {
    identity.images.push_back(
        {ImageKind::kOpaqueToken, fmt::format("{}/img{:03d}", id, i)});
  }
  return identity;
}

// "Person 0", "Person 1", ...
inline std::vector<std::string> NumberedNames(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(fmt::format("Person {}", i));
  return names;
}

}  // namespace idia::testing

#endif  // IDIA_TESTS_TESTING_TEST_UTIL_H_
