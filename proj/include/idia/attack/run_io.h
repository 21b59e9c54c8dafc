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

#ifndef IDIA_ATTACK_RUN_IO_H_
#define IDIA_ATTACK_RUN_IO_H_

#include <map>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "idia/attack/attack.h"
#include "idia/core/serialization.h"

namespace idia::attack {

// Run directory layout:
//   trials.jsonl      one TrialOutcome per line, trial-major, roster order
//   identities.jsonl  one IdentityStatus per line
//   manifest.json     RunManifest
inline constexpr char kTrialsFile[] = "trials.jsonl";
inline constexpr char kIdentitiesFile[] = "identities.jsonl";
inline constexpr char kManifestFile[] = "manifest.json";

struct OutputFile {
  std::string path;  // relative to the run directory
  std::string sha256;
};

struct RunManifest {
  std::string toolkit_version;
  AttackConfig config;
  std::string backend;
  std::string backend_uri;
  std::string prompt_digest;
  size_t prompt_count = 0;
  int64_t failed_queries = 0;
  // Input name -> SHA-256 of the file as read.
  std::map<std::string, std::string> input_digests;
  std::vector<OutputFile> outputs;
  // Wall-clock only lives here, never in the record files.
  std::string started;
  std::string finished;
  std::vector<std::string> notes;
};

Json ToJson(const RunManifest& manifest);
absl::StatusOr<RunManifest> RunManifestFromJson(const Json& json);

Json ToJson(const IdentityStatus& status);
absl::StatusOr<IdentityStatus> IdentityStatusFromJson(const Json& json);

std::string SerializeTrials(const AttackRun& run);
std::string SerializeIdentities(const AttackRun& run);

// ISO-8601 UTC with seconds, e.g. "2026-10-19T08:30:00Z".
std::string FormatTimestamp(std::chrono::system_clock::time_point t);

// Writes the record files and a manifest naming them with their digests.
// `manifest` supplies the fields that are not derivable from the run
// (version, backend URI, input digests, notes); outputs, timestamps and run
// fields are filled in here.
absl::Status WriteRun(const std::string& dir, const AttackRun& run,
                      RunManifest manifest);

// Loads a run directory. Fails with kDataLoss when a file named in the
// manifest is missing or its digest differs, and with kInvalidArgument when
// a record does not parse or contradicts the manifest.
absl::StatusOr<AttackRun> ReadRun(const std::string& dir,
                                  RunManifest* manifest_out = nullptr);

}  // namespace idia::attack

#endif  // IDIA_ATTACK_RUN_IO_H_
