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

#include <ctime>
#include <filesystem>
#include <unordered_set>

#include <fmt/format.h>

#include "idia/core/digest.h"
#include "idia/core/status_macros.h"

namespace idia::attack {
namespace {

namespace fs = std::filesystem;

std::string PathIn(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

}  // namespace

std::string FormatTimestamp(std::chrono::system_clock::time_point t) {
  const std::time_t secs = std::chrono::system_clock::to_time_t(t);
  std::tm utc{};
  gmtime_r(&secs, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

Json ToJson(const RunManifest& m) {
  Json outputs = Json::array();
  for (const OutputFile& f : m.outputs) {
    outputs.push_back(Json{{"path", f.path}, {"sha256", f.sha256}});
  }
  Json inputs = Json::object();
  for (const auto& [name, digest] : m.input_digests) inputs[name] = digest;
  return Json{{"toolkit_version", m.toolkit_version},
              {"config", idia::ToJson(m.config)},
              {"backend", m.backend},
              {"backend_uri", m.backend_uri},
              {"prompt_digest", m.prompt_digest},
              {"prompt_count", m.prompt_count},
              {"failed_queries", m.failed_queries},
              {"inputs", std::move(inputs)},
              {"outputs", std::move(outputs)},
              {"started", m.started},
              {"finished", m.finished},
              {"notes", m.notes}};
}

absl::StatusOr<RunManifest> RunManifestFromJson(const Json& json) {
  if (!json.is_object()) return absl::InvalidArgumentError("manifest is not an object");
  RunManifest m;
  try {
    m.toolkit_version = json.at("toolkit_version").get<std::string>();
    IDIA_ASSIGN_OR_RETURN(config, AttackConfigFromJson(json.at("config")));
    m.config = config;
    m.backend = json.at("backend").get<std::string>();
    m.backend_uri = json.value("backend_uri", "");
    m.prompt_digest = json.at("prompt_digest").get<std::string>();
    m.prompt_count = json.at("prompt_count").get<size_t>();
    m.failed_queries = json.value("failed_queries", int64_t{0});
    for (const auto& [name, digest] : json.at("inputs").items()) {
      m.input_digests[name] = digest.get<std::string>();
    }
    for (const Json& f : json.at("outputs")) {
      m.outputs.push_back(
          {f.at("path").get<std::string>(), f.at("sha256").get<std::string>()});
    }
    m.started = json.value("started", "");
    m.finished = json.value("finished", "");
    m.notes = json.value("notes", std::vector<std::string>{});
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(fmt::format("manifest: {}", e.what()));
  }
  return m;
}

Json ToJson(const IdentityStatus& s) {
  return Json{{"id", s.id},
              {"name", s.name},
              {"label", LabelName(s.label)},
              {"pool", s.pool_size},
              {"status", s.skipped ? "skipped" : "evaluated"},
              {"reason", s.skip_reason}};
}

absl::StatusOr<IdentityStatus> IdentityStatusFromJson(const Json& json) {
  IdentityStatus s;
  try {
    s.id = json.at("id").get<std::string>();
    s.name = json.at("name").get<std::string>();
    IDIA_ASSIGN_OR_RETURN(label, ParseLabel(json.at("label").get<std::string>()));
    s.label = label;
    s.pool_size = json.at("pool").get<size_t>();
    const std::string status = json.at("status").get<std::string>();
    if (status != "skipped" && status != "evaluated") {
      return absl::InvalidArgumentError(fmt::format("bad status '{}'", status));
    }
    s.skipped = status == "skipped";
    s.skip_reason = json.value("reason", "");
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(e.what());
  }
  return s;
}

std::string SerializeTrials(const AttackRun& run) {
  std::string out;
  for (const TrialOutcome& outcome : run.outcomes) {
    out += idia::ToJson(outcome).dump();
    out += '\n';
  }
  return out;
}

std::string SerializeIdentities(const AttackRun& run) {
  std::string out;
  for (const IdentityStatus& s : run.identities) {
    out += ToJson(s).dump();
    out += '\n';
  }
  return out;
}

absl::Status WriteRun(const std::string& dir, const AttackRun& run,
                      RunManifest manifest) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        fmt::format("cannot create {}: {}", dir, ec.message()));
  }
  const std::string trials = SerializeTrials(run);
  const std::string identities = SerializeIdentities(run);
  IDIA_RETURN_IF_ERROR(WriteFile(PathIn(dir, kTrialsFile), trials));
  IDIA_RETURN_IF_ERROR(WriteFile(PathIn(dir, kIdentitiesFile), identities));

  manifest.config = run.config;
  manifest.backend = run.backend;
  manifest.prompt_digest = run.prompt_digest;
  manifest.prompt_count = run.prompt_count;
  manifest.failed_queries = run.failed_queries;
  manifest.started = FormatTimestamp(run.started);
  manifest.finished = FormatTimestamp(run.finished);
  manifest.outputs = {{kTrialsFile, Sha256Hex(trials)},
                      {kIdentitiesFile, Sha256Hex(identities)}};
  return WriteFile(PathIn(dir, kManifestFile), ToJson(manifest).dump(2) + "\n");
}

absl::StatusOr<AttackRun> ReadRun(const std::string& dir,
                                  RunManifest* manifest_out) {
  auto manifest_text = ReadFile(PathIn(dir, kManifestFile));
  if (!manifest_text.ok()) {
    return absl::DataLossError(fmt::format("{}: no manifest", dir));
  }
  Json manifest_json =
      Json::parse(*manifest_text, nullptr, /*allow_exceptions=*/false);
  if (manifest_json.is_discarded()) {
    return absl::DataLossError(fmt::format("{}: manifest is not JSON", dir));
  }
  IDIA_ASSIGN_OR_RETURN(manifest, RunManifestFromJson(manifest_json));

  std::map<std::string, std::string> contents;
  for (const OutputFile& f : manifest.outputs) {
    auto text = ReadFile(PathIn(dir, f.path));
    if (!text.ok()) {
      return absl::DataLossError(fmt::format("{}: missing {}", dir, f.path));
    }
    if (Sha256Hex(*text) != f.sha256) {
      return absl::DataLossError(
          fmt::format("{}: digest mismatch for {}", dir, f.path));
    }
    contents[f.path] = *std::move(text);
  }
  if (!contents.contains(kTrialsFile) || !contents.contains(kIdentitiesFile)) {
    return absl::DataLossError(
        fmt::format("{}: manifest does not list the record files", dir));
  }

  AttackRun run;
  run.config = manifest.config;
  run.prompt_digest = manifest.prompt_digest;
  run.prompt_count = manifest.prompt_count;
  run.backend = manifest.backend;
  run.failed_queries = manifest.failed_queries;

  IDIA_ASSIGN_OR_RETURN(identity_lines,
                        ParseJsonLines(contents[kIdentitiesFile], kIdentitiesFile));
  std::unordered_map<std::string, size_t> pool_of;
  for (size_t i = 0; i < identity_lines.size(); ++i) {
    auto status = IdentityStatusFromJson(identity_lines[i]);
    if (!status.ok()) {
      return absl::InvalidArgumentError(fmt::format(
          "{}:{}: {}", kIdentitiesFile, i + 1, status.status().message()));
    }
    pool_of[status->id] = status->skipped ? 0 : status->pool_size;
    run.identities.push_back(*std::move(status));
  }

  IDIA_ASSIGN_OR_RETURN(trial_lines,
                        ParseJsonLines(contents[kTrialsFile], kTrialsFile));
  for (size_t i = 0; i < trial_lines.size(); ++i) {
    auto outcome = TrialOutcomeFromJson(trial_lines[i]);
    if (!outcome.ok()) {
      return absl::InvalidArgumentError(fmt::format(
          "{}:{}: {}", kTrialsFile, i + 1, outcome.status().message()));
    }
    if (!pool_of.contains(outcome->identity_id) ||
        outcome->trial < 0 || outcome->trial >= run.config.trials ||
        outcome->sampled.size() != static_cast<size_t>(run.config.k)) {
      return absl::InvalidArgumentError(fmt::format(
          "{}:{}: record does not match the manifest", kTrialsFile, i + 1));
    }
    const int expected =
        outcome->queried_count > 0
            ? PredictMembership(outcome->score(), run.config.tau)
            : 0;
    if (outcome->decision != expected) {
      return absl::InvalidArgumentError(fmt::format(
          "{}:{}: decision disagrees with score and tau", kTrialsFile, i + 1));
    }
    run.outcomes.push_back(*std::move(outcome));
  }
  if (manifest_out != nullptr) *manifest_out = std::move(manifest);
  return run;
}

}  // namespace idia::attack
