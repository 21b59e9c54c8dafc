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

#ifndef IDIA_CORE_DIGEST_H_
#define IDIA_CORE_DIGEST_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace idia {

// Lower-case hex SHA-256.
std::string Sha256Hex(std::string_view bytes);
absl::StatusOr<std::string> Sha256HexOfFile(const std::string& path);

// Stable 64-bit hashes used for seed derivation. These values are part of the
// persisted-run contract: changing them changes every replay.
uint64_t Fnv1a64(std::string_view bytes);
uint64_t SplitMix64(uint64_t x);
uint64_t HashCombine(uint64_t seed, uint64_t value);

}  // namespace idia

#endif  // IDIA_CORE_DIGEST_H_
