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

#ifndef IDIA_CORE_NORMALIZE_H_
#define IDIA_CORE_NORMALIZE_H_

#include <string>
#include <string_view>

namespace idia {

// Canonical form used whenever two names are compared: Unicode NFC, full
// case folding, runs of Unicode whitespace collapsed to one ASCII space and
// leading/trailing whitespace removed. Input is UTF-8; ill-formed sequences
// become U+FFFD.
std::string NormalizeName(std::string_view utf8);

// True if `haystack` contains `needle` such that the characters immediately
// before and after the occurrence are not letters (or are string edges).
// Both arguments must already be normalized. Returns the byte offset of the
// first such occurrence, or npos.
size_t FindBoundedToken(std::string_view haystack, std::string_view needle);

}  // namespace idia

#endif  // IDIA_CORE_NORMALIZE_H_
