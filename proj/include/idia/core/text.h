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

#ifndef IDIA_CORE_TEXT_H_
#define IDIA_CORE_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace idia {

// Splits on '\n'; a trailing '\r' on each line is dropped. A final empty
// segment after a terminating newline is not returned.
std::vector<std::string_view> SplitLines(std::string_view text);
std::vector<std::string_view> Split(std::string_view text, char sep);
std::string_view StripAsciiWhitespace(std::string_view text);

bool ParseDouble(std::string_view text, double* out);
bool ParseInt64(std::string_view text, int64_t* out);
bool ParseUint64(std::string_view text, uint64_t* out);

}  // namespace idia

#endif  // IDIA_CORE_TEXT_H_
