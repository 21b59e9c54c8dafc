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

#ifndef IDIA_CORE_STATUS_MACROS_H_
#define IDIA_CORE_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include <fmt/format.h>

#include <string_view>

// absl::string_view is a distinct type in this absl build; let fmt print it
// (e.g. Status::message()).
template <>
struct fmt::formatter<absl::string_view> : fmt::formatter<std::string_view> {
  template <typename FormatContext>
  auto format(absl::string_view s, FormatContext& ctx) const {
    return fmt::formatter<std::string_view>::format(
        std::string_view(s.data(), s.size()), ctx);
  }
};

#define IDIA_RETURN_IF_ERROR(expr)                  \
  do {                                              \
    if (::absl::Status _st = (expr); !_st.ok()) {   \
      return _st;                                   \
    }                                               \
  } while (0)

// `lhs` must be a plain identifier; it is declared by the macro.
#define IDIA_ASSIGN_OR_RETURN(lhs, expr)            \
  auto lhs##_or_ = (expr);                          \
  if (!lhs##_or_.ok()) return lhs##_or_.status();   \
  auto lhs = *std::move(lhs##_or_)

#endif  // IDIA_CORE_STATUS_MACROS_H_
