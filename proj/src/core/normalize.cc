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

#include "idia/core/normalize.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace idia {
namespace {

const icu::Normalizer2& Nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  // ICU data is linked statically into libicudata; failure here means a
  // broken installation.
  if (U_FAILURE(status) || nfc == nullptr) std::abort();
  return *nfc;
}

icu::UnicodeString ApplyNfc(const icu::UnicodeString& in) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = Nfc().normalize(in, status);
  if (U_FAILURE(status)) return in;
  return out;
}

bool IsLetterAt(std::string_view text, size_t offset, bool before) {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  auto i = static_cast<int32_t>(offset);
  UChar32 c = 0;
  if (before) {
    if (i == 0) return false;
    U8_PREV(s, 0, i, c);
  } else {
    if (i >= length) return false;
    U8_NEXT(s, i, length, c);
  }
  return c >= 0 && u_isalpha(c);
}

}  // namespace

std::string NormalizeName(std::string_view utf8) {
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  text = ApplyNfc(text);
  text.foldCase(U_FOLD_CASE_DEFAULT);
  text = ApplyNfc(text);

  icu::UnicodeString collapsed;
  bool pending_space = false;
  for (int32_t i = 0; i < text.length();) {
    const UChar32 c = text.char32At(i);
    i += U16_LENGTH(c);
    if (u_isUWhiteSpace(c)) {
      pending_space = !collapsed.isEmpty();
      continue;
    }
    if (pending_space) {
      collapsed.append(static_cast<UChar>(u' '));
      pending_space = false;
    }
    collapsed.append(c);
  }
  std::string out;
  collapsed.toUTF8String(out);
  return out;
}

size_t FindBoundedToken(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return std::string_view::npos;
  for (size_t pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + 1)) {
    if (!IsLetterAt(haystack, pos, /*before=*/true) &&
        !IsLetterAt(haystack, pos + needle.size(), /*before=*/false)) {
      return pos;
    }
  }
  return std::string_view::npos;
}

}  // namespace idia
