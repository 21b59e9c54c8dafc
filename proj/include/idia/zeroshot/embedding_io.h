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

#ifndef IDIA_ZEROSHOT_EMBEDDING_IO_H_
#define IDIA_ZEROSHOT_EMBEDDING_IO_H_

#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "idia/zeroshot/zeroshot.h"

namespace idia::zeroshot {

// Binary embedding file, all integers little-endian:
//
//   offset  size  field
//        0     8  magic "IDIAEMB\0"
//        8     4  format version (1)
//       12     4  value encoding (1 = IEEE-754 binary32, little-endian)
//       16     8  n, number of rows
//       24     8  d, dimension
//       32 4*n*d  row-major values
//
// Row ids live in a sidecar text file "<path>.ids", one id per line.
inline constexpr std::string_view kEmbeddingMagic{"IDIAEMB\0", 8};
inline constexpr uint32_t kEmbeddingVersion = 1;
inline constexpr uint32_t kEncodingFloat32Le = 1;

absl::StatusOr<EmbeddingMatrix> DecodeEmbeddings(std::string_view bytes,
                                                 std::string_view ids_text);
std::string EncodeEmbeddings(const EmbeddingMatrix& matrix);
std::string EncodeIds(const EmbeddingMatrix& matrix);

absl::StatusOr<EmbeddingMatrix> ReadEmbeddingFile(const std::string& path);
absl::Status WriteEmbeddingFile(const std::string& path,
                                const EmbeddingMatrix& matrix);

// Text form: "id,v1,...,vd" per line; blank lines and lines starting with
// '#' are skipped.
absl::StatusOr<EmbeddingMatrix> ParseEmbeddingCsv(std::string_view text);

// Dispatches on extension: ".csv" uses the text loader, anything else the
// binary format.
absl::StatusOr<EmbeddingMatrix> LoadEmbeddings(const std::string& path);

}  // namespace idia::zeroshot

#endif  // IDIA_ZEROSHOT_EMBEDDING_IO_H_
