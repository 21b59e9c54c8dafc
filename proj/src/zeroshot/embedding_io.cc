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

#include "idia/zeroshot/embedding_io.h"

#include <bit>
#include <cstring>

#include <fmt/format.h>
#include "idia/core/serialization.h"
#include "idia/core/status_macros.h"
#include "idia/core/text.h"

namespace idia::zeroshot {
namespace {

constexpr size_t kHeaderSize = 32;

template <typename T>
T LoadLe(const char* p) {
  T value;
  std::memcpy(&value, p, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    auto* bytes = reinterpret_cast<unsigned char*>(&value);
    for (size_t i = 0; i < sizeof(T) / 2; ++i) {
      std::swap(bytes[i], bytes[sizeof(T) - 1 - i]);
    }
  }
  return value;
}

template <typename T>
void StoreLe(std::string& out, T value) {
  char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    for (size_t i = 0; i < sizeof(T) / 2; ++i) {
      std::swap(bytes[i], bytes[sizeof(T) - 1 - i]);
    }
  }
  out.append(bytes, sizeof(T));
}

std::vector<std::string> SplitIds(std::string_view ids_text) {
  std::vector<std::string> ids;
  for (std::string_view line : SplitLines(ids_text)) {
    line = StripAsciiWhitespace(line);
    if (line.empty()) continue;
    ids.emplace_back(line);
  }
  return ids;
}

}  // namespace

absl::StatusOr<EmbeddingMatrix> DecodeEmbeddings(std::string_view bytes,
                                                 std::string_view ids_text) {
  if (bytes.size() < kHeaderSize || bytes.substr(0, 8) != kEmbeddingMagic) {
    return absl::InvalidArgumentError("not an embedding file (bad magic)");
  }
  const auto version = LoadLe<uint32_t>(bytes.data() + 8);
  const auto encoding = LoadLe<uint32_t>(bytes.data() + 12);
  const auto n = LoadLe<uint64_t>(bytes.data() + 16);
  const auto d = LoadLe<uint64_t>(bytes.data() + 24);
  if (version != kEmbeddingVersion) {
    return absl::InvalidArgumentError(
        fmt::format("unsupported embedding format version {}", version));
  }
  if (encoding != kEncodingFloat32Le) {
    return absl::InvalidArgumentError(
        fmt::format("unsupported value encoding {}", encoding));
  }
  if (d == 0 || n > (bytes.size() - kHeaderSize) / 4 / d ||
      bytes.size() != kHeaderSize + 4 * n * d) {
    return absl::InvalidArgumentError(fmt::format("payload size {} does not match n={} d={}", bytes.size() - kHeaderSize, n, d));
  }
  std::vector<std::string> ids = SplitIds(ids_text);
  if (ids.size() != n) {
    return absl::InvalidArgumentError(
        fmt::format("id sidecar lists {} ids for {} rows", ids.size(), n));
  }
  std::vector<float> values(n * d);
  for (size_t i = 0; i < values.size(); ++i) {
    values[i] = LoadLe<float>(bytes.data() + kHeaderSize + 4 * i);
  }
  return EmbeddingMatrix::Create(d, std::move(values), std::move(ids));
}

std::string EncodeEmbeddings(const EmbeddingMatrix& matrix) {
  std::string out(kEmbeddingMagic);
  StoreLe<uint32_t>(out, kEmbeddingVersion);
  StoreLe<uint32_t>(out, kEncodingFloat32Le);
  StoreLe<uint64_t>(out, matrix.rows());
  StoreLe<uint64_t>(out, matrix.dim());
  for (float v : matrix.values()) StoreLe<float>(out, v);
  return out;
}

std::string EncodeIds(const EmbeddingMatrix& matrix) {
  std::string out;
  for (const std::string& id : matrix.row_ids()) {
    out += id;
    out += '\n';
  }
  return out;
}

absl::StatusOr<EmbeddingMatrix> ReadEmbeddingFile(const std::string& path) {
  IDIA_ASSIGN_OR_RETURN(bytes, ReadFile(path));
  IDIA_ASSIGN_OR_RETURN(ids, ReadFile(path + ".ids"));
  return DecodeEmbeddings(bytes, ids);
}

absl::Status WriteEmbeddingFile(const std::string& path,
                                const EmbeddingMatrix& matrix) {
  IDIA_RETURN_IF_ERROR(WriteFile(path, EncodeEmbeddings(matrix)));
  return WriteFile(path + ".ids", EncodeIds(matrix));
}

absl::StatusOr<EmbeddingMatrix> ParseEmbeddingCsv(std::string_view text) {
  std::vector<float> values;
  std::vector<std::string> ids;
  size_t dim = 0;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    line = StripAsciiWhitespace(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> fields = Split(line, ',');
    if (fields.size() < 2) {
      return absl::InvalidArgumentError(
          fmt::format("line {}: expected id and values", line_no));
    }
    if (dim == 0) dim = fields.size() - 1;
    if (fields.size() - 1 != dim) {
      return absl::InvalidArgumentError(fmt::format("line {}: expected {} values, got {}", line_no, dim, fields.size() - 1));
    }
    ids.emplace_back(StripAsciiWhitespace(fields[0]));
    for (size_t i = 1; i < fields.size(); ++i) {
      double v = 0.0;
      if (!ParseDouble(fields[i], &v)) {
        return absl::InvalidArgumentError(
            fmt::format("line {}: bad number '{}'", line_no, fields[i]));
      }
      values.push_back(static_cast<float>(v));
    }
  }
  if (ids.empty()) return absl::InvalidArgumentError("no embedding rows");
  return EmbeddingMatrix::Create(dim, std::move(values), std::move(ids));
}

absl::StatusOr<EmbeddingMatrix> LoadEmbeddings(const std::string& path) {
  if (path.ends_with(".csv") || path.ends_with(".CSV")) {
    IDIA_ASSIGN_OR_RETURN(text, ReadFile(path));
    return ParseEmbeddingCsv(text);
  }
  return ReadEmbeddingFile(path);
}

}  // namespace idia::zeroshot
