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

#include "idia/zeroshot/zeroshot.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include "idia/core/status_macros.h"
#include "idia/zeroshot/kernels.h"

namespace idia::zeroshot {
namespace {

double Norm(std::span<const float> v) {
  return std::sqrt(kernels::Active().sum_squares(v.data(), v.size()));
}

absl::Status CheckImageVector(std::span<const float> image_vec, size_t dim) {
  if (image_vec.size() != dim) {
    return absl::InvalidArgumentError(fmt::format("dimension mismatch: image has {}, prompts have {}", image_vec.size(), dim));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<Temperature> Temperature::Create(double value) {
  if (!std::isfinite(value)) {
    return absl::InvalidArgumentError("temperature must be finite");
  }
  return Temperature(value);
}

double Temperature::scale() const { return std::exp(value_); }

absl::StatusOr<EmbeddingMatrix> EmbeddingMatrix::Create(
    size_t dim, std::vector<float> values, std::vector<std::string> row_ids) {
  if (dim == 0) return absl::InvalidArgumentError("embedding dimension is 0");
  if (values.size() != dim * row_ids.size()) {
    return absl::InvalidArgumentError(
        fmt::format("expected {} values, got {}", dim * row_ids.size(), values.size()));
  }
  EmbeddingMatrix m;
  m.dim_ = dim;
  m.values_ = std::move(values);
  m.row_ids_ = std::move(row_ids);
  m.norms_.reserve(m.row_ids_.size());
  for (size_t i = 0; i < m.row_ids_.size(); ++i) {
    for (float x : m.Row(i)) {
      if (!std::isfinite(x)) {
        return absl::InvalidArgumentError(
            fmt::format("row '{}' has a non-finite value", m.row_ids_[i]));
      }
    }
    const double norm = Norm(m.Row(i));
    if (norm == 0.0) {
      return absl::InvalidArgumentError(
          fmt::format("row '{}' is the zero vector", m.row_ids_[i]));
    }
    m.norms_.push_back(norm);
    if (!m.index_.emplace(m.row_ids_[i], i).second) {
      return absl::InvalidArgumentError(
          fmt::format("duplicate row id '{}'", m.row_ids_[i]));
    }
  }
  return m;
}

std::optional<size_t> EmbeddingMatrix::RowIndex(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EmbeddingMatrix EmbeddingMatrix::Select(std::span<const size_t> rows) const {
  EmbeddingMatrix m;
  m.dim_ = dim_;
  m.values_.reserve(rows.size() * dim_);
  for (size_t r : rows) {
    auto row = Row(r);
    m.values_.insert(m.values_.end(), row.begin(), row.end());
    m.row_ids_.push_back(row_ids_[r]);
    m.norms_.push_back(norms_[r]);
    m.index_.emplace(row_ids_[r], m.row_ids_.size() - 1);
  }
  return m;
}

absl::StatusOr<double> CosineSimilarity(std::span<const float> image_vec,
                                        std::span<const float> text_vec,
                                        Temperature temp) {
  if (image_vec.size() != text_vec.size()) {
    return absl::InvalidArgumentError("dimension mismatch");
  }
  if (image_vec.empty()) return absl::InvalidArgumentError("empty vectors");
  const double image_norm = Norm(image_vec);
  const double text_norm = Norm(text_vec);
  if (image_norm == 0.0 || text_norm == 0.0) {
    return absl::InvalidArgumentError("zero-norm vector");
  }
  const double dot =
      kernels::Active().dot(image_vec.data(), text_vec.data(), image_vec.size());
  return dot / (image_norm * text_norm) * temp.scale();
}

absl::StatusOr<std::vector<double>> CosineScores(
    std::span<const float> image_vec, const EmbeddingMatrix& prompt_vecs) {
  if (prompt_vecs.rows() == 0) {
    return absl::InvalidArgumentError("no prompt embeddings");
  }
  IDIA_RETURN_IF_ERROR(CheckImageVector(image_vec, prompt_vecs.dim()));
  const double image_norm = Norm(image_vec);
  if (image_norm == 0.0) return absl::InvalidArgumentError("zero-norm vector");
  const kernels::KernelTable& k = kernels::Active();
  std::vector<double> scores(prompt_vecs.rows());
  for (size_t i = 0; i < prompt_vecs.rows(); ++i) {
    const double dot =
        k.dot(image_vec.data(), prompt_vecs.Row(i).data(), prompt_vecs.dim());
    scores[i] = dot / (image_norm * prompt_vecs.norm(i));
  }
  return scores;
}

absl::StatusOr<std::vector<double>> SoftmaxProbabilities(
    std::span<const float> image_vec, const EmbeddingMatrix& prompt_vecs,
    Temperature temp) {
  IDIA_ASSIGN_OR_RETURN(scores, CosineScores(image_vec, prompt_vecs));
  const double scale = temp.scale();
  double max_logit = -INFINITY;
  for (double& s : scores) {
    s *= scale;
    max_logit = std::max(max_logit, s);
  }
  double total = 0.0;
  for (double& s : scores) {
    s = std::exp(s - max_logit);
    total += s;
  }
  for (double& s : scores) s /= total;
  return scores;
}

absl::StatusOr<Prediction> Predict(std::span<const float> image_vec,
                                   const EmbeddingMatrix& prompt_vecs,
                                   Temperature /*temp*/) {
  IDIA_ASSIGN_OR_RETURN(scores, CosineScores(image_vec, prompt_vecs));
  // max_element keeps the first of equal maxima.
  const auto best = std::max_element(scores.begin(), scores.end());
  return Prediction{static_cast<size_t>(best - scores.begin())};
}

}  // namespace idia::zeroshot
