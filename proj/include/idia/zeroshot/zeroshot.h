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

#ifndef IDIA_ZEROSHOT_ZEROSHOT_H_
#define IDIA_ZEROSHOT_ZEROSHOT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "idia/core/types.h"

namespace idia::zeroshot {

// Classifier temperature t; similarities are scaled by e^t. Unrelated to the
// membership threshold in AttackConfig.
class Temperature {
 public:
  // Default is t = 0, i.e. a scale of 1.
  Temperature() = default;
  static absl::StatusOr<Temperature> Create(double value);

  double value() const { return value_; }
  double scale() const;

 private:
  explicit Temperature(double value) : value_(value) {}
  double value_ = 0.0;
};

// n row vectors of dimension d, row-major float storage, with parallel ids.
// No row is the zero vector.
class EmbeddingMatrix {
 public:
  static absl::StatusOr<EmbeddingMatrix> Create(size_t dim,
                                                std::vector<float> values,
                                                std::vector<std::string> row_ids);

  size_t rows() const { return row_ids_.size(); }
  size_t dim() const { return dim_; }
  std::span<const float> Row(size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }
  const std::string& row_id(size_t i) const { return row_ids_[i]; }
  const std::vector<std::string>& row_ids() const { return row_ids_; }
  const std::vector<float>& values() const { return values_; }
  std::optional<size_t> RowIndex(std::string_view id) const;
  // Euclidean norm of each row, computed once.
  double norm(size_t i) const { return norms_[i]; }

  // New matrix holding the given rows in the given order.
  EmbeddingMatrix Select(std::span<const size_t> rows) const;

 private:
  EmbeddingMatrix() = default;

  size_t dim_ = 0;
  std::vector<float> values_;
  std::vector<std::string> row_ids_;
  std::vector<double> norms_;
  std::unordered_map<std::string, size_t> index_;
};

// cos(image, text) * e^t. Fails on dimension mismatch or a zero vector.
absl::StatusOr<double> CosineSimilarity(std::span<const float> image_vec,
                                        std::span<const float> text_vec,
                                        Temperature temp = {});

// Unscaled cosine of `image_vec` against every row of `prompt_vecs`.
absl::StatusOr<std::vector<double>> CosineScores(
    std::span<const float> image_vec, const EmbeddingMatrix& prompt_vecs);

// Softmax over the temperature-scaled similarities.
absl::StatusOr<std::vector<double>> SoftmaxProbabilities(
    std::span<const float> image_vec, const EmbeddingMatrix& prompt_vecs,
    Temperature temp = {});

// Index of the most probable prompt. Softmax and the positive factor e^t are
// strictly monotone, so this is the argmax of the unscaled cosine; ties go to
// the lowest index. The temperature is validated but cannot change the result.
absl::StatusOr<Prediction> Predict(std::span<const float> image_vec,
                                   const EmbeddingMatrix& prompt_vecs,
                                   Temperature temp = {});

}  // namespace idia::zeroshot

#endif  // IDIA_ZEROSHOT_ZEROSHOT_H_
