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

#ifndef IDIA_CORE_FRACTION_H_
#define IDIA_CORE_FRACTION_H_

#include <cstdint>
#include <string>

namespace idia {

// Exact non-negative ratio of two counts. The representation is not reduced:
// 2/4 and 1/2 compare equal but keep their original numerator/denominator so
// that a score still reads as "correct out of queried".
class Fraction {
 public:
  constexpr Fraction() = default;
  // Requires den > 0 and num >= 0.
  constexpr Fraction(int64_t num, int64_t den) : num_(num), den_(den) {}

  constexpr int64_t num() const { return num_; }
  constexpr int64_t den() const { return den_; }

  double ToDouble() const { return static_cast<double>(num_) / den_; }

  // Exact comparison against a binary64 value. Never rounds.
  bool GreaterThan(double value) const;

  // Value equality (cross-multiplied), not representation equality.
  friend bool operator==(const Fraction& a, const Fraction& b);
  friend bool operator<(const Fraction& a, const Fraction& b);

  // Exact sum, reduced.
  friend Fraction operator+(const Fraction& a, const Fraction& b);
  Fraction Reduced() const;

  // "num/den"
  std::string ToString() const;

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

}  // namespace idia

#endif  // IDIA_CORE_FRACTION_H_
