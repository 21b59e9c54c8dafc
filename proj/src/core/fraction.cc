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

#include "idia/core/fraction.h"

#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include <fmt/format.h>

namespace idia {
namespace {

using Wide = __int128;

}  // namespace

bool Fraction::GreaterThan(double value) const {
  if (std::isnan(value)) return false;
  if (std::isinf(value)) return value < 0;
  // Far from the boundary the double projection decides.
  const double approx = ToDouble();
  const double margin = 1e-9 * (1.0 + std::abs(value));
  if (approx > value + margin) return true;
  if (approx < value - margin) return false;
  // Near the boundary: write value = mantissa * 2^exponent with an integral
  // mantissa and compare num * 2^-exponent against mantissa * den exactly.
  using boost::multiprecision::cpp_int;
  int exponent = 0;
  const double unit = std::frexp(value, &exponent);
  const auto mantissa = static_cast<int64_t>(std::ldexp(unit, 53));
  exponent -= 53;
  cpp_int lhs = num_;
  cpp_int rhs = cpp_int(mantissa) * den_;
  if (exponent >= 0) {
    rhs <<= exponent;
  } else {
    lhs <<= -exponent;
  }
  return lhs > rhs;
}

bool operator==(const Fraction& a, const Fraction& b) {
  return static_cast<Wide>(a.num_) * b.den_ ==
         static_cast<Wide>(b.num_) * a.den_;
}

bool operator<(const Fraction& a, const Fraction& b) {
  return static_cast<Wide>(a.num_) * b.den_ <
         static_cast<Wide>(b.num_) * a.den_;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  const int64_t g = std::gcd(a.den_, b.den_);
  const int64_t den = a.den_ / g * b.den_;
  const int64_t num = a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g);
  return Fraction(num, den).Reduced();
}

Fraction Fraction::Reduced() const {
  const int64_t g = std::gcd(num_, den_);
  if (g <= 1) return *this;
  return Fraction(num_ / g, den_ / g);
}

std::string Fraction::ToString() const { return fmt::format("{}/{}", num_, den_); }

}  // namespace idia
