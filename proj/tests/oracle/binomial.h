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

#ifndef IDIA_TESTS_ORACLE_BINOMIAL_H_
#define IDIA_TESTS_ORACLE_BINOMIAL_H_

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace idia::oracle {

// Row k of Pascal's triangle, built by repeated addition.
inline std::vector<double> PascalRow(int k) {
  std::vector<double> row{1.0};
  for (int n = 1; n <= k; ++n) {
    std::vector<double> next(n + 1, 1.0);
    for (int j = 1; j < n; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row;
}

inline double Pow(double base, int exponent) {
  double result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

// P(Binomial(k, p) = j) for every j.
inline std::vector<double> BinomialPmf(int k, double p) {
  const std::vector<double> c = PascalRow(k);
  std::vector<double> pmf(k + 1);
  for (int j = 0; j <= k; ++j) pmf[j] = c[j] * Pow(p, j) * Pow(1.0 - p, k - j);
  return pmf;
}

// P(X / k > tau) for X ~ Binomial(k, p), by enumeration over j.
inline double MembershipProbability(int k, double p, double tau) {
  const std::vector<double> pmf = BinomialPmf(k, p);
  double total = 0.0;
  for (int j = 0; j <= k; ++j) {
    if (static_cast<long double>(j) > static_cast<long double>(tau) * k) {
      total += pmf[j];
    }
  }
  return total;
}

// Same quantity by walking all 2^k hit/miss patterns. Only for small k; used
// to cross-check the closed enumeration above.
inline double MembershipProbabilityByPatterns(int k, double p, double tau) {
  double total = 0.0;
  for (uint64_t pattern = 0; pattern < (uint64_t{1} << k); ++pattern) {
    const int hits = __builtin_popcountll(pattern);
    if (static_cast<long double>(hits) > static_cast<long double>(tau) * k) {
      total += Pow(p, hits) * Pow(1.0 - p, k - hits);
    }
  }
  return total;
}

// Exact P(Binomial(k, 1/n) > m) as numerator / n^k.
struct ExactTail {
  boost::multiprecision::cpp_int numerator;
  boost::multiprecision::cpp_int denominator;
};

inline ExactTail UniformHitTail(int k, int n, int m) {
  using boost::multiprecision::cpp_int;
  ExactTail tail{0, 1};
  for (int i = 0; i < k; ++i) tail.denominator *= n;
  cpp_int choose = 1;  // C(k, j)
  for (int j = 0; j <= k; ++j) {
    if (j > 0) choose = choose * (k - j + 1) / j;
    if (j > m) {
      cpp_int term = choose;
      for (int i = 0; i < k - j; ++i) term *= (n - 1);
      tail.numerator += term;
    }
  }
  return tail;
}

// True iff numerator / denominator < 10^-exponent.
inline bool BelowPowerOfTen(const ExactTail& tail, int exponent) {
  boost::multiprecision::cpp_int scaled = tail.numerator;
  for (int i = 0; i < exponent; ++i) scaled *= 10;
  return scaled < tail.denominator;
}

}  // namespace idia::oracle

#endif  // IDIA_TESTS_ORACLE_BINOMIAL_H_
