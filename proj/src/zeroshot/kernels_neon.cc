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

#include "idia/zeroshot/kernels.h"

#if defined(__aarch64__) && defined(__ARM_NEON)
#define IDIA_HAVE_NEON_KERNELS 1
#include <arm_neon.h>
#else
#define IDIA_HAVE_NEON_KERNELS 0
#endif

namespace idia::zeroshot::kernels {

#if IDIA_HAVE_NEON_KERNELS
namespace {

double DotNeon(const float* a, const float* b, size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float32x4_t va = vld1q_f32(a + i);
    const float32x4_t vb = vld1q_f32(b + i);
    acc0 = vfmaq_f64(acc0, vcvt_f64_f32(vget_low_f32(va)),
                     vcvt_f64_f32(vget_low_f32(vb)));
    acc1 = vfmaq_f64(acc1, vcvt_high_f64_f32(va), vcvt_high_f64_f32(vb));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) {
    acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
  }
  return acc;
}

double SumSquaresNeon(const float* a, size_t n) { return DotNeon(a, a, n); }

constexpr KernelTable kNeon{"neon", &DotNeon, &SumSquaresNeon};

}  // namespace

// NEON is mandatory on AArch64.
const KernelTable* Neon() { return &kNeon; }

#else

const KernelTable* Neon() { return nullptr; }

#endif

}  // namespace idia::zeroshot::kernels
