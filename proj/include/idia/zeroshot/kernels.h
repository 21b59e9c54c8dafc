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

#ifndef IDIA_ZEROSHOT_KERNELS_H_
#define IDIA_ZEROSHOT_KERNELS_H_

#include <cstddef>
#include <string_view>
#include <vector>

namespace idia::zeroshot::kernels {

// Inner loops of the similarity computation. Every variant multiplies in
// float, which is exact when widened, and accumulates in double; variants
// differ only in summation order.
struct KernelTable {
  std::string_view name;
  double (*dot)(const float* a, const float* b, size_t n);
  double (*sum_squares)(const float* a, size_t n);
};

// Reference implementation, always available.
const KernelTable& Scalar();

// nullptr when the variant was not compiled in or the CPU lacks the ISA.
const KernelTable* Avx2();
const KernelTable* Neon();

// Every variant usable on this machine, scalar first.
std::vector<const KernelTable*> Available();

// Fastest usable variant, chosen once at first call. Setting the environment
// variable IDIA_FORCE_SCALAR=1 pins the scalar reference.
const KernelTable& Active();

}  // namespace idia::zeroshot::kernels

#endif  // IDIA_ZEROSHOT_KERNELS_H_
