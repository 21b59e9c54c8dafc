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

#include <cstdlib>
#include <cstring>

#include "idia/zeroshot/kernels.h"

namespace idia::zeroshot::kernels {
namespace {

bool ForceScalar() {
  const char* env = std::getenv("IDIA_FORCE_SCALAR");
  return env != nullptr && std::strcmp(env, "0") != 0 && *env != '\0';
}

const KernelTable& Select() {
  if (ForceScalar()) return Scalar();
  if (const KernelTable* t = Avx2()) return *t;
  if (const KernelTable* t = Neon()) return *t;
  return Scalar();
}

}  // namespace

std::vector<const KernelTable*> Available() {
  std::vector<const KernelTable*> out{&Scalar()};
  if (const KernelTable* t = Avx2()) out.push_back(t);
  if (const KernelTable* t = Neon()) out.push_back(t);
  return out;
}

const KernelTable& Active() {
  static const KernelTable& table = Select();
  return table;
}

}  // namespace idia::zeroshot::kernels
