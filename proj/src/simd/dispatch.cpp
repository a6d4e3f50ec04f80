// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "matflat/simd/kernels.hpp"

namespace matflat::simd {

#if defined(MATFLAT_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif

namespace {

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable& choose() {
  const char* env = std::getenv("MATFLAT_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return scalar_kernels();
  if (const KernelTable* t = kernels_for(Backend::kAvx2)) return *t;
  return scalar_kernels();
}

}  // namespace

const char* to_string(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable* kernels_for(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return &scalar_kernels();
    case Backend::kAvx2:
#if defined(MATFLAT_HAVE_AVX2)
      __builtin_cpu_init();
      if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt"))
        return &avx2_kernels();
#endif
      return nullptr;
  }
  return nullptr;
}

const KernelTable& active_kernels() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = &choose();
    const KernelTable* expected = nullptr;
    if (!g_active.compare_exchange_strong(expected, t, std::memory_order_acq_rel)) t = expected;
  }
  return *t;
}

bool set_active_backend(Backend b) {
  const KernelTable* t = kernels_for(b);
  if (t == nullptr) return false;
  g_active.store(t, std::memory_order_release);
  return true;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::kScalar};
  if (kernels_for(Backend::kAvx2) != nullptr) out.push_back(Backend::kAvx2);
  return out;
}

}  // namespace matflat::simd
