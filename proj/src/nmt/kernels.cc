/*
 * Copyright (C) 2026 The prigen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "prigen/nmt/kernels.h"

#include <atomic>

namespace prigen::nmt::kernels {
namespace {

std::atomic<KernelMode> g_mode{KernelMode::kAuto};

}  // namespace

#if !defined(PRIGEN_HAVE_AVX2_KERNELS)
double DotAvx2(const double* a, const double* b, std::size_t n) { return DotScalar(a, b, n); }
void AxpyAvx2(double alpha, const double* x, double* y, std::size_t n) { AxpyScalar(alpha, x, y, n); }
#endif

bool Avx2Supported() {
#if defined(PRIGEN_HAVE_AVX2_KERNELS)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported;
#else
  return false;
#endif
}

void SetKernelMode(KernelMode mode) { g_mode.store(mode); }
KernelMode ActiveKernelMode() { return UseAvx2() ? KernelMode::kAvx2 : KernelMode::kScalar; }

bool UseAvx2() {
  KernelMode m = g_mode.load(std::memory_order_relaxed);
  return m != KernelMode::kScalar && Avx2Supported();
}

}  // namespace prigen::nmt::kernels
