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

#pragma once

#include <cstddef>
#include <type_traits>

namespace prigen::nmt::kernels {

// Reference implementations.
template <typename Real>
Real DotScalar(const Real* a, const Real* b, std::size_t n) {
  Real sum = 0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

// y += alpha * x
template <typename Real>
void AxpyScalar(Real alpha, const Real* x, Real* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

// AVX2/FMA variants for double. Only callable when Avx2Supported().
double DotAvx2(const double* a, const double* b, std::size_t n);
void AxpyAvx2(double alpha, const double* x, double* y, std::size_t n);

enum class KernelMode { kAuto, kScalar, kAvx2 };

bool Avx2Supported();
// kAvx2 on a machine without support falls back to scalar.
void SetKernelMode(KernelMode mode);
KernelMode ActiveKernelMode();
bool UseAvx2();

template <typename Real>
Real Dot(const Real* a, const Real* b, std::size_t n) {
  if constexpr (std::is_same_v<Real, double>) {
    if (UseAvx2()) return DotAvx2(a, b, n);
  }
  return DotScalar(a, b, n);
}

template <typename Real>
void Axpy(Real alpha, const Real* x, Real* y, std::size_t n) {
  if constexpr (std::is_same_v<Real, double>) {
    if (UseAvx2()) return AxpyAvx2(alpha, x, y, n);
  }
  AxpyScalar(alpha, x, y, n);
}

// y += W x, W is rows x cols row-major.
template <typename Real>
void Gemv(const Real* w, std::size_t rows, std::size_t cols, const Real* x, Real* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] += Dot(w + r * cols, x, cols);
}

// y += W^T x
template <typename Real>
void GemvTrans(const Real* w, std::size_t rows, std::size_t cols, const Real* x, Real* y) {
  for (std::size_t r = 0; r < rows; ++r) {
    if (x[r] != Real(0)) Axpy(x[r], w + r * cols, y, cols);
  }
}

// W += u v^T
template <typename Real>
void OuterAdd(const Real* u, std::size_t rows, const Real* v, std::size_t cols, Real* w) {
  for (std::size_t r = 0; r < rows; ++r) {
    if (u[r] != Real(0)) Axpy(u[r], v, w + r * cols, cols);
  }
}

}  // namespace prigen::nmt::kernels
