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

#include <algorithm>
#include <cstddef>
#include <vector>

namespace prigen::nmt {

// Dense row-major matrix. Vectors are stored as n x 1.
template <typename Real>
struct Tensor {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Real> data;

  Tensor() = default;
  Tensor(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Real(0)) {}

  Real* Row(std::size_t r) { return data.data() + r * cols; }
  const Real* Row(std::size_t r) const { return data.data() + r * cols; }
  std::size_t size() const { return data.size(); }
  void Zero() { std::fill(data.begin(), data.end(), Real(0)); }
};

}  // namespace prigen::nmt
