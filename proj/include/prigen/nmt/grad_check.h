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

#include <array>
#include <cstdint>

#include "prigen/nmt/model.h"

namespace prigen::nmt {

struct GradCheckOptions {
  double epsilon = 1e-4;
  int samples = 240;  // spread evenly over the parameter groups
  std::uint64_t seed = 0;
  // Negative control: scale the analytic output-projection gradient.
  bool corrupt_output_gradient = false;
};

struct GroupError {
  double max_rel_error = 0.0;
  int samples = 0;
};

struct GradCheckResult {
  double max_rel_error = 0.0;
  std::array<GroupError, kNumGroups> groups{};
};

// |g_a - g_n| / max(1e-8, |g_a| + |g_n|) between analytic gradients and
// central differences, computed in long double without dropout. Embedding
// samples are drawn from rows the example actually uses.
GradCheckResult GradCheck(const Params<double>& params, const Dims& d, const Example& example,
                          const GradCheckOptions& options);

}  // namespace prigen::nmt
