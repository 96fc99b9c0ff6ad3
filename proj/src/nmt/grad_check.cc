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

#include "prigen/nmt/grad_check.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "prigen/common/error.h"
#include "prigen/common/rng.h"
#include "prigen/nmt/network.h"

namespace prigen::nmt {
namespace {

using Wide = long double;

Wide Loss(const Params<Wide>& p, const Dims& d, const Example& ex) {
  const Example* one[] = {&ex};
  auto r = ForwardBackward<Wide>(p, d, one, 1.0, nullptr, nullptr);
  return r.loss_sum / static_cast<Wide>(r.tokens);
}

}  // namespace

GradCheckResult GradCheck(const Params<double>& params, const Dims& d, const Example& example,
                          const GradCheckOptions& options) {
  if (options.samples < kNumGroups) throw ArgumentError("grad check needs at least one sample per group");
  if (!(options.epsilon > 0.0)) throw ArgumentError("epsilon must be positive");
  Params<Wide> p = ConvertParams<Wide>(params);
  Params<Wide> g = ZeroParams<Wide>(d);
  const Example* one[] = {&example};
  ForwardBackward<Wide>(p, d, one, 1.0, nullptr, &g);
  if (options.corrupt_output_gradient) {
    for (Wide& v : g.out_w.data) v *= Wide(1.5);
  }

  // Rows that receive gradient in each embedding table.
  std::set<int> subs, nodes, tgts = {kSos, kEos};
  for (const auto& c : example.contexts) {
    subs.insert(c.left.begin(), c.left.end());
    subs.insert(c.right.begin(), c.right.end());
    nodes.insert(c.path.begin(), c.path.end());
  }
  if (example.contexts.empty()) {
    subs.insert(kPad);
    nodes.insert(kPad);
  }
  for (int t : example.target) tgts.insert(t);
  const std::vector<int> used[3] = {{subs.begin(), subs.end()}, {nodes.begin(), nodes.end()}, {tgts.begin(), tgts.end()}};

  std::array<std::vector<int>, kNumGroups> group_tensors;
  for (int t = 0; t < kNumTensors; ++t) group_tensors[static_cast<int>(GroupOf(t))].push_back(t);

  Rng rng(options.seed);
  auto ptensors = p.All();
  auto gtensors = g.All();
  const Wide eps = options.epsilon;
  GradCheckResult result;
  const int per_group = (options.samples + kNumGroups - 1) / kNumGroups;
  for (int grp = 0; grp < kNumGroups; ++grp) {
    GroupError& ge = result.groups[grp];
    const auto& members = group_tensors[grp];
    for (int s = 0; s < per_group; ++s) {
      const int t = members[rng.Below(members.size())];
      Tensor<Wide>& tensor = *ptensors[t];
      std::size_t index;
      if (t <= 2) {
        const auto& rows = used[t];
        const std::size_t row = static_cast<std::size_t>(rows[rng.Below(rows.size())]);
        index = row * tensor.cols + rng.Below(tensor.cols);
      } else {
        index = rng.Below(tensor.size());
      }
      const Wide saved = tensor.data[index];
      tensor.data[index] = saved + eps;
      const Wide plus = Loss(p, d, example);
      tensor.data[index] = saved - eps;
      const Wide minus = Loss(p, d, example);
      tensor.data[index] = saved;
      const Wide numeric = (plus - minus) / (2 * eps);
      const Wide analytic = gtensors[t]->data[index];
      const Wide denom = std::max<Wide>(1e-8L, std::fabs(analytic) + std::fabs(numeric));
      const double rel = static_cast<double>(std::fabs(analytic - numeric) / denom);
      ge.max_rel_error = std::max(ge.max_rel_error, rel);
      ++ge.samples;
    }
    result.max_rel_error = std::max(result.max_rel_error, ge.max_rel_error);
  }
  return result;
}

}  // namespace prigen::nmt
