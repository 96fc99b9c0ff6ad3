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

#include "prigen/nmt/trainer.h"

#include <cmath>
#include <numeric>

#include "prigen/common/rng.h"
#include "prigen/nmt/network.h"

namespace prigen::nmt {
namespace {

// SplitMix64 finalizer, used to derive independent streams from one seed.
std::uint64_t Derive(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

AdamOptimizer::AdamOptimizer(const Dims& d, double learning_rate)
    : lr_(learning_rate), m_(ZeroParams<double>(d)), v_(ZeroParams<double>(d)) {}

void AdamOptimizer::Step(Params<double>& params, const Params<double>& grads) {
  ++step_;
  const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(step_));
  const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(step_));
  auto p = params.All();
  auto g = grads.All();
  auto m = m_.All();
  auto v = v_.All();
  for (int t = 0; t < kNumTensors; ++t) {
    const std::size_t n = p[t]->size();
    double* pd = p[t]->data.data();
    const double* gd = g[t]->data.data();
    double* md = m[t]->data.data();
    double* vd = v[t]->data.data();
    for (std::size_t i = 0; i < n; ++i) {
      md[i] = beta1_ * md[i] + (1.0 - beta1_) * gd[i];
      vd[i] = beta2_ * vd[i] + (1.0 - beta2_) * gd[i] * gd[i];
      pd[i] -= lr_ * (md[i] / c1) / (std::sqrt(vd[i] / c2) + eps_);
    }
  }
}

double ClipGlobalNorm(Params<double>& grads, double max_norm) {
  double sq = 0.0;
  for (const auto* t : grads.All()) {
    for (double v : t->data) sq += v * v;
  }
  const double norm = std::sqrt(sq);
  if (norm > max_norm) {
    const double s = max_norm / norm;
    for (auto* t : grads.All()) {
      for (double& v : t->data) v *= s;
    }
  }
  return norm;
}

double EvaluateLoss(const Model& model, const std::vector<Example>& examples) {
  if (examples.empty()) return 0.0;
  const Dims d = model.dims();
  double loss = 0.0;
  std::size_t tokens = 0;
  for (const Example& ex : examples) {
    const Example* one[] = {&ex};
    auto r = ForwardBackward<double>(model.params, d, one, 1.0, nullptr, nullptr);
    loss += r.loss_sum;
    tokens += r.tokens;
  }
  return loss / static_cast<double>(tokens);
}

TrainReport Train(Model& model, const std::vector<Example>& train, const std::vector<Example>& validation, bool init,
                  const EpochCallback& on_epoch) {
  Validate(model.hp);
  if (train.empty()) throw ArgumentError("training set is empty");
  const Dims d = model.dims();
  if (init) model.params = InitParams(d, Derive(model.hp.seed, 0));

  Rng order_rng(Derive(model.hp.seed, 1));
  Rng dropout_rng(Derive(model.hp.seed, 2));
  AdamOptimizer adam(d, model.hp.learning_rate);
  Params<double> grads = ZeroParams<double>(d);

  TrainReport report;
  report.seed = model.hp.seed;
  std::vector<std::size_t> order(train.size());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t batch_size = static_cast<std::size_t>(model.hp.batch_size);

  for (int epoch = 0; epoch < model.hp.epochs; ++epoch) {
    order_rng.Shuffle(order);
    double loss_sum = 0.0;
    std::size_t tokens = 0;
    for (std::size_t start = 0; start < order.size(); start += batch_size) {
      std::vector<const Example*> batch;
      for (std::size_t i = start; i < std::min(order.size(), start + batch_size); ++i) batch.push_back(&train[order[i]]);
      for (auto* t : grads.All()) t->Zero();
      auto r = ForwardBackward<double>(model.params, d, batch, model.hp.dropout_keep, &dropout_rng, &grads);
      if (!std::isfinite(r.loss_sum)) {
        throw DivergenceError("loss is not finite at epoch " + std::to_string(epoch + 1) +
                              "; lower the learning rate");
      }
      loss_sum += r.loss_sum;
      tokens += r.tokens;
      ClipGlobalNorm(grads, kClipNorm);
      adam.Step(model.params, grads);
    }
    const double mean = loss_sum / static_cast<double>(tokens);
    report.epoch_losses.push_back(mean);
    double val = 0.0;
    if (!validation.empty()) {
      val = EvaluateLoss(model, validation);
      report.validation_losses.push_back(val);
    }
    if (on_epoch) on_epoch(epoch + 1, mean, val);
  }
  if (!AllFinite(model.params)) throw DivergenceError("parameters are not finite; lower the learning rate");
  return report;
}

}  // namespace prigen::nmt
