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

#include <cstdint>
#include <functional>
#include <vector>

#include "prigen/common/error.h"
#include "prigen/nmt/model.h"

namespace prigen::nmt {

// Loss became NaN or infinite during training.
class DivergenceError : public InputError {
 public:
  using InputError::InputError;
};

struct TrainReport {
  std::vector<double> epoch_losses;       // mean token cross-entropy per epoch
  std::vector<double> validation_losses;  // empty without a validation set
  std::uint64_t seed = 0;
};

inline constexpr double kClipNorm = 5.0;

class AdamOptimizer {
 public:
  AdamOptimizer(const Dims& d, double learning_rate);
  // Applies one update from grads (already clipped).
  void Step(Params<double>& params, const Params<double>& grads);

 private:
  double lr_;
  double beta1_ = 0.9;
  double beta2_ = 0.999;
  double eps_ = 1e-8;
  long step_ = 0;
  Params<double> m_, v_;
};

// Scales grads so that their global L2 norm is at most max_norm. Returns
// the norm before clipping.
double ClipGlobalNorm(Params<double>& grads, double max_norm);

// Mean token cross-entropy without dropout.
double EvaluateLoss(const Model& model, const std::vector<Example>& examples);

using EpochCallback = std::function<void(int epoch, double train_loss, double validation_loss)>;

// Trains model.params in place with Adam and teacher forcing. Data order,
// initialization and dropout masks all derive from model.hp.seed. When
// init is true the parameters are freshly initialized first.
TrainReport Train(Model& model, const std::vector<Example>& train, const std::vector<Example>& validation,
                  bool init = true, const EpochCallback& on_epoch = {});

}  // namespace prigen::nmt
