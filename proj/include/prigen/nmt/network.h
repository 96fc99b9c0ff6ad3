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
#include <span>
#include <vector>

#include "prigen/common/rng.h"
#include "prigen/nmt/model.h"
#include "prigen/nmt/tensor.h"
#include "prigen/nmt/vocab.h"

namespace prigen::nmt {

// Context vectors z (one row of decoder_state_size per context), without
// dropout. An empty context list is padded with one all-PAD context.
template <typename Real>
Tensor<Real> EncodeContexts(const Params<Real>& p, const Dims& d, std::span<const EncodedContext> contexts);

template <typename Real>
struct DecoderState {
  std::vector<Real> h;
  std::vector<Real> c;
};

// Initial decoder state: h and c both set to the mean context vector.
template <typename Real>
DecoderState<Real> StartDecoder(const Tensor<Real>& z);

// Feeds prev_token and returns the next state. log_probs receives the
// output distribution, attention the weights over contexts (either may be
// null).
template <typename Real>
DecoderState<Real> DecoderStep(const Params<Real>& p, const Dims& d, const Tensor<Real>& z,
                               const DecoderState<Real>& state, int prev_token, std::vector<Real>* log_probs,
                               std::vector<Real>* attention);

template <typename Real>
struct BatchResult {
  Real loss_sum = 0;        // summed token cross-entropy
  std::size_t tokens = 0;   // target tokens including EOS
};

// Teacher-forced loss over a batch. When grads is non-null it receives the
// gradient of loss_sum / tokens (added to its current contents). Dropout is
// applied to context inputs when dropout_rng is non-null and keep < 1.
template <typename Real>
BatchResult<Real> ForwardBackward(const Params<Real>& p, const Dims& d, std::span<const Example* const> batch,
                                  double dropout_keep, Rng* dropout_rng, Params<Real>* grads);

}  // namespace prigen::nmt
