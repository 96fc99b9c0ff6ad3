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

#include <vector>

#include "prigen/nmt/model.h"
#include "prigen/nmt/tensor.h"

namespace prigen::nmt {

struct Hypothesis {
  std::vector<int> tokens;  // without SOS/EOS
  double log_prob = 0.0;
  bool finished = false;    // ended with EOS
  // log_prob divided by the number of emitted tokens, EOS included.
  double Score() const;
};

// Argmax decoding from SOS until EOS or max_parts steps. Ties go to the
// lowest id; PAD and SOS are never emitted. attention, if given, receives
// the weights of every step.
Hypothesis DecodeGreedy(const Params<double>& p, const Dims& d, const Tensor<double>& z, int max_parts,
                        std::vector<std::vector<double>>* attention = nullptr);

// Beam search ranked by Score(), best first, distinct sequences. The greedy
// hypothesis always takes part in the final ranking. With beam_width 1 the
// first result equals DecodeGreedy.
std::vector<Hypothesis> DecodeBeam(const Params<double>& p, const Dims& d, const Tensor<double>& z, int max_parts,
                                   int beam_width);

// Predicts target ids for one example.
std::vector<int> Predict(const Model& model, const Example& example, int beam_width);

}  // namespace prigen::nmt
