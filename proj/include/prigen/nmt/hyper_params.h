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

namespace prigen::nmt {

struct HyperParams {
  int embedding_size = 64;
  int encoder_state_size = 64;  // per direction
  int decoder_state_size = 128;
  int max_target_parts = 37;    // including the end token
  int max_contexts = 200;
  int beam_width = 1;
  double learning_rate = 1e-3;
  int epochs = 10;
  int batch_size = 32;
  std::uint64_t seed = 7;
  double dropout_keep = 0.75;

  bool operator==(const HyperParams&) const = default;
};

// Throws ArgumentError.
void Validate(const HyperParams& hp);

}  // namespace prigen::nmt
