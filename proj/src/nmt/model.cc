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

#include "prigen/nmt/model.h"

#include <cmath>

#include "prigen/common/error.h"
#include "prigen/common/rng.h"

namespace prigen::nmt {

void Validate(const HyperParams& hp) {
  if (hp.embedding_size < 1 || hp.encoder_state_size < 1 || hp.decoder_state_size < 1) {
    throw ArgumentError("model sizes must be at least 1");
  }
  if (hp.max_target_parts < 2) throw ArgumentError("max_target_parts must be at least 2");
  if (hp.max_contexts < 1) throw ArgumentError("max_contexts must be at least 1");
  if (hp.beam_width < 1) throw ArgumentError("beam_width must be at least 1");
  if (!(hp.learning_rate >= 0.0) || !std::isfinite(hp.learning_rate)) {
    throw ArgumentError("learning_rate must be finite and non-negative");
  }
  if (hp.epochs < 0) throw ArgumentError("epochs must be non-negative");
  if (hp.batch_size < 1) throw ArgumentError("batch_size must be at least 1");
  if (!(hp.dropout_keep > 0.0 && hp.dropout_keep <= 1.0)) throw ArgumentError("dropout_keep must be in (0, 1]");
}

std::string_view GroupName(ParamGroup group) {
  switch (group) {
    case ParamGroup::kEmbeddings: return "embeddings";
    case ParamGroup::kPathEncoder: return "path_encoder";
    case ParamGroup::kProjection: return "projection";
    case ParamGroup::kDecoderCell: return "decoder_cell";
    case ParamGroup::kAttention: return "attention";
    case ParamGroup::kOutput: return "output";
  }
  return "unknown";
}

ParamGroup GroupOf(int i) {
  if (i <= 2) return ParamGroup::kEmbeddings;
  if (i <= 6) return ParamGroup::kPathEncoder;
  if (i <= 8) return ParamGroup::kProjection;
  if (i <= 10) return ParamGroup::kDecoderCell;
  if (i == 11) return ParamGroup::kAttention;
  return ParamGroup::kOutput;
}

Dims MakeDims(const HyperParams& hp, const Vocab& vocab) {
  Dims d;
  d.emb = hp.embedding_size;
  d.enc = hp.encoder_state_size;
  d.dec = hp.decoder_state_size;
  d.subtokens = vocab.subtokens.size();
  d.nodes = vocab.nodes.size();
  d.targets = vocab.targets.size();
  return d;
}

std::array<std::pair<std::size_t, std::size_t>, kNumTensors> TensorShapes(const Dims& d) {
  auto z = [](int v) { return static_cast<std::size_t>(v); };
  return {{
      {z(d.subtokens), z(d.emb)},
      {z(d.nodes), z(d.emb)},
      {z(d.targets), z(d.emb)},
      {z(4 * d.enc), z(d.emb + d.enc)},
      {z(4 * d.enc), 1},
      {z(4 * d.enc), z(d.emb + d.enc)},
      {z(4 * d.enc), 1},
      {z(d.dec), z(d.context_width())},
      {z(d.dec), 1},
      {z(4 * d.dec), z(d.emb + d.dec)},
      {z(4 * d.dec), 1},
      {z(d.dec), z(d.dec)},
      {z(d.targets), z(2 * d.dec)},
  }};
}

Params<double> InitParams(const Dims& d, std::uint64_t seed) {
  Params<double> p = ZeroParams<double>(d);
  Rng rng(seed);
  for (auto* t : p.All()) {
    for (auto& v : t->data) v = rng.Uniform(-0.1, 0.1);
  }
  return p;
}

bool AllFinite(const Params<double>& p) {
  for (const auto* t : p.All()) {
    for (double v : t->data) {
      if (!std::isfinite(v)) return false;
    }
  }
  return true;
}

}  // namespace prigen::nmt
