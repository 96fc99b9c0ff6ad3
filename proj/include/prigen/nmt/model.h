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
#include <string_view>
#include <utility>
#include <vector>

#include "prigen/nmt/hyper_params.h"
#include "prigen/nmt/tensor.h"
#include "prigen/nmt/vocab.h"

namespace prigen::nmt {

inline constexpr int kNumTensors = 13;

// Canonical tensor order, used by checkpoints and optimizers.
inline constexpr std::array<std::string_view, kNumTensors> kTensorNames = {
    "subtoken_embedding", "node_embedding",  "target_embedding", "path_fwd_weight", "path_fwd_bias",
    "path_bwd_weight",    "path_bwd_bias",   "context_weight",   "context_bias",    "decoder_weight",
    "decoder_bias",       "attention_weight", "output_weight"};

enum class ParamGroup { kEmbeddings, kPathEncoder, kProjection, kDecoderCell, kAttention, kOutput };
inline constexpr int kNumGroups = 6;

std::string_view GroupName(ParamGroup group);
ParamGroup GroupOf(int tensor_index);

struct Dims {
  int emb = 0;
  int enc = 0;
  int dec = 0;
  int subtokens = 0;
  int nodes = 0;
  int targets = 0;

  int context_width() const { return 2 * emb + 2 * enc; }
};

Dims MakeDims(const HyperParams& hp, const Vocab& vocab);

// Expected (rows, cols) of every tensor, in canonical order.
std::array<std::pair<std::size_t, std::size_t>, kNumTensors> TensorShapes(const Dims& d);

template <typename Real>
struct Params {
  Tensor<Real> sub_emb, node_emb, tgt_emb;
  Tensor<Real> fwd_w, fwd_b, bwd_w, bwd_b;  // gate rows ordered i, f, g, o
  Tensor<Real> ctx_w, ctx_b;
  Tensor<Real> dec_w, dec_b;
  Tensor<Real> attn_w;
  Tensor<Real> out_w;

  std::array<Tensor<Real>*, kNumTensors> All() {
    return {&sub_emb, &node_emb, &tgt_emb, &fwd_w, &fwd_b, &bwd_w, &bwd_b,
            &ctx_w,   &ctx_b,    &dec_w,   &dec_b, &attn_w, &out_w};
  }
  std::array<const Tensor<Real>*, kNumTensors> All() const {
    return {&sub_emb, &node_emb, &tgt_emb, &fwd_w, &fwd_b, &bwd_w, &bwd_b,
            &ctx_w,   &ctx_b,    &dec_w,   &dec_b, &attn_w, &out_w};
  }
};

template <typename Real>
Params<Real> ZeroParams(const Dims& d) {
  Params<Real> p;
  auto shapes = TensorShapes(d);
  auto all = p.All();
  for (int i = 0; i < kNumTensors; ++i) *all[i] = Tensor<Real>(shapes[i].first, shapes[i].second);
  return p;
}

// Uniform in [-0.1, 0.1], tensors filled in canonical order from the seed.
Params<double> InitParams(const Dims& d, std::uint64_t seed);

template <typename To, typename From>
Params<To> ConvertParams(const Params<From>& in) {
  Params<To> out;
  auto src = in.All();
  auto dst = out.All();
  for (int i = 0; i < kNumTensors; ++i) {
    dst[i]->rows = src[i]->rows;
    dst[i]->cols = src[i]->cols;
    dst[i]->data.assign(src[i]->data.begin(), src[i]->data.end());
  }
  return out;
}

bool AllFinite(const Params<double>& p);

struct Model {
  HyperParams hp;
  Vocab vocab;
  Params<double> params;

  Dims dims() const { return MakeDims(hp, vocab); }
};

}  // namespace prigen::nmt
