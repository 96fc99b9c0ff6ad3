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

#include "prigen/nmt/decoder.h"

#include <algorithm>
#include <limits>

#include "prigen/common/error.h"
#include "prigen/nmt/network.h"

namespace prigen::nmt {
namespace {

bool Emittable(int v) { return v != kPad && v != kSos; }

struct Live {
  Hypothesis hyp;
  DecoderState<double> state;
  int last = kSos;
};

bool RankBefore(const Hypothesis& a, const Hypothesis& b) {
  if (a.Score() != b.Score()) return a.Score() > b.Score();
  if (a.log_prob != b.log_prob) return a.log_prob > b.log_prob;
  return a.tokens < b.tokens;
}

}  // namespace

double Hypothesis::Score() const {
  const double count = static_cast<double>(tokens.size() + (finished ? 1 : 0));
  return count == 0 ? 0.0 : log_prob / count;
}

Hypothesis DecodeGreedy(const Params<double>& p, const Dims& d, const Tensor<double>& z, int max_parts,
                        std::vector<std::vector<double>>* attention) {
  Hypothesis hyp;
  DecoderState<double> state = StartDecoder(z);
  int prev = kSos;
  std::vector<double> log_probs, alpha;
  for (int step = 0; step < max_parts; ++step) {
    state = DecoderStep<double>(p, d, z, state, prev, &log_probs, attention ? &alpha : nullptr);
    if (attention) attention->push_back(alpha);
    int best = -1;
    for (int v = 0; v < d.targets; ++v) {
      if (Emittable(v) && (best < 0 || log_probs[v] > log_probs[best])) best = v;
    }
    hyp.log_prob += log_probs[best];
    if (best == kEos) {
      hyp.finished = true;
      break;
    }
    hyp.tokens.push_back(best);
    prev = best;
  }
  return hyp;
}

std::vector<Hypothesis> DecodeBeam(const Params<double>& p, const Dims& d, const Tensor<double>& z, int max_parts,
                                   int beam_width) {
  if (beam_width < 1) throw ArgumentError("beam width must be at least 1");
  struct Candidate {
    double total;
    double step;
    std::size_t beam;
    int token;
  };

  std::vector<Hypothesis> pool;
  std::vector<Live> beams(1);
  beams[0].state = StartDecoder(z);
  std::vector<double> log_probs;
  for (int step = 0; step < max_parts && !beams.empty(); ++step) {
    std::vector<Candidate> cands;
    std::vector<DecoderState<double>> next_states(beams.size());
    for (std::size_t b = 0; b < beams.size(); ++b) {
      next_states[b] = DecoderStep<double>(p, d, z, beams[b].state, beams[b].last, &log_probs, nullptr);
      for (int v = 0; v < d.targets; ++v) {
        if (Emittable(v)) cands.push_back({beams[b].hyp.log_prob + log_probs[v], log_probs[v], b, v});
      }
    }
    const std::size_t keep = std::min(cands.size(), static_cast<std::size_t>(beam_width));
    // Ties: beam index, then step score, then token id.
    std::partial_sort(cands.begin(), cands.begin() + keep, cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.total != b.total) return a.total > b.total;
      if (a.beam != b.beam) return a.beam < b.beam;
      if (a.step != b.step) return a.step > b.step;
      return a.token < b.token;
    });
    std::vector<Live> next;
    for (std::size_t k = 0; k < keep; ++k) {
      const Candidate& c = cands[k];
      Live l;
      l.hyp = beams[c.beam].hyp;
      l.hyp.log_prob = c.total;
      if (c.token == kEos) {
        l.hyp.finished = true;
        pool.push_back(std::move(l.hyp));
        continue;
      }
      l.hyp.tokens.push_back(c.token);
      l.state = next_states[c.beam];
      l.last = c.token;
      next.push_back(std::move(l));
    }
    beams = std::move(next);
  }
  for (auto& l : beams) pool.push_back(std::move(l.hyp));
  pool.push_back(DecodeGreedy(p, d, z, max_parts));

  std::stable_sort(pool.begin(), pool.end(), RankBefore);
  std::vector<Hypothesis> out;
  for (auto& h : pool) {
    bool dup = std::any_of(out.begin(), out.end(),
                           [&](const Hypothesis& o) { return o.tokens == h.tokens && o.finished == h.finished; });
    if (!dup) out.push_back(std::move(h));
  }
  return out;
}

std::vector<int> Predict(const Model& model, const Example& example, int beam_width) {
  const Dims d = model.dims();
  Tensor<double> z = EncodeContexts(model.params, d, example.contexts);
  if (beam_width <= 1) return DecodeGreedy(model.params, d, z, model.hp.max_target_parts).tokens;
  return DecodeBeam(model.params, d, z, model.hp.max_target_parts, beam_width).front().tokens;
}

}  // namespace prigen::nmt
