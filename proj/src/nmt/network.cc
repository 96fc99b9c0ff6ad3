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

#include "prigen/nmt/network.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "prigen/nmt/kernels.h"

namespace prigen::nmt {
namespace {

using kernels::Axpy;
using kernels::Dot;
using kernels::Gemv;
using kernels::GemvTrans;
using kernels::OuterAdd;

template <typename Real>
Real Sigmoid(Real x) {
  return Real(1) / (Real(1) + std::exp(-x));
}

template <typename Real>
struct LstmCache {
  std::vector<Real> x;  // [input ; h_prev]
  std::vector<Real> i, f, g, o, c_prev, c, tanh_c, h;
};

template <typename Real>
void LstmForward(const Tensor<Real>& w, const Tensor<Real>& b, std::size_t hidden, const Real* input,
                 std::size_t in_dim, const Real* h_prev, const Real* c_prev, LstmCache<Real>& s) {
  s.x.assign(input, input + in_dim);
  s.x.insert(s.x.end(), h_prev, h_prev + hidden);
  std::vector<Real> a(b.data);
  Gemv(w.data.data(), 4 * hidden, in_dim + hidden, s.x.data(), a.data());
  s.i.resize(hidden);
  s.f.resize(hidden);
  s.g.resize(hidden);
  s.o.resize(hidden);
  s.c.resize(hidden);
  s.tanh_c.resize(hidden);
  s.h.resize(hidden);
  s.c_prev.assign(c_prev, c_prev + hidden);
  for (std::size_t k = 0; k < hidden; ++k) {
    s.i[k] = Sigmoid(a[k]);
    s.f[k] = Sigmoid(a[hidden + k]);
    s.g[k] = std::tanh(a[2 * hidden + k]);
    s.o[k] = Sigmoid(a[3 * hidden + k]);
    s.c[k] = s.f[k] * c_prev[k] + s.i[k] * s.g[k];
    s.tanh_c[k] = std::tanh(s.c[k]);
    s.h[k] = s.o[k] * s.tanh_c[k];
  }
}

// dh, dc: gradients on this step's h and c. Adds into dw, db and dinput;
// overwrites dh_prev and dc_prev.
template <typename Real>
void LstmBackward(const Tensor<Real>& w, std::size_t hidden, std::size_t in_dim, const LstmCache<Real>& s,
                  const Real* dh, const Real* dc_in, Tensor<Real>& dw, Tensor<Real>& db, Real* dinput, Real* dh_prev,
                  Real* dc_prev) {
  std::vector<Real> da(4 * hidden);
  for (std::size_t k = 0; k < hidden; ++k) {
    const Real dc = dc_in[k] + dh[k] * s.o[k] * (Real(1) - s.tanh_c[k] * s.tanh_c[k]);
    const Real d_o = dh[k] * s.tanh_c[k];
    const Real d_i = dc * s.g[k];
    const Real d_g = dc * s.i[k];
    const Real d_f = dc * s.c_prev[k];
    dc_prev[k] = dc * s.f[k];
    da[k] = d_i * s.i[k] * (Real(1) - s.i[k]);
    da[hidden + k] = d_f * s.f[k] * (Real(1) - s.f[k]);
    da[2 * hidden + k] = d_g * (Real(1) - s.g[k] * s.g[k]);
    da[3 * hidden + k] = d_o * s.o[k] * (Real(1) - s.o[k]);
  }
  const std::size_t width = in_dim + hidden;
  OuterAdd(da.data(), 4 * hidden, s.x.data(), width, dw.data.data());
  for (std::size_t k = 0; k < 4 * hidden; ++k) db.data[k] += da[k];
  std::vector<Real> dx(width, Real(0));
  GemvTrans(w.data.data(), 4 * hidden, width, da.data(), dx.data());
  for (std::size_t j = 0; j < in_dim; ++j) dinput[j] += dx[j];
  for (std::size_t k = 0; k < hidden; ++k) dh_prev[k] = dx[in_dim + k];
}

template <typename Real>
struct PathRun {
  std::vector<int> nodes;
  std::vector<LstmCache<Real>> fwd, bwd;
  std::vector<Real> dhf, dhb;

  const std::vector<Real>& hf() const { return fwd.back().h; }
  const std::vector<Real>& hb() const { return bwd.back().h; }
};

template <typename Real>
void RunPath(const Params<Real>& p, const Dims& d, PathRun<Real>& run) {
  const std::size_t enc = d.enc, emb = d.emb, n = run.nodes.size();
  std::vector<Real> zeros(enc, Real(0));
  run.fwd.resize(n);
  run.bwd.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    const Real* h = t ? run.fwd[t - 1].h.data() : zeros.data();
    const Real* c = t ? run.fwd[t - 1].c.data() : zeros.data();
    LstmForward(p.fwd_w, p.fwd_b, enc, p.node_emb.Row(run.nodes[t]), emb, h, c, run.fwd[t]);
  }
  for (std::size_t t = 0; t < n; ++t) {
    const Real* h = t ? run.bwd[t - 1].h.data() : zeros.data();
    const Real* c = t ? run.bwd[t - 1].c.data() : zeros.data();
    LstmForward(p.bwd_w, p.bwd_b, enc, p.node_emb.Row(run.nodes[n - 1 - t]), emb, h, c, run.bwd[t]);
  }
  run.dhf.assign(enc, Real(0));
  run.dhb.assign(enc, Real(0));
}

template <typename Real>
void BackwardPath(const Params<Real>& p, const Dims& d, const PathRun<Real>& run, Params<Real>& g) {
  const std::size_t enc = d.enc, emb = d.emb, n = run.nodes.size();
  auto unroll = [&](const Tensor<Real>& w, Tensor<Real>& dw, Tensor<Real>& db, const std::vector<LstmCache<Real>>& steps,
                    const std::vector<Real>& dh_final, bool reversed) {
    std::vector<Real> dh = dh_final, dc(enc, Real(0)), dh_prev(enc), dc_prev(enc);
    for (std::size_t t = n; t-- > 0;) {
      const int node = run.nodes[reversed ? n - 1 - t : t];
      LstmBackward(w, enc, emb, steps[t], dh.data(), dc.data(), dw, db, g.node_emb.Row(node), dh_prev.data(),
                   dc_prev.data());
      std::swap(dh, dh_prev);
      std::swap(dc, dc_prev);
    }
  };
  unroll(p.fwd_w, g.fwd_w, g.fwd_b, run.fwd, run.dhf, false);
  unroll(p.bwd_w, g.bwd_w, g.bwd_b, run.bwd, run.dhb, true);
}

const EncodedContext& PadContext() {
  static const EncodedContext pad{{kPad}, {kPad}, {kPad}};
  return pad;
}

std::vector<int> PathKey(const EncodedContext& c) { return c.path.empty() ? std::vector<int>{kPad} : c.path; }

template <typename Real>
class PathTable {
 public:
  int Intern(const Params<Real>& p, const Dims& d, const EncodedContext& c) {
    auto key = PathKey(c);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    PathRun<Real> run;
    run.nodes = key;
    RunPath(p, d, run);
    runs_.push_back(std::move(run));
    int id = static_cast<int>(runs_.size()) - 1;
    index_.emplace(std::move(key), id);
    return id;
  }
  PathRun<Real>& run(int id) { return runs_[id]; }
  std::vector<PathRun<Real>>& runs() { return runs_; }

 private:
  std::map<std::vector<int>, int> index_;
  std::vector<PathRun<Real>> runs_;
};

template <typename Real>
struct ContextAct {
  int path = -1;
  std::vector<Real> mask;  // empty when no dropout
  std::vector<Real> x;     // after dropout
};

// x = [sum left ; hf ; hb ; sum right]
template <typename Real>
void BuildContextInput(const Params<Real>& p, const Dims& d, const EncodedContext& c, const PathRun<Real>& run,
                       std::vector<Real>& x) {
  const std::size_t emb = d.emb, enc = d.enc;
  x.assign(d.context_width(), Real(0));
  for (int id : c.left) Axpy(Real(1), p.sub_emb.Row(id), x.data(), emb);
  std::copy(run.hf().begin(), run.hf().end(), x.begin() + emb);
  std::copy(run.hb().begin(), run.hb().end(), x.begin() + emb + enc);
  for (int id : c.right) Axpy(Real(1), p.sub_emb.Row(id), x.data() + emb + 2 * enc, emb);
}

template <typename Real>
void ProjectContext(const Params<Real>& p, const Dims& d, const std::vector<Real>& x, Real* z) {
  const std::size_t dec = d.dec;
  std::copy(p.ctx_b.data.begin(), p.ctx_b.data.end(), z);
  Gemv(p.ctx_w.data.data(), dec, x.size(), x.data(), z);
  for (std::size_t k = 0; k < dec; ++k) z[k] = std::tanh(z[k]);
}

template <typename Real>
struct StepCache {
  LstmCache<Real> lstm;
  int prev = 0;
  int gold = 0;
  std::vector<Real> u, alpha, cat, log_probs;
};

template <typename Real>
void LogSoftmax(std::vector<Real>& v) {
  Real m = *std::max_element(v.begin(), v.end());
  Real sum = 0;
  for (Real x : v) sum += std::exp(x - m);
  const Real lse = m + std::log(sum);
  for (Real& x : v) x -= lse;
}

template <typename Real>
void StepForward(const Params<Real>& p, const Dims& d, const Tensor<Real>& z, const Real* h_prev, const Real* c_prev,
                 int prev, StepCache<Real>& s) {
  const std::size_t dec = d.dec, emb = d.emb, n = z.rows;
  s.prev = prev;
  LstmForward(p.dec_w, p.dec_b, dec, p.tgt_emb.Row(prev), emb, h_prev, c_prev, s.lstm);
  const std::vector<Real>& h = s.lstm.h;
  s.u.assign(dec, Real(0));
  GemvTrans(p.attn_w.data.data(), dec, dec, h.data(), s.u.data());
  s.alpha.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.alpha[i] = Dot(s.u.data(), z.Row(i), dec);
  LogSoftmax(s.alpha);
  for (Real& a : s.alpha) a = std::exp(a);
  s.cat.assign(2 * dec, Real(0));
  std::copy(h.begin(), h.end(), s.cat.begin());
  for (std::size_t i = 0; i < n; ++i) Axpy(s.alpha[i], z.Row(i), s.cat.data() + dec, dec);
  s.log_probs.assign(d.targets, Real(0));
  Gemv(p.out_w.data.data(), d.targets, 2 * dec, s.cat.data(), s.log_probs.data());
  LogSoftmax(s.log_probs);
}

}  // namespace

template <typename Real>
Tensor<Real> EncodeContexts(const Params<Real>& p, const Dims& d, std::span<const EncodedContext> contexts) {
  std::span<const EncodedContext> ctxs = contexts;
  if (ctxs.empty()) ctxs = std::span<const EncodedContext>(&PadContext(), 1);
  PathTable<Real> table;
  Tensor<Real> z(ctxs.size(), d.dec);
  std::vector<Real> x;
  for (std::size_t i = 0; i < ctxs.size(); ++i) {
    int path = table.Intern(p, d, ctxs[i]);
    BuildContextInput(p, d, ctxs[i], table.run(path), x);
    ProjectContext(p, d, x, z.Row(i));
  }
  return z;
}

template <typename Real>
DecoderState<Real> StartDecoder(const Tensor<Real>& z) {
  DecoderState<Real> s;
  s.h.assign(z.cols, Real(0));
  for (std::size_t i = 0; i < z.rows; ++i) Axpy(Real(1), z.Row(i), s.h.data(), z.cols);
  for (Real& v : s.h) v /= static_cast<Real>(z.rows);
  s.c = s.h;
  return s;
}

template <typename Real>
DecoderState<Real> DecoderStep(const Params<Real>& p, const Dims& d, const Tensor<Real>& z,
                               const DecoderState<Real>& state, int prev_token, std::vector<Real>* log_probs,
                               std::vector<Real>* attention) {
  StepCache<Real> s;
  StepForward(p, d, z, state.h.data(), state.c.data(), prev_token, s);
  if (log_probs) *log_probs = std::move(s.log_probs);
  if (attention) *attention = std::move(s.alpha);
  return {std::move(s.lstm.h), std::move(s.lstm.c)};
}

template <typename Real>
BatchResult<Real> ForwardBackward(const Params<Real>& p, const Dims& d, std::span<const Example* const> batch,
                                  double dropout_keep, Rng* dropout_rng, Params<Real>* grads) {
  const std::size_t dec = d.dec, emb = d.emb, enc = d.enc, width = d.context_width();
  BatchResult<Real> result;
  for (const Example* ex : batch) result.tokens += ex->target.size() + 1;
  if (result.tokens == 0) return result;
  const Real scale = Real(1) / static_cast<Real>(result.tokens);
  const bool dropout = dropout_rng != nullptr && dropout_keep < 1.0;
  const Real inv_keep = Real(1) / static_cast<Real>(dropout_keep);

  PathTable<Real> table;
  for (const Example* ex : batch) {
    std::span<const EncodedContext> ctxs = ex->contexts;
    if (ctxs.empty()) ctxs = std::span<const EncodedContext>(&PadContext(), 1);
    const std::size_t n = ctxs.size();

    // Encoder.
    std::vector<ContextAct<Real>> acts(n);
    Tensor<Real> z(n, dec);
    for (std::size_t i = 0; i < n; ++i) {
      ContextAct<Real>& a = acts[i];
      a.path = table.Intern(p, d, ctxs[i]);
      BuildContextInput(p, d, ctxs[i], table.run(a.path), a.x);
      if (dropout) {
        a.mask.resize(width);
        for (std::size_t k = 0; k < width; ++k) {
          a.mask[k] = dropout_rng->Bernoulli(dropout_keep) ? inv_keep : Real(0);
          a.x[k] *= a.mask[k];
        }
      }
      ProjectContext(p, d, a.x, z.Row(i));
    }

    // Decoder with teacher forcing.
    DecoderState<Real> start = StartDecoder(z);
    const std::size_t steps = ex->target.size() + 1;
    std::vector<StepCache<Real>> cache(steps);
    for (std::size_t t = 0; t < steps; ++t) {
      const int prev = t == 0 ? kSos : ex->target[t - 1];
      const Real* h = t ? cache[t - 1].lstm.h.data() : start.h.data();
      const Real* c = t ? cache[t - 1].lstm.c.data() : start.c.data();
      StepForward(p, d, z, h, c, prev, cache[t]);
      cache[t].gold = t < ex->target.size() ? ex->target[t] : kEos;
      result.loss_sum -= cache[t].log_probs[cache[t].gold];
    }
    if (grads == nullptr) continue;
    Params<Real>& g = *grads;

    Tensor<Real> dz(n, dec);
    std::vector<Real> dh_next(dec, Real(0)), dc_next(dec, Real(0)), dh_prev(dec), dc_prev(dec);
    std::vector<Real> dlogits(d.targets), dcat(2 * dec), dh(dec), dalpha(n), du(dec);
    for (std::size_t t = steps; t-- > 0;) {
      StepCache<Real>& s = cache[t];
      for (int v = 0; v < d.targets; ++v) dlogits[v] = std::exp(s.log_probs[v]) * scale;
      dlogits[s.gold] -= scale;
      OuterAdd(dlogits.data(), d.targets, s.cat.data(), 2 * dec, g.out_w.data.data());
      std::fill(dcat.begin(), dcat.end(), Real(0));
      GemvTrans(p.out_w.data.data(), d.targets, 2 * dec, dlogits.data(), dcat.data());
      for (std::size_t k = 0; k < dec; ++k) dh[k] = dcat[k] + dh_next[k];
      const Real* dctx = dcat.data() + dec;

      Real weighted = 0;
      for (std::size_t i = 0; i < n; ++i) {
        dalpha[i] = Dot(dctx, z.Row(i), dec);
        weighted += s.alpha[i] * dalpha[i];
        Axpy(s.alpha[i], dctx, dz.Row(i), dec);
      }
      std::fill(du.begin(), du.end(), Real(0));
      for (std::size_t i = 0; i < n; ++i) {
        const Real dscore = s.alpha[i] * (dalpha[i] - weighted);
        Axpy(dscore, z.Row(i), du.data(), dec);
        Axpy(dscore, s.u.data(), dz.Row(i), dec);
      }
      // u = W_a^T h
      OuterAdd(s.lstm.h.data(), dec, du.data(), dec, g.attn_w.data.data());
      Gemv(p.attn_w.data.data(), dec, dec, du.data(), dh.data());

      LstmBackward(p.dec_w, dec, emb, s.lstm, dh.data(), dc_next.data(), g.dec_w, g.dec_b, g.tgt_emb.Row(s.prev),
                   dh_prev.data(), dc_prev.data());
      std::swap(dh_next, dh_prev);
      std::swap(dc_next, dc_prev);
    }
    // h0 = c0 = mean(z)
    for (std::size_t i = 0; i < n; ++i) {
      Real* row = dz.Row(i);
      for (std::size_t k = 0; k < dec; ++k) row[k] += (dh_next[k] + dc_next[k]) / static_cast<Real>(n);
    }

    std::vector<Real> da(dec), dx(width);
    for (std::size_t i = 0; i < n; ++i) {
      const Real* zi = z.Row(i);
      const Real* dzi = dz.Row(i);
      for (std::size_t k = 0; k < dec; ++k) da[k] = dzi[k] * (Real(1) - zi[k] * zi[k]);
      for (std::size_t k = 0; k < dec; ++k) g.ctx_b.data[k] += da[k];
      OuterAdd(da.data(), dec, acts[i].x.data(), width, g.ctx_w.data.data());
      std::fill(dx.begin(), dx.end(), Real(0));
      GemvTrans(p.ctx_w.data.data(), dec, width, da.data(), dx.data());
      if (!acts[i].mask.empty()) {
        for (std::size_t k = 0; k < width; ++k) dx[k] *= acts[i].mask[k];
      }
      for (int id : ctxs[i].left) Axpy(Real(1), dx.data(), g.sub_emb.Row(id), emb);
      PathRun<Real>& run = table.run(acts[i].path);
      Axpy(Real(1), dx.data() + emb, run.dhf.data(), enc);
      Axpy(Real(1), dx.data() + emb + enc, run.dhb.data(), enc);
      for (int id : ctxs[i].right) Axpy(Real(1), dx.data() + emb + 2 * enc, g.sub_emb.Row(id), emb);
    }
  }
  if (grads != nullptr) {
    for (auto& run : table.runs()) BackwardPath(p, d, run, *grads);
  }
  return result;
}

#define PRIGEN_INSTANTIATE(Real)                                                                                     \
  template Tensor<Real> EncodeContexts<Real>(const Params<Real>&, const Dims&, std::span<const EncodedContext>);  \
  template DecoderState<Real> StartDecoder<Real>(const Tensor<Real>&);                                             \
  template DecoderState<Real> DecoderStep<Real>(const Params<Real>&, const Dims&, const Tensor<Real>&,             \
                                                const DecoderState<Real>&, int, std::vector<Real>*,                \
                                                std::vector<Real>*);                                               \
  template BatchResult<Real> ForwardBackward<Real>(const Params<Real>&, const Dims&,                               \
                                                   std::span<const Example* const>, double, Rng*, Params<Real>*);

PRIGEN_INSTANTIATE(double)
PRIGEN_INSTANTIATE(long double)

#undef PRIGEN_INSTANTIATE

}  // namespace prigen::nmt
