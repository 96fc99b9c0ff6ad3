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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "nmt_fixtures.h"
#include "prigen/common/rng.h"
#include "prigen/nmt/kernels.h"
#include "prigen/nmt/network.h"

namespace prigen::nmt::kernels {
namespace {

class KernelModeGuard {
 public:
  KernelModeGuard() : saved_(ActiveKernelMode()) {}
  ~KernelModeGuard() { SetKernelMode(saved_); }

 private:
  KernelMode saved_;
};

std::vector<double> RandomVector(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.Uniform(-2.0, 2.0);
  return v;
}

TEST(KernelTest, Avx2MatchesScalar) {
  if (!Avx2Supported()) GTEST_SKIP() << "no AVX2 on this machine";
  Rng rng(1);
  for (std::size_t n = 0; n < 150; ++n) {
    auto a = RandomVector(rng, n), b = RandomVector(rng, n);
    const double s = DotScalar(a.data(), b.data(), n);
    const double v = DotAvx2(a.data(), b.data(), n);
    double mag = 0;
    for (std::size_t i = 0; i < n; ++i) mag += std::fabs(a[i] * b[i]);
    EXPECT_NEAR(s, v, 1e-14 * (mag + 1)) << n;
    auto y1 = b, y2 = b;
    AxpyScalar(0.37, a.data(), y1.data(), n);
    AxpyAvx2(0.37, a.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(y1[i], y2[i], 1e-15 * (std::fabs(y1[i]) + 1));
  }
}

TEST(KernelTest, UnalignedTails) {
  if (!Avx2Supported()) GTEST_SKIP() << "no AVX2 on this machine";
  Rng rng(2);
  auto a = RandomVector(rng, 40), b = RandomVector(rng, 40);
  for (std::size_t off = 0; off < 4; ++off) {
    for (std::size_t n = 0; n + off <= 40; ++n) {
      EXPECT_NEAR(DotScalar(a.data() + off, b.data() + off, n), DotAvx2(a.data() + off, b.data() + off, n), 1e-12);
    }
  }
}

TEST(KernelTest, ModeSelection) {
  KernelModeGuard guard;
  SetKernelMode(KernelMode::kScalar);
  EXPECT_FALSE(UseAvx2());
  SetKernelMode(KernelMode::kAuto);
  EXPECT_EQ(UseAvx2(), Avx2Supported());
  if (Avx2Supported()) {
    SetKernelMode(KernelMode::kAvx2);
    EXPECT_TRUE(UseAvx2());
  }
}

TEST(KernelTest, GemvFamilyAgainstNaiveLoops) {
  KernelModeGuard guard;
  Rng rng(3);
  const std::size_t rows = 7, cols = 13;
  auto w = RandomVector(rng, rows * cols), x = RandomVector(rng, cols), u = RandomVector(rng, rows);
  for (KernelMode mode : {KernelMode::kScalar, KernelMode::kAuto}) {
    SetKernelMode(mode);
    std::vector<double> y(rows, 0.5), yt(cols, -0.5), outer(w);
    Gemv(w.data(), rows, cols, x.data(), y.data());
    GemvTrans(w.data(), rows, cols, u.data(), yt.data());
    OuterAdd(u.data(), rows, x.data(), cols, outer.data());
    for (std::size_t r = 0; r < rows; ++r) {
      double s = 0.5;
      for (std::size_t c = 0; c < cols; ++c) s += w[r * cols + c] * x[c];
      EXPECT_NEAR(y[r], s, 1e-12);
    }
    for (std::size_t c = 0; c < cols; ++c) {
      double s = -0.5;
      for (std::size_t r = 0; r < rows; ++r) s += w[r * cols + c] * u[r];
      EXPECT_NEAR(yt[c], s, 1e-12);
    }
    for (std::size_t i = 0; i < rows * cols; ++i) EXPECT_NEAR(outer[i], w[i] + u[i / cols] * x[i % cols], 1e-12);
  }
}

TEST(KernelTest, NetworkAgreesAcrossModes) {
  KernelModeGuard guard;
  auto lines = testing::SyntheticLines(8, 3);
  Model model = testing::MakeModel(lines, HyperParams{});
  auto ex = testing::EncodeAll(lines, model);
  const Dims d = model.dims();
  std::vector<const Example*> batch;
  for (const auto& e : ex) batch.push_back(&e);
  SetKernelMode(KernelMode::kScalar);
  Params<double> gs = ZeroParams<double>(d);
  auto rs = ForwardBackward<double>(model.params, d, batch, 1.0, nullptr, &gs);
  SetKernelMode(KernelMode::kAuto);
  Params<double> ga = ZeroParams<double>(d);
  auto ra = ForwardBackward<double>(model.params, d, batch, 1.0, nullptr, &ga);
  EXPECT_NEAR(rs.loss_sum, ra.loss_sum, 1e-10 * rs.loss_sum);
  auto ts = gs.All(), ta = ga.All();
  for (int t = 0; t < kNumTensors; ++t) {
    for (std::size_t i = 0; i < ts[t]->size(); ++i) ASSERT_NEAR(ts[t]->data[i], ta[t]->data[i], 1e-10);
  }
}

}  // namespace
}  // namespace prigen::nmt::kernels
