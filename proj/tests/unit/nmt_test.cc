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

#include <algorithm>
#include <cmath>
#include <functional>

#include "nmt_fixtures.h"
#include "prigen/common/error.h"
#include "prigen/nmt/checkpoint.h"
#include "prigen/nmt/decoder.h"
#include "prigen/nmt/grad_check.h"
#include "prigen/nmt/network.h"
#include "prigen/nmt/trainer.h"

namespace prigen::nmt {
namespace {

corpus::DatasetLine Line(std::vector<std::string> target, std::vector<std::string> left) {
  corpus::DatasetLine l;
  l.target = std::move(target);
  l.contexts.push_back({left, {"NameExpr^", "BinaryExpr:plus_", "NameExpr_"}, {"x"}});
  return l;
}

TEST(VocabTest, FrequencyThreshold) {
  std::vector<corpus::DatasetLine> lines;
  for (int i = 0; i < 5; ++i) lines.push_back(Line({"get"}, {"get"}));
  lines.push_back(Line({"set"}, {"x"}));
  Vocab v2 = BuildVocab(lines, 2);
  EXPECT_TRUE(v2.subtokens.Contains("get"));
  EXPECT_FALSE(v2.subtokens.Contains("set"));
  EXPECT_EQ(v2.subtokens.size(), kNumReserved + 2);  // get, x (x appears 6 times)
  EXPECT_EQ(v2.subtokens.Lookup("missing"), kUnk);
  Vocab v1 = BuildVocab(lines, 1);
  EXPECT_TRUE(v1.targets.Contains("set"));
  EXPECT_EQ(BuildVocab(lines, 1), v1);
  EXPECT_EQ(v1.targets.Token(kNumReserved), "get");
  EXPECT_THROW(BuildVocab({}, 1), ArgumentError);
}

TEST(VocabTest, EncodeTruncates) {
  std::vector<corpus::DatasetLine> lines = {Line({"a", "b", "c", "d"}, {"x"}), Line({"e"}, {"y"})};
  lines[0].contexts.push_back(lines[0].contexts[0]);
  lines[0].contexts.push_back(lines[0].contexts[0]);
  Vocab v = BuildVocab(lines, 1);
  Example ex = EncodeExample(lines[0], v, 2, 3);
  EXPECT_EQ(ex.contexts.size(), 2u);
  EXPECT_EQ(ex.target.size(), 2u);
  EXPECT_EQ(DecodeTargets(ex.target, v), (std::vector<std::string>{"a", "b"}));
  Example unk = EncodeExample(Line({"zzz"}, {"qqq"}), v, 10, 10);
  EXPECT_EQ(unk.target, (std::vector<int>{kUnk}));
  EXPECT_EQ(unk.contexts[0].left, (std::vector<int>{kUnk}));
}

TEST(NetworkTest, ShapesAndAnalyticCases) {
  auto lines = testing::SyntheticLines(4, 1);
  HyperParams hp;
  hp.embedding_size = 4;
  hp.encoder_state_size = 4;
  hp.decoder_state_size = 8;
  Model model = testing::MakeModel(lines, hp);
  const Dims d = model.dims();
  auto ex = testing::EncodeAll(lines, model);
  std::vector<EncodedContext> one(ex[0].contexts.begin(), ex[0].contexts.begin() + 1);
  auto z = EncodeContexts(model.params, d, one);
  EXPECT_EQ(z.rows, 1u);
  EXPECT_EQ(z.cols, 8u);
  std::vector<EncodedContext> dup = {ex[0].contexts[0], ex[0].contexts[0]};
  auto zd = EncodeContexts(model.params, d, dup);
  EXPECT_TRUE(std::equal(zd.Row(0), zd.Row(0) + 8, zd.Row(1)));
  auto empty = EncodeContexts(model.params, d, std::span<const EncodedContext>{});
  EXPECT_EQ(empty.rows, 1u);
  auto zero = ZeroParams<double>(d);
  auto z0 = EncodeContexts(zero, d, ex[0].contexts);
  for (double v : z0.data) EXPECT_EQ(v, 0.0);
}

TEST(DecoderTest, AttentionIsDistribution) {
  auto lines = testing::SyntheticLines(6, 2);
  Model model = testing::MakeModel(lines, testing::SmallHyperParams(3));
  const Dims d = model.dims();
  for (const auto& ex : testing::EncodeAll(lines, model)) {
    auto z = EncodeContexts(model.params, d, ex.contexts);
    std::vector<std::vector<double>> attention;
    Hypothesis h = DecodeGreedy(model.params, d, z, model.hp.max_target_parts, &attention);
    EXPECT_LE(static_cast<int>(h.tokens.size()), model.hp.max_target_parts);
    ASSERT_FALSE(attention.empty());
    for (const auto& a : attention) {
      ASSERT_EQ(a.size(), z.rows);
      double sum = 0;
      for (double w : a) {
        EXPECT_GE(w, 0.0);
        sum += w;
      }
      EXPECT_NEAR(sum, 1.0, 1e-6);
    }
    std::vector<EncodedContext> single(ex.contexts.begin(), ex.contexts.begin() + 1);
    auto z1 = EncodeContexts(model.params, d, single);
    attention.clear();
    DecodeGreedy(model.params, d, z1, model.hp.max_target_parts, &attention);
    for (const auto& a : attention) EXPECT_EQ(a[0], 1.0);
  }
}

TEST(DecoderTest, BeamOneIsGreedyAndWiderDominates) {
  auto lines = testing::SyntheticLines(10, 4);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Model model = testing::MakeModel(lines, testing::SmallHyperParams(seed));
    const Dims d = model.dims();
    auto ex = testing::EncodeAll(lines, model);
    auto z = EncodeContexts(model.params, d, ex[seed].contexts);
    Hypothesis greedy = DecodeGreedy(model.params, d, z, model.hp.max_target_parts);
    auto beam1 = DecodeBeam(model.params, d, z, model.hp.max_target_parts, 1);
    EXPECT_EQ(beam1.front().tokens, greedy.tokens);
    EXPECT_EQ(beam1.front().log_prob, greedy.log_prob);
    auto beam3 = DecodeBeam(model.params, d, z, model.hp.max_target_parts, 3);
    EXPECT_GE(beam3.front().Score(), greedy.Score());
    for (const auto& h : beam3) EXPECT_TRUE(std::isfinite(h.log_prob));
    for (std::size_t i = 1; i < beam3.size(); ++i) EXPECT_GE(beam3[i - 1].Score(), beam3[i].Score());
  }
}

TEST(DecoderTest, WideBeamMatchesExhaustiveEnumeration) {
  // Two real target tokens, two steps.
  std::vector<corpus::DatasetLine> lines = {Line({"p", "q"}, {"x"})};
  HyperParams hp = testing::SmallHyperParams(5);
  hp.max_target_parts = 2;
  Model model = testing::MakeModel(lines, hp);
  const Dims d = model.dims();
  ASSERT_EQ(d.targets, kNumReserved + 2);
  auto ex = testing::EncodeAll(lines, model);
  auto z = EncodeContexts(model.params, d, ex[0].contexts);

  std::vector<Hypothesis> all;
  std::function<void(DecoderState<double>, int, Hypothesis)> expand = [&](DecoderState<double> s, int prev,
                                                                          Hypothesis h) {
    if (static_cast<int>(h.tokens.size()) == hp.max_target_parts) {
      all.push_back(h);
      return;
    }
    std::vector<double> lp;
    auto next = DecoderStep<double>(model.params, d, z, s, prev, &lp, nullptr);
    for (int v = 0; v < d.targets; ++v) {
      if (v == kPad || v == kSos) continue;
      Hypothesis c = h;
      c.log_prob += lp[v];
      if (v == kEos) {
        c.finished = true;
        all.push_back(c);
      } else {
        c.tokens.push_back(v);
        expand(next, v, c);
      }
    }
  };
  expand(StartDecoder(z), kSos, Hypothesis{});
  std::sort(all.begin(), all.end(), [](const Hypothesis& a, const Hypothesis& b) { return a.Score() > b.Score(); });
  auto beam = DecodeBeam(model.params, d, z, hp.max_target_parts, 64);
  ASSERT_EQ(beam.size(), all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(beam[i].tokens, all[i].tokens) << i;
    EXPECT_EQ(beam[i].finished, all[i].finished) << i;
    EXPECT_NEAR(beam[i].log_prob, all[i].log_prob, 1e-12);
  }
}

TEST(GradCheckTest, FreshModelAllGroups) {
  auto lines = testing::SyntheticLines(3, 6, astpaths::PathLimits{9, 2, 10, 0});
  Model model = testing::MakeModel(lines, testing::SmallHyperParams(8));
  auto ex = testing::EncodeAll(lines, model);
  GradCheckOptions opt;
  opt.seed = 1;
  GradCheckResult r = GradCheck(model.params, model.dims(), ex[0], opt);
  EXPECT_LT(r.max_rel_error, 1e-4);
  for (const auto& g : r.groups) {
    EXPECT_GT(g.samples, 0);
    EXPECT_LT(g.max_rel_error, 1e-4);
  }
  opt.corrupt_output_gradient = true;
  EXPECT_GT(GradCheck(model.params, model.dims(), ex[0], opt).groups[static_cast<int>(ParamGroup::kOutput)].max_rel_error,
            1e-2);
}

TEST(GradCheckTest, NearZeroLossStaysGuarded) {
  std::vector<corpus::DatasetLine> lines = {Line({"p"}, {"x"})};
  HyperParams hp = testing::SmallHyperParams(2);
  hp.epochs = 400;
  hp.learning_rate = 5e-2;
  hp.dropout_keep = 1.0;
  hp.batch_size = 1;
  Model model = testing::MakeModel(lines, hp);
  auto ex = testing::EncodeAll(lines, model);
  Train(model, ex, {});
  EXPECT_LT(EvaluateLoss(model, ex), 1e-3);
  GradCheckOptions opt;
  opt.seed = 3;
  EXPECT_LT(GradCheck(model.params, model.dims(), ex[0], opt).max_rel_error, 1e-4);
}

TEST(TrainTest, DeterministicAndZeroLearningRate) {
  auto lines = testing::SyntheticLines(12, 7);
  HyperParams hp = testing::SmallHyperParams(11);
  hp.epochs = 3;
  Model a = testing::MakeModel(lines, hp), b = testing::MakeModel(lines, hp);
  auto ex = testing::EncodeAll(lines, a);
  auto ra = Train(a, ex, ex), rb = Train(b, ex, ex);
  EXPECT_EQ(ra.epoch_losses, rb.epoch_losses);
  EXPECT_EQ(ra.validation_losses, rb.validation_losses);
  EXPECT_EQ(SerializeModel(a), SerializeModel(b));

  hp.learning_rate = 0.0;
  hp.dropout_keep = 1.0;
  Model c = testing::MakeModel(lines, hp);
  auto rc = Train(c, ex, {});
  for (double l : rc.epoch_losses) EXPECT_NEAR(l, rc.epoch_losses.front(), 1e-12 * rc.epoch_losses.front());
}

TEST(TrainTest, FixedBatchLossMostlyNonIncreasing) {
  auto lines = testing::SyntheticLines(8, 12);
  int monotone = 0;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    HyperParams hp = testing::SmallHyperParams(seed);
    hp.epochs = 10;
    hp.learning_rate = 1e-2;
    hp.batch_size = 8;
    Model model = testing::MakeModel(lines, hp);
    auto ex = testing::EncodeAll(lines, model);
    std::vector<double> losses = {EvaluateLoss(model, ex)};
    Train(model, ex, {}, true, [&](int, double, double) { losses.push_back(EvaluateLoss(model, ex)); });
    bool ok = true;
    for (std::size_t i = 1; i < losses.size(); ++i) ok = ok && losses[i] <= losses[i - 1];
    monotone += ok;
  }
  EXPECT_GE(monotone, 9);
}

TEST(TrainTest, DivergenceAndBadArguments) {
  auto lines = testing::SyntheticLines(4, 13);
  HyperParams hp = testing::SmallHyperParams(1);
  hp.learning_rate = 1e300;
  hp.epochs = 3;
  Model model = testing::MakeModel(lines, hp);
  auto ex = testing::EncodeAll(lines, model);
  EXPECT_THROW(Train(model, ex, {}), DivergenceError);
  model.hp.learning_rate = 1e-3;
  EXPECT_THROW(Train(model, {}, {}), ArgumentError);
  model.hp.dropout_keep = 0.0;
  EXPECT_THROW(Train(model, ex, {}), ArgumentError);
}

TEST(CheckpointTest, RoundTripAndRejections) {
  auto lines = testing::SyntheticLines(5, 14);
  Model model = testing::MakeModel(lines, testing::SmallHyperParams(4));
  const std::string bytes = SerializeModel(model);
  Model back = DeserializeModel(bytes);
  EXPECT_EQ(back.hp, model.hp);
  EXPECT_EQ(back.vocab, model.vocab);
  EXPECT_EQ(SerializeModel(back), bytes);
  EXPECT_THROW(DeserializeModel(bytes.substr(0, bytes.size() - 3)), ParseError);
  EXPECT_THROW(DeserializeModel(bytes + "x"), ParseError);
  std::string bad_magic = bytes;
  bad_magic[0] = 'X';
  EXPECT_THROW(DeserializeModel(bad_magic), ParseError);
  Model wrong = model;
  wrong.params.attn_w = Tensor<double>(3, 3);
  EXPECT_THROW(DeserializeModel(SerializeModel(wrong)), ValidationError);
  Model nan = model;
  nan.params.out_w.data[0] = std::nan("");
  EXPECT_THROW(DeserializeModel(SerializeModel(nan)), ValidationError);
}

TEST(PredictTest, PureFunctionOfInputs) {
  auto lines = testing::SyntheticLines(6, 15);
  Model model = testing::MakeModel(lines, testing::SmallHyperParams(9));
  auto ex = testing::EncodeAll(lines, model);
  for (const auto& e : ex) {
    EXPECT_EQ(Predict(model, e, 1), Predict(model, e, 1));
    EXPECT_EQ(Predict(model, e, 3), Predict(model, e, 3));
  }
}

}  // namespace
}  // namespace prigen::nmt
