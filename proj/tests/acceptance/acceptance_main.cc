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

// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "apk_fixtures.h"
#include "corpus_fixtures.h"
#include "java_fixtures.h"
#include "json.hpp"
#include "nmt_fixtures.h"
#include "prigen/apkstat/call_graph.h"
#include "prigen/apkstat/dex_file.h"
#include "prigen/apkstat/prcs.h"
#include "prigen/astpaths/java_parser.h"
#include "prigen/astpaths/path_extractor.h"
#include "prigen/caption/privacy_caption.h"
#include "prigen/common/error.h"
#include "prigen/common/log.h"
#include "prigen/common/rng.h"
#include "prigen/corpus/corpus.h"
#include "prigen/corpus/dataset_format.h"
#include "prigen/metrics/metrics.h"
#include "prigen/nmt/checkpoint.h"
#include "prigen/nmt/decoder.h"
#include "prigen/nmt/grad_check.h"
#include "prigen/nmt/trainer.h"
#include "prigen/pipeline/batch_extract.h"
#include "prigen/pipeline/caption_records.h"
#include "prigen/pipeline/corpus_records.h"
#include "random_apis.h"
#include "synthetic_corpus.h"

namespace prigen::acceptance {
namespace {

using Clock = std::chrono::steady_clock;
using apkstat::MethodId;

// Tolerances and limits.
constexpr double kHandTolerance = 1e-6;
constexpr double kReferenceTolerance = 1e-4;
constexpr double kGradTolerance = 1e-4;
constexpr double kFaultFloor = 1e-2;
constexpr double kOverfitExactMatch = 0.90;
constexpr int kOverfitEpochs = 300;
constexpr double kSingleExampleLoss = 0.05;
constexpr double kDeskBleu = 30.0;
constexpr double kDeskRougeF1 = 50.0;
constexpr int kFuzzInputs = 10000;
constexpr int kCaptionCases = 1000;

class Check {
 public:
  explicit Check(std::string* detail) : detail_(detail) {}
  bool operator()(bool ok, const std::string& what) {
    if (!ok && failures_++ < 5) *detail_ += (detail_->empty() ? "" : "; ") + what;
    return ok;
  }
  bool ok() const { return failures_ == 0; }

 private:
  std::string* detail_;
  int failures_ = 0;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(double v, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

metrics::Tokens T(const std::string& s) { return metrics::SplitWhitespace(s); }

// 1. Metrics against hand-computed vectors and the frozen reference fixture.
Outcome MetricsOracle() {
  Outcome o;
  Check c(&o.detail);
  using metrics::Bleu4Corpus;
  c(std::fabs(Bleu4Corpus({T("sends the user location")}, {T("sends the user location")}) - 1.0) < kHandTolerance,
    "identity");
  c(Bleu4Corpus({T("the the the the")}, {T("the cat sat down")}) == 0.0, "zero bigram");
  c(std::fabs(Bleu4Corpus({T("a b c d")}, {T("a b c d e f")}) - std::exp(-0.5)) < kHandTolerance, "brevity");
  metrics::RougeScore r = metrics::RougeLcsPair(T("the cat"), T("the cat sat"));
  c(std::fabs(r.precision - 1.0) < kHandTolerance && std::fabs(r.recall - 2.0 / 3.0) < kHandTolerance &&
        std::fabs(r.f1 - 0.8) < kHandTolerance,
    "rouge hand pair");
  metrics::EvalReport two = metrics::Evaluate({T("a b c"), T("the cat")}, {T("a b c"), T("the cat sat")});
  c(std::fabs(two.rouge_precision - 1.0) < kHandTolerance && std::fabs(two.rouge_recall - 5.0 / 6.0) < kHandTolerance &&
        std::fabs(two.rouge_f1 - 0.9) < kHandTolerance,
    "macro means");

  std::ifstream in(std::string(PRIGEN_TEST_FIXTURE_DIR) + "/metrics_fixture.json");
  if (!c(static_cast<bool>(in), "fixture missing")) return o;
  auto doc = nlohmann::json::parse(in);
  std::vector<metrics::Tokens> hyp, ref;
  for (const auto& p : doc["pairs"]) {
    hyp.push_back(T(p["hyp"].get<std::string>()));
    ref.push_back(T(p["ref"].get<std::string>()));
  }
  c(hyp.size() == 20, "fixture size");
  metrics::EvalReport e = metrics::Evaluate(hyp, ref);
  const double worst = std::max({std::fabs(e.bleu4 - doc["bleu4"].get<double>()),
                                 std::fabs(e.rouge_precision - doc["rouge_precision"].get<double>()),
                                 std::fabs(e.rouge_recall - doc["rouge_recall"].get<double>()),
                                 std::fabs(e.rouge_f1 - doc["rouge_f1"].get<double>())});
  c(worst < kReferenceTolerance, "reference gap " + Fmt(worst));
  o.pass = c.ok();
  if (o.pass) o.detail = "max reference gap " + Fmt(worst, 3);
  return o;
}

std::vector<apkstat::DexFile> ParseAll(const std::vector<std::vector<uint8_t>>& blobs) {
  std::vector<apkstat::DexFile> out;
  for (const auto& b : blobs) out.emplace_back(b);
  return out;
}

std::map<int, uint32_t> ApiCounts(const apkstat::Prcs& p, const permdb::ApiDb& db) {
  std::map<int, uint32_t> out;
  for (const auto& call : p.called_apis) {
    for (std::size_t e = 0; e < db.size(); ++e) {
      if (db.entries()[e] == call.api) out[static_cast<int>(e)] = call.call_sites;
    }
  }
  return out;
}

// 2. Call graph and PRCS against the planted-site ledger.
Outcome StaticAnalysisOracle(const permdb::ApiDb& db) {
  Outcome o;
  Check c(&o.detail);
  int apps = 0, prcs_checked = 0;
  for (uint64_t seed = 1000; seed < 1020; ++seed) {
    testing::FixtureOptions opts;
    opts.methods = 20 + static_cast<int>(seed % 31);
    testing::FixtureApp app = testing::RandomApp(seed, db, opts);
    c(app.instruction_counts.size() + app.bodiless.size() <= 50, "fixture too large");
    auto dexes = ParseAll(app.dex_blobs);
    apkstat::CallGraph g = apkstat::BuildCallGraph(dexes);
    c(g.EdgeSet() == testing::OracleEdges(app), "edges seed " + std::to_string(seed));
    std::map<int, std::vector<apkstat::Prcs>> by_hops;
    for (int hops : {1, 2}) {
      auto got = apkstat::FindPrcs(g, dexes, db, hops, app.apk_id);
      auto expect = testing::OraclePrcs(app, db, hops);
      c(got.size() == expect.size(), "count seed " + std::to_string(seed) + " hops " + std::to_string(hops));
      for (const auto& p : got) {
        auto it = expect.find(p.method);
        if (!c(it != expect.end(), "unexpected " + p.method.ToString())) continue;
        c(p.hop_distance == it->second.hop && p.loc == it->second.loc && ApiCounts(p, db) == it->second.apis,
          "mismatch " + p.method.ToString());
        ++prcs_checked;
      }
      by_hops[hops] = std::move(got);
    }
    std::map<MethodId, int> two;
    for (const auto& p : by_hops[2]) two[p.method] = p.hop_distance;
    for (const auto& p : by_hops[1]) {
      auto it = two.find(p.method);
      c(it != two.end() && it->second == p.hop_distance, "monotonicity " + p.method.ToString());
    }
    ++apps;
  }
  o.pass = c.ok();
  if (o.pass) o.detail = std::to_string(apps) + " apps, " + std::to_string(prcs_checked) + " PRCS matched";
  return o;
}

// 3. Random mutations of a fixture dex never escape as anything but a
// structured error.
Outcome DexRobustness(const permdb::ApiDb& db) {
  Outcome o;
  Check c(&o.detail);
  testing::FixtureApp app = testing::RandomApp(7, db, {20, 1, 0.15, 0.5});
  const auto& base = app.dex_blobs[0];
  Rng rng(20240611);
  int parsed = 0, rejected = 0;
  for (int i = 0; i < kFuzzInputs; ++i) {
    auto bytes = base;
    const int mode = static_cast<int>(rng.Below(4));
    const int edits = 1 + static_cast<int>(rng.Below(16));
    for (int e = 0; e < edits; ++e) {
      const std::size_t at = rng.Below(bytes.size());
      switch (mode) {
        case 0:
          bytes[at] = static_cast<uint8_t>(rng.Next());
          break;
        case 1:
          bytes[at] ^= static_cast<uint8_t>(1u << rng.Below(8));
          break;
        case 2:
          // 32-bit fields in the header and index tables.
          if (at + 4 <= bytes.size()) {
            const uint32_t v = rng.Bernoulli(0.5) ? 0xffffffffu : static_cast<uint32_t>(rng.Below(bytes.size() * 2));
            for (int k = 0; k < 4; ++k) bytes[at + k] = static_cast<uint8_t>(v >> (8 * k));
          }
          break;
        default:
          bytes[at] = rng.Bernoulli(0.5) ? 0x00 : 0xff;
      }
    }
    if (rng.Bernoulli(0.1)) bytes.resize(rng.Below(bytes.size()));
    try {
      std::vector<apkstat::DexFile> dexes;
      dexes.emplace_back(bytes);
      apkstat::CallGraph g = apkstat::BuildCallGraph(dexes);
      apkstat::FindPrcs(g, dexes, db, 2, "fuzz");
      ++parsed;
    } catch (const InputError&) {
      ++rejected;
    } catch (const std::exception& e) {
      c(false, "input " + std::to_string(i) + " escaped: " + e.what());
    }
  }
  o.pass = c.ok();
  if (o.pass) o.detail = std::to_string(parsed) + " parsed, " + std::to_string(rejected) + " rejected";
  return o;
}

// 4. Path extraction against brute-force enumeration.
Outcome PathOracle() {
  Outcome o;
  Check c(&o.detail);
  const auto& methods = testing::JavaFixtures();
  c(methods.size() == 25, "fixture count");
  const astpaths::PathLimits open{1 << 20, 1 << 20, 1 << 20, 0};
  std::size_t contexts = 0;
  for (std::size_t m = 0; m < methods.size(); ++m) {
    const std::string tag = "fixture " + std::to_string(m);
    astpaths::Ast ast = astpaths::ParseJavaMethod(methods[m]);
    const std::size_t terms = ast.terminals().size();
    c(terms >= 3 && terms <= 20, tag + " has " + std::to_string(terms) + " terminals");
    const auto brute = testing::BruteForcePaths(ast);
    c(brute.size() == terms * (terms - 1) / 2, tag + " brute pair count");

    auto got = astpaths::ExtractPaths(ast, open);
    bool same = got.size() == brute.size();
    for (std::size_t i = 0; same && i < got.size(); ++i) {
      same = got[i].left_terminal == brute[i].left && got[i].right_terminal == brute[i].right &&
             got[i].apex == brute[i].apex && astpaths::ToTokens(got[i]).path == brute[i].tokens;
    }
    c(same, tag + " open limits differ");
    contexts += got.size();

    for (const astpaths::PathLimits limits :
         {astpaths::PathLimits{5, 1, 1 << 20, 3}, astpaths::PathLimits{7, 2, 4, 5}, astpaths::PathLimits{9, 0, 2, 9}}) {
      std::set<std::tuple<int, int, std::vector<std::string>>> allowed;
      for (const auto& b : brute) {
        if (b.length <= limits.max_length && b.width <= limits.max_width) allowed.emplace(b.left, b.right, b.tokens);
      }
      auto bound = astpaths::ExtractPaths(ast, limits);
      c(bound.size() == std::min<std::size_t>(allowed.size(), limits.max_contexts), tag + " bound cardinality");
      std::set<std::tuple<int, int, std::vector<std::string>>> seen;
      for (const auto& ctx : bound) {
        auto key = std::make_tuple(ctx.left_terminal, ctx.right_terminal, astpaths::ToTokens(ctx).path);
        c(allowed.count(key) == 1, tag + " path outside limits");
        c(seen.insert(key).second, tag + " repeated path");
      }
    }
    for (const auto& ctx : got) {
      std::set<int> left_anc;
      for (int n = ctx.left_terminal; n >= 0; n = ast.node(n).parent) left_anc.insert(n);
      int lca = ctx.right_terminal;
      while (!left_anc.count(lca)) lca = ast.node(lca).parent;
      int apex_steps = 0, flips = 0;
      for (std::size_t i = 0; i < ctx.steps.size(); ++i) {
        apex_steps += ctx.steps[i].node == ctx.apex;
        if (i > 0) flips += ctx.steps[i].up != ctx.steps[i - 1].up;
      }
      c(ctx.apex == lca && apex_steps == 1 && flips <= 1, tag + " apex");
    }
  }
  o.pass = c.ok();
  if (o.pass) o.detail = std::to_string(contexts) + " contexts over " + std::to_string(methods.size()) + " methods";
  return o;
}

nmt::HyperParams GradHyperParams(uint64_t seed) {
  nmt::HyperParams hp;
  hp.embedding_size = 8;
  hp.encoder_state_size = 8;
  hp.decoder_state_size = 16;
  hp.max_target_parts = 10;
  hp.max_contexts = 16;
  hp.seed = seed;
  return hp;
}

// 5. Finite-difference gradient check on small models.
Outcome GradientCheck() {
  Outcome o;
  Check c(&o.detail);
  double worst = 0.0, weakest_fault = 1e300;
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    auto lines = testing::SyntheticLines(4, 100 + seed);
    nmt::Model model = testing::MakeModel(lines, GradHyperParams(seed));
    auto examples = testing::EncodeAll(lines, model);
    nmt::GradCheckOptions opt;
    opt.seed = seed;
    const nmt::Example& ex = examples[seed % examples.size()];
    nmt::GradCheckResult r = nmt::GradCheck(model.params, model.dims(), ex, opt);
    for (int g = 0; g < nmt::kNumGroups; ++g) {
      const auto name = std::string(nmt::GroupName(static_cast<nmt::ParamGroup>(g)));
      c(r.groups[g].samples > 0, "seed " + std::to_string(seed) + " " + name + " unsampled");
      c(r.groups[g].max_rel_error < kGradTolerance,
        "seed " + std::to_string(seed) + " " + name + " " + Fmt(r.groups[g].max_rel_error));
      worst = std::max(worst, r.groups[g].max_rel_error);
    }
    opt.corrupt_output_gradient = true;
    const double fault =
        nmt::GradCheck(model.params, model.dims(), ex, opt).groups[static_cast<int>(nmt::ParamGroup::kOutput)].max_rel_error;
    c(fault > kFaultFloor, "fault not detected, seed " + std::to_string(seed));
    weakest_fault = std::min(weakest_fault, fault);
  }
  o.pass = c.ok();
  if (o.pass) o.detail = "max rel error " + Fmt(worst, 3) + ", injected fault " + Fmt(weakest_fault, 3);
  return o;
}

double ExactMatch(const nmt::Model& model, const std::vector<nmt::Example>& examples) {
  int hits = 0;
  for (const auto& ex : examples) hits += nmt::Predict(model, ex, 1) == ex.target;
  return static_cast<double>(hits) / static_cast<double>(examples.size());
}

// 6. A desk-sized model memorizes a small training set.
Outcome Overfit() {
  Outcome o;
  Check c(&o.detail);
  nmt::HyperParams hp;
  hp.learning_rate = 1e-2;
  hp.epochs = kOverfitEpochs;
  hp.seed = 17;

  auto lines = testing::SyntheticLines(20, 61);
  nmt::Model model = testing::MakeModel(lines, hp);
  auto examples = testing::EncodeAll(lines, model);
  int reached = -1;
  nmt::Train(model, examples, {}, true, [&](int epoch, double, double) {
    if (reached < 0 && (epoch + 1) % 10 == 0 && ExactMatch(model, examples) >= kOverfitExactMatch) reached = epoch + 1;
  });
  const double match = ExactMatch(model, examples);
  c(reached > 0 && match >= kOverfitExactMatch, "20-example exact match " + Fmt(match, 3));

  auto one_line = testing::SyntheticLines(1, 62);
  nmt::Model single = testing::MakeModel(one_line, hp);
  auto one = testing::EncodeAll(one_line, single);
  nmt::Train(single, one, {});
  const double loss = nmt::EvaluateLoss(single, one);
  c(loss < kSingleExampleLoss, "single-example loss " + Fmt(loss));
  o.pass = c.ok();
  if (o.pass) {
    o.detail = "20 examples: " + Fmt(100 * match, 4) + "% exact by epoch " + std::to_string(reached) +
               "; single-example loss " + Fmt(loss, 3);
  }
  return o;
}

struct DeskCorpus {
  std::vector<corpus::DatasetLine> train, validation;
};

DeskCorpus BuildDeskCorpus() {
  auto lines = testing::SyntheticLines(2000, 2024);
  corpus::SplitSpec spec{0.9, 0.1, 0.0, 11};
  corpus::SplitIndices idx = corpus::Split(lines.size(), spec);
  DeskCorpus out;
  for (auto i : idx.train) out.train.push_back(lines[i]);
  for (auto i : idx.validation) out.validation.push_back(lines[i]);
  return out;
}

// 7. Desk-scale learning on a templated corpus.
Outcome DeskScale() {
  Outcome o;
  Check c(&o.detail);
  DeskCorpus data = BuildDeskCorpus();
  c(data.train.size() == 1800 && data.validation.size() == 200, "split sizes");
  nmt::HyperParams hp;  // desk defaults
  nmt::Model model;
  model.hp = hp;
  model.vocab = nmt::BuildVocab(data.train, 1);
  auto train = testing::EncodeAll(data.train, model);
  auto val = testing::EncodeAll(data.validation, model);
  nmt::TrainReport report = nmt::Train(model, train, val);
  std::vector<metrics::Tokens> hyp, ref;
  for (std::size_t i = 0; i < val.size(); ++i) {
    hyp.push_back(nmt::DecodeTargets(nmt::Predict(model, val[i], hp.beam_width), model.vocab));
    ref.push_back(data.validation[i].target);
  }
  metrics::EvalReport e = metrics::Evaluate(hyp, ref);
  // Reported only: captions never seen verbatim in training.
  std::set<std::vector<std::string>> seen;
  for (const auto& l : data.train) seen.insert(l.target);
  std::vector<metrics::Tokens> novel_hyp, novel_ref;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    if (!seen.count(ref[i])) {
      novel_hyp.push_back(hyp[i]);
      novel_ref.push_back(ref[i]);
    }
  }
  std::string novel = std::to_string(novel_ref.size()) + " unseen captions";
  if (!novel_ref.empty()) {
    metrics::EvalReport n = metrics::Evaluate(novel_hyp, novel_ref);
    novel += " at BLEU-4 " + Fmt(100 * n.bleu4, 4) + ", ROUGE-F1 " + Fmt(100 * n.rouge_f1, 4);
  }
  c(100 * e.bleu4 > kDeskBleu, "BLEU-4 " + Fmt(100 * e.bleu4, 4));
  c(100 * e.rouge_f1 > kDeskRougeF1, "ROUGE-F1 " + Fmt(100 * e.rouge_f1, 4));
  o.pass = c.ok();
  if (o.pass) {
    o.detail = "BLEU-4 " + Fmt(100 * e.bleu4, 4) + ", ROUGE-F1 " + Fmt(100 * e.rouge_f1, 4) + ", final train loss " +
               Fmt(report.epoch_losses.back(), 4) + "; " + novel;
  }
  return o;
}

std::string Jsonl(const std::vector<OrderedJson>& records) {
  std::string out;
  for (const auto& r : records) out += r.dump() + "\n";
  return out;
}

// Runs every stage once over fixed inputs and concatenates the outputs.
std::string PipelineOutputs(const permdb::ApiDb& db, const std::vector<std::vector<uint8_t>>& apks, int workers) {
  std::string out;
  // Extraction reads APK files from disk.
  pipeline::BatchSummary summary;
  {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "prigen_acceptance_apks";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::vector<fs::path> paths;
    for (std::size_t i = 0; i < apks.size(); ++i) {
      paths.push_back(dir / ("app" + std::to_string(i) + ".apk"));
      std::ofstream f(paths.back(), std::ios::binary);
      f.write(reinterpret_cast<const char*>(apks[i].data()), static_cast<std::streamsize>(apks[i].size()));
    }
    summary = pipeline::BatchExtract(paths, db, 3, workers);
    fs::remove_all(dir);
  }
  out += pipeline::SummaryToJson(summary).dump() + "\n";
  std::vector<OrderedJson> prcs;
  for (const auto& r : summary.results) {
    for (const auto& p : r.prcs) prcs.push_back(pipeline::PrcsToJson(p));
  }
  out += Jsonl(prcs);

  std::vector<corpus::CorpusExample> examples;
  for (const auto& m : testing::SyntheticCorpus(60, 5)) {
    corpus::CorpusExample ex;
    ex.example_id = m.id;
    ex.source_text = m.source;
    ex.target_caption = corpus::NormalizeCaption(m.caption);
    pipeline::AddPaths(ex, astpaths::PathLimits{9, 2, 40, 3});
    examples.push_back(ex);
  }
  std::vector<std::string> texts;
  for (const auto& e : examples) texts.push_back(e.source_text);
  corpus::DedupResult dd = corpus::Dedup(texts);
  std::vector<OrderedJson> recs;
  for (auto i : dd.kept) recs.push_back(pipeline::ExampleToJson(examples[i]));
  out += Jsonl(recs);
  for (auto i : corpus::FilterObfuscated(texts, 0.5)) out += std::to_string(i) + ",";
  corpus::SplitIndices split = corpus::Split(examples.size(), corpus::SplitSpec{0.8, 0.1, 0.1, 4});
  std::vector<corpus::DatasetLine> train_lines;
  for (auto i : split.train) {
    train_lines.push_back(pipeline::ToDatasetLine(examples[i]));
    out += corpus::FormatDatasetLine(train_lines.back()) + "\n";
  }

  nmt::HyperParams hp = testing::SmallHyperParams(8);
  hp.epochs = 2;
  hp.max_contexts = 40;
  nmt::Model model = testing::MakeModel(train_lines, hp);
  auto train = testing::EncodeAll(train_lines, model);
  nmt::TrainReport report = nmt::Train(model, train, {});
  out += nmt::SerializeModel(model);
  for (double l : report.epoch_losses) out += Fmt(l, 17) + ",";
  std::vector<metrics::Tokens> hyp, ref;
  for (auto i : split.test) {
    nmt::Example ex = nmt::EncodeExample(pipeline::ToDatasetLine(examples[i]), model.vocab, hp.max_contexts,
                                         hp.max_target_parts);
    hyp.push_back(nmt::DecodeTargets(nmt::Predict(model, ex, 3), model.vocab));
    ref.push_back(examples[i].target_caption);
    for (const auto& t : hyp.back()) out += t + " ";
    out += "\n";
  }
  out += metrics::RenderReport(metrics::Evaluate(hyp, ref));
  std::vector<OrderedJson> captions;
  for (auto rec : prcs) {
    rec["source"] = examples[captions.size() % examples.size()].source_text;
    captions.push_back(pipeline::CaptionRecord(rec, model, db, astpaths::PathLimits{}));
  }
  out += Jsonl(captions);
  return out;
}

// 8. Identical inputs give byte-identical outputs at every stage.
Outcome Determinism(const permdb::ApiDb& db) {
  Outcome o;
  Check c(&o.detail);
  std::vector<std::vector<uint8_t>> apks;
  for (uint64_t seed : {31, 32, 33, 34, 35}) apks.push_back(testing::RandomApp(seed, db).apk_bytes);
  apks.push_back(std::vector<uint8_t>(apks[0].begin(), apks[0].begin() + apks[0].size() / 3));
  const std::string a = PipelineOutputs(db, apks, 1);
  const std::string b = PipelineOutputs(db, apks, 1);
  const std::string w = PipelineOutputs(db, apks, 4);
  c(a == b, "rerun differs");
  c(a == w, "1 vs 4 workers differ");
  o.pass = c.ok();
  if (o.pass) o.detail = std::to_string(a.size()) + " bytes identical over 3 runs";
  return o;
}

// 9. Dedup and obfuscation against brute force and hand counts.
Outcome DedupObfuscation() {
  Outcome o;
  Check c(&o.detail);
  auto planted = testing::PlantedDuplicateCorpus();
  corpus::DedupResult r = corpus::Dedup(planted.texts, 5, 0.8);
  std::set<std::size_t> removed;
  for (const auto& [i, w] : r.removed) removed.insert(i);
  c(removed == planted.planted, "removed set differs from planted set");
  c(removed == testing::BruteDedup(planted.texts, 5, 0.8), "removed set differs from brute force");
  int cases = 0;
  for (const auto& oc : testing::ObfuscationCases()) {
    const double expect = static_cast<double>(oc.short_identifiers) / oc.identifiers;
    c(corpus::ObfuscationScore(oc.source) == expect, "obfuscation " + oc.source);
    ++cases;
  }
  o.pass = c.ok();
  if (o.pass) {
    o.detail = std::to_string(removed.size()) + " planted duplicates removed; " + std::to_string(cases) +
               " obfuscation counts exact";
  }
  return o;
}

// 10. Caption assembly properties on random API lists.
Outcome CaptionProperties() {
  Outcome o;
  Check c(&o.detail);
  Rng rng(4242);
  for (int trial = 0; trial < kCaptionCases; ++trial) {
    auto apis = testing::RandomApiList(rng);
    std::vector<std::string> words;
    const int n = static_cast<int>(rng.Below(6));
    for (int i = 0; i < n; ++i) words.push_back("w" + std::to_string(rng.Below(100)));
    caption::PrivacyCaption pc = caption::Assemble(words, apis);
    auto shuffled = apis;
    rng.Shuffle(shuffled);
    c(caption::Assemble(words, shuffled).full_text == pc.full_text, "order dependence");
    std::set<std::pair<std::string, std::string>> distinct;
    for (const auto& a : apis) distinct.emplace(a.class_name, a.method_name);
    c(pc.api_sentences.size() == distinct.size(), "sentence count");
    c(pc.full_text.rfind(pc.code_caption, 0) == 0, "caption prefix");
    std::string expect_caption;
    for (const auto& w : words) expect_caption += (expect_caption.empty() ? "" : " ") + w;
    if (expect_caption.empty()) {
      expect_caption = caption::kNoCaptionLeadIn;
    } else {
      expect_caption[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(expect_caption[0])));
      expect_caption += ".";
    }
    c(pc.code_caption == expect_caption, "caption text " + pc.code_caption);
    for (const auto& [cls, method] : distinct) {
      bool found = false;
      for (const auto& a : apis) {
        found = found || (a.class_name == cls && a.method_name == method &&
                          pc.full_text.find(a.description) != std::string::npos);
      }
      c(found, "description for " + cls + "." + method);
    }
  }
  o.pass = c.ok();
  if (o.pass) o.detail = std::to_string(kCaptionCases) + " random cases";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0 means no runtime bound
  std::function<Outcome()> run;
};

int Main(int argc, char** argv) {
  ::setenv("PRIGEN_LOG", "error", 1);
  InitLogging();
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  permdb::ApiDb db = testing::LoadTestDb();
  const std::vector<Criterion> criteria = {
      {1, "metrics oracle equivalence", 1, MetricsOracle},
      {2, "static-analysis oracle", 5, [&] { return StaticAnalysisOracle(db); }},
      {3, "DEX robustness", 60, [&] { return DexRobustness(db); }},
      {4, "path-extraction oracle", 5, PathOracle},
      {5, "gradient correctness", 120, GradientCheck},
      {6, "overfit check", 300, Overfit},
      {7, "desk-scale learning", 1800, DeskScale},
      {8, "determinism", 0, [&] { return Determinism(db); }},
      {9, "dedup and obfuscation oracles", 0, DedupObfuscation},
      {10, "caption assembly properties", 10, CaptionProperties},
  };
  int failed = 0;
  int ran = 0;
  for (const auto& cr : criteria) {
    if (!only.empty() && !only.count(cr.id)) continue;
    ++ran;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (cr.limit_seconds > 0 && secs >= cr.limit_seconds) {
      o.detail += (o.pass ? "" : "; ") + std::string("runtime over ") + Fmt(cr.limit_seconds) + " s";
      o.pass = false;
    }
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", cr.id, cr.name.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace prigen::acceptance

int main(int argc, char** argv) { return prigen::acceptance::Main(argc, argv); }
