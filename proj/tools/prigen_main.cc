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

// prigen: permission-requiring code segment extraction and privacy caption
// generation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prigen/astpaths/java_lexer.h"
#include "prigen/astpaths/path_extractor.h"
#include "prigen/common/error.h"
#include "prigen/common/json_lines.h"
#include "prigen/common/log.h"
#include "prigen/corpus/corpus.h"
#include "prigen/corpus/dataset_format.h"
#include "prigen/metrics/metrics.h"
#include "prigen/nmt/checkpoint.h"
#include "prigen/nmt/decoder.h"
#include "prigen/nmt/trainer.h"
#include "prigen/permdb/api_db.h"
#include "prigen/pipeline/batch_extract.h"
#include "prigen/pipeline/caption_records.h"
#include "prigen/pipeline/corpus_records.h"

namespace fs = std::filesystem;

namespace prigen {
namespace {

constexpr std::uint64_t kDefaultSeed = 7;

struct ExtractArgs {
  std::vector<std::string> inputs;
  std::string db, out, report;
  int hops = 1;
  int workers = 1;
};

struct PathsArgs {
  std::string in, out;
  astpaths::PathLimits limits;
};

struct DatasetArgs {
  std::string in, out, out_dir, removed;
  int shingle = 5;
  double threshold = 0.8;
  double max_obf = 0.5;
  std::string split = "0.8,0.1,0.1";
  std::uint64_t seed = kDefaultSeed;
};

struct TrainArgs {
  std::string data, out, losses;
  nmt::HyperParams hp;
  int min_count = 1;
};

struct PredictArgs {
  std::string model, in, out;
  int beam = 1;
};

struct CaptionArgs {
  std::string model, prcs, db, out;
  int beam = 0;  // 0: use the model's setting
  astpaths::PathLimits limits;
};

struct EvalArgs {
  std::string hyp, ref, out;
};

int RunExtract(const ExtractArgs& a) {
  permdb::ApiDb db = permdb::LoadApiDb(a.db);
  std::vector<fs::path> inputs(a.inputs.begin(), a.inputs.end());
  auto apks = pipeline::CollectApks(inputs);
  auto summary = pipeline::BatchExtract(apks, db, a.hops, a.workers);
  std::vector<OrderedJson> records, reports;
  for (const auto& r : summary.results) {
    for (const auto& p : r.prcs) records.push_back(pipeline::PrcsToJson(p));
    reports.push_back(pipeline::ReportToJson(r));
  }
  WriteJsonLines(a.out, records);
  if (!a.report.empty()) WriteJsonLines(a.report, reports);
  spdlog::info("extract: {}", pipeline::SummaryToJson(summary).dump());
  if (summary.apks_ok == 0) throw InputError("no APK could be analyzed");
  return 0;
}

int RunPaths(const PathsArgs& a) {
  astpaths::ValidateLimits(a.limits);
  auto examples = pipeline::ReadCorpus(a.in);
  std::vector<corpus::CorpusExample> out;
  std::size_t skipped = 0;
  for (auto& ex : examples) {
    try {
      pipeline::AddPaths(ex, a.limits);
      out.push_back(std::move(ex));
    } catch (const astpaths::JavaSyntaxError& e) {
      ++skipped;
      spdlog::warn("{}: skipped: {}", ex.example_id, e.what());
    }
  }
  pipeline::WriteCorpus(a.out, out);
  spdlog::info("paths: {} examples written, {} skipped", out.size(), skipped);
  return 0;
}

std::vector<std::string> Sources(const std::vector<corpus::CorpusExample>& examples) {
  std::vector<std::string> texts;
  for (const auto& ex : examples) texts.push_back(ex.source_text);
  return texts;
}

int RunDedup(const DatasetArgs& a) {
  auto examples = pipeline::ReadCorpus(a.in);
  auto result = corpus::Dedup(Sources(examples), a.shingle, a.threshold);
  std::vector<corpus::CorpusExample> kept;
  for (std::size_t i : result.kept) kept.push_back(examples[i]);
  pipeline::WriteCorpus(a.out, kept);
  if (!a.removed.empty()) {
    std::vector<OrderedJson> rows;
    for (auto [removed, witness] : result.removed) {
      OrderedJson j;
      j["removed"] = examples[removed].example_id;
      j["duplicate_of"] = examples[witness].example_id;
      rows.push_back(std::move(j));
    }
    WriteJsonLines(a.removed, rows);
  }
  spdlog::info("dedup: kept {}, removed {}", result.kept.size(), result.removed.size());
  return 0;
}

int RunFilter(const DatasetArgs& a) {
  auto examples = pipeline::ReadCorpus(a.in);
  auto kept_idx = corpus::FilterObfuscated(Sources(examples), a.max_obf);
  std::vector<corpus::CorpusExample> kept;
  for (std::size_t i : kept_idx) {
    kept.push_back(examples[i]);
    kept.back().obfuscation_score = corpus::ObfuscationScore(kept.back().source_text);
  }
  pipeline::WriteCorpus(a.out, kept);
  spdlog::info("filter: kept {}, removed {}", kept.size(), examples.size() - kept.size());
  return 0;
}

corpus::SplitSpec ParseSplitSpec(const std::string& text, std::uint64_t seed) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ArgumentError("--split: '" + item + "' is not a number");
    }
  }
  if (parts.size() != 3) throw ArgumentError("--split needs three comma-separated fractions");
  corpus::SplitSpec spec{parts[0], parts[1], parts[2], seed};
  corpus::ValidateSplit(spec);
  return spec;
}

int RunSplit(const DatasetArgs& a) {
  corpus::SplitSpec spec = ParseSplitSpec(a.split, a.seed);
  auto examples = pipeline::ReadCorpus(a.in);
  auto split = corpus::Split(examples.size(), spec);
  fs::create_directories(a.out_dir);
  auto write = [&](const std::string& name, const std::vector<std::size_t>& idx) {
    std::string lines, refs;
    for (std::size_t i : idx) {
      lines += corpus::FormatDatasetLine(pipeline::ToDatasetLine(examples[i])) + "\n";
      std::string ref;
      for (const auto& t : examples[i].target_caption) ref += (ref.empty() ? "" : " ") + t;
      refs += ref + "\n";
    }
    WriteFile(fs::path(a.out_dir) / (name + ".c2s"), lines);
    WriteFile(fs::path(a.out_dir) / (name + ".ref"), refs);
  };
  write("train", split.train);
  write("val", split.validation);
  write("test", split.test);
  spdlog::info("split: train {}, val {}, test {}", split.train.size(), split.validation.size(), split.test.size());
  return 0;
}

std::vector<corpus::DatasetLine> ReadDataset(const fs::path& path) {
  std::vector<corpus::DatasetLine> out;
  std::size_t n = 0;
  for (const auto& line : ReadLines(path)) {
    ++n;
    if (line.empty()) continue;
    try {
      out.push_back(corpus::ParseDatasetLine(line));
    } catch (const InputError& e) {
      throw ParseError(path.string() + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

int RunTrain(const TrainArgs& a) {
  nmt::Validate(a.hp);
  const fs::path train_path = fs::path(a.data) / "train.c2s";
  const fs::path val_path = fs::path(a.data) / "val.c2s";
  auto train_lines = ReadDataset(train_path);
  std::vector<corpus::DatasetLine> val_lines;
  if (fs::exists(val_path)) val_lines = ReadDataset(val_path);

  nmt::Model model;
  model.hp = a.hp;
  model.vocab = nmt::BuildVocab(train_lines, a.min_count);
  auto encode = [&](const std::vector<corpus::DatasetLine>& lines) {
    std::vector<nmt::Example> out;
    for (const auto& l : lines) out.push_back(nmt::EncodeExample(l, model.vocab, a.hp.max_contexts, a.hp.max_target_parts));
    return out;
  };
  auto train = encode(train_lines);
  auto val = encode(val_lines);
  spdlog::info("train: {} examples, {} validation, vocab {}/{}/{}", train.size(), val.size(),
               model.vocab.subtokens.size(), model.vocab.nodes.size(), model.vocab.targets.size());
  auto report = nmt::Train(model, train, val, true, [&](int epoch, double loss, double val_loss) {
    if (val.empty()) {
      spdlog::info("epoch {}: loss {:.6f}", epoch, loss);
    } else {
      spdlog::info("epoch {}: loss {:.6f}, validation {:.6f}", epoch, loss, val_loss);
    }
  });
  nmt::SaveModel(model, a.out);
  if (!a.losses.empty()) {
    OrderedJson j;
    j["seed"] = report.seed;
    j["epoch_losses"] = report.epoch_losses;
    j["validation_losses"] = report.validation_losses;
    WriteFile(a.losses, j.dump(2) + "\n");
  }
  return 0;
}

int RunPredict(const PredictArgs& a) {
  if (a.beam < 1) throw ArgumentError("--beam must be at least 1");
  nmt::Model model = nmt::LoadModel(a.model);
  std::string out;
  for (const auto& line : ReadDataset(a.in)) {
    auto ex = nmt::EncodeExample(line, model.vocab, model.hp.max_contexts, model.hp.max_target_parts);
    auto tokens = nmt::DecodeTargets(nmt::Predict(model, ex, a.beam), model.vocab);
    std::string text;
    for (const auto& t : tokens) text += (text.empty() ? "" : " ") + t;
    out += text + "\n";
  }
  WriteFile(a.out, out);
  return 0;
}

int RunCaption(CaptionArgs a) {
  nmt::Model model = nmt::LoadModel(a.model);
  if (a.beam < 0) throw ArgumentError("--beam must be non-negative");
  if (a.beam > 0) model.hp.beam_width = a.beam;
  a.limits.max_contexts = model.hp.max_contexts;
  permdb::ApiDb db = permdb::LoadApiDb(a.db);
  std::vector<OrderedJson> out;
  std::size_t no_source = 0;
  for (const auto& record : ReadJsonLines(a.prcs)) {
    out.push_back(pipeline::CaptionRecord(record, model, db, a.limits));
    if (out.back().contains("no_source")) ++no_source;
  }
  WriteJsonLines(a.out, out);
  spdlog::info("caption: {} records, {} without source", out.size(), no_source);
  return 0;
}

int RunEval(const EvalArgs& a) {
  std::vector<metrics::Tokens> hyps, refs;
  for (const auto& l : ReadLines(a.hyp)) hyps.push_back(metrics::SplitWhitespace(l));
  for (const auto& l : ReadLines(a.ref)) refs.push_back(metrics::SplitWhitespace(l));
  std::string report = metrics::RenderReport(metrics::Evaluate(hyps, refs)) + "\n";
  if (a.out.empty()) {
    std::fputs(report.c_str(), stdout);
  } else {
    WriteFile(a.out, report);
  }
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Permission-requiring code segment extraction and privacy caption generation"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  ExtractArgs extract;
  auto* ex = app.add_subcommand("extract", "Extract permission-requiring code segments from APKs");
  ex->add_option("inputs", extract.inputs, "APK files or directories of APKs")->required();
  ex->add_option("--db", extract.db, "Permission API database (JSON)")->required();
  ex->add_option("--hops", extract.hops, "Maximum caller distance")->capture_default_str();
  ex->add_option("--out", extract.out, "Output JSON Lines")->required();
  ex->add_option("--workers", extract.workers, "Concurrent APK analyses")->capture_default_str();
  ex->add_option("--report", extract.report, "Per-APK permission report (JSON Lines)");

  PathsArgs paths;
  std::uint64_t paths_seed = kDefaultSeed;
  auto* pa = app.add_subcommand("paths", "Extract AST path contexts from a Java corpus");
  pa->add_option("--in", paths.in, "Corpus JSON Lines")->required();
  pa->add_option("--out", paths.out, "Output JSON Lines")->required();
  pa->add_option("--max-length", paths.limits.max_length)->capture_default_str();
  pa->add_option("--max-width", paths.limits.max_width)->capture_default_str();
  pa->add_option("--max-contexts", paths.limits.max_contexts)->capture_default_str();
  pa->add_option("--seed", paths_seed)->capture_default_str();

  DatasetArgs ds;
  auto* dataset = app.add_subcommand("dataset", "Corpus cleaning and splitting");
  dataset->require_subcommand(1);
  auto* dedup = dataset->add_subcommand("dedup", "Remove near-duplicate examples");
  dedup->add_option("--in", ds.in)->required();
  dedup->add_option("--out", ds.out)->required();
  dedup->add_option("--shingle", ds.shingle)->capture_default_str();
  dedup->add_option("--threshold", ds.threshold)->capture_default_str();
  dedup->add_option("--removed", ds.removed, "Write removed/witness id pairs (JSON Lines)");
  auto* filter = dataset->add_subcommand("filter", "Remove obfuscated examples");
  filter->add_option("--in", ds.in)->required();
  filter->add_option("--out", ds.out)->required();
  filter->add_option("--max-obf", ds.max_obf)->capture_default_str();
  auto* split = dataset->add_subcommand("split", "Split into train/val/test line files");
  split->add_option("--in", ds.in)->required();
  split->add_option("--out-dir", ds.out_dir)->required();
  split->add_option("--split", ds.split, "train,val,test fractions")->capture_default_str();
  split->add_option("--seed", ds.seed)->capture_default_str();

  TrainArgs tr;
  auto* train = app.add_subcommand("train", "Train the caption model");
  train->add_option("--data", tr.data, "Directory with train.c2s (and optional val.c2s)")->required();
  train->add_option("--out", tr.out, "Model checkpoint")->required();
  train->add_option("--emb", tr.hp.embedding_size)->capture_default_str();
  train->add_option("--enc", tr.hp.encoder_state_size)->capture_default_str();
  train->add_option("--dec", tr.hp.decoder_state_size)->capture_default_str();
  train->add_option("--max-target", tr.hp.max_target_parts)->capture_default_str();
  train->add_option("--max-contexts", tr.hp.max_contexts)->capture_default_str();
  train->add_option("--epochs", tr.hp.epochs)->capture_default_str();
  train->add_option("--batch", tr.hp.batch_size)->capture_default_str();
  train->add_option("--lr", tr.hp.learning_rate)->capture_default_str();
  train->add_option("--dropout-keep", tr.hp.dropout_keep)->capture_default_str();
  train->add_option("--beam", tr.hp.beam_width, "Default beam width stored in the model")->capture_default_str();
  train->add_option("--min-count", tr.min_count)->capture_default_str();
  train->add_option("--seed", tr.hp.seed)->capture_default_str();
  train->add_option("--losses", tr.losses, "Write the loss trace (JSON)");

  PredictArgs pr;
  auto* predict = app.add_subcommand("predict", "Predict captions for dataset lines");
  predict->add_option("--model", pr.model)->required();
  predict->add_option("--in", pr.in)->required();
  predict->add_option("--out", pr.out)->required();
  predict->add_option("--beam", pr.beam)->capture_default_str();

  CaptionArgs ca;
  auto* caption = app.add_subcommand("caption", "Assemble privacy captions for PRCS records");
  caption->add_option("--model", ca.model)->required();
  caption->add_option("--prcs", ca.prcs)->required();
  caption->add_option("--db", ca.db)->required();
  caption->add_option("--out", ca.out)->required();
  caption->add_option("--beam", ca.beam, "Beam width (0: model default)")->capture_default_str();

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Score predictions with BLEU-4 and ROUGE-LCS");
  eval->add_option("--hyp", ev.hyp)->required();
  eval->add_option("--ref", ev.ref)->required();
  eval->add_option("--out", ev.out, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n\n", e.what());
    std::cerr << app.help();
    return 1;
  }

  InitLogging();
  try {
    if (*ex) return RunExtract(extract);
    if (*pa) {
      paths.limits.seed = paths_seed;
      return RunPaths(paths);
    }
    if (*dedup) return RunDedup(ds);
    if (*filter) return RunFilter(ds);
    if (*split) return RunSplit(ds);
    if (*train) return RunTrain(tr);
    if (*predict) return RunPredict(pr);
    if (*caption) return RunCaption(ca);
    if (*eval) return RunEval(ev);
  } catch (const InputError& e) {
    spdlog::error("{}", e.what());
    return 1;
  } catch (const nlohmann::json::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  } catch (const std::exception& e) {
    spdlog::critical("internal error: {}", e.what());
    return 2;
  }
  return 2;
}

}  // namespace
}  // namespace prigen

int main(int argc, char** argv) { return prigen::Main(argc, argv); }
