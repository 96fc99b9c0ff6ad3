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

#include "prigen/pipeline/caption_records.h"

#include "prigen/astpaths/java_lexer.h"
#include "prigen/caption/privacy_caption.h"
#include "prigen/common/error.h"
#include "prigen/common/log.h"
#include "prigen/corpus/dataset_format.h"
#include "prigen/nmt/decoder.h"
#include "prigen/pipeline/corpus_records.h"

namespace prigen::pipeline {

std::vector<permdb::ApiSpec> ResolveApis(const OrderedJson& record, const permdb::ApiDb& db) {
  if (!record.contains("apis") || !record["apis"].is_array()) throw ValidationError("PRCS record lacks 'apis'");
  std::vector<permdb::ApiSpec> out;
  for (const auto& a : record["apis"]) {
    const std::string cls = a.at("class").get<std::string>();
    const std::string method = a.at("method").get<std::string>();
    std::string descriptor;
    if (a.contains("descriptor") && a["descriptor"].is_string()) descriptor = a["descriptor"].get<std::string>();
    const permdb::ApiSpec* spec = db.Lookup(cls, method, descriptor);
    if (spec == nullptr) {
      throw ValidationError("API " + cls + "." + method + descriptor + " is not in the database");
    }
    out.push_back(*spec);
  }
  return out;
}

OrderedJson CaptionRecord(const OrderedJson& record, const nmt::Model& model, const permdb::ApiDb& db,
                          const astpaths::PathLimits& limits) {
  std::vector<permdb::ApiSpec> apis = ResolveApis(record, db);
  std::vector<std::string> tokens;
  bool has_source = record.contains("source") && record["source"].is_string();
  if (has_source) {
    try {
      corpus::CorpusExample ex;
      ex.example_id = record.value("apk_id", "") + "/" + record.value("class", "") + "." + record.value("method", "") +
                      record.value("descriptor", "");
      ex.source_text = record["source"].get<std::string>();
      AddPaths(ex, limits);
      nmt::Example encoded = nmt::EncodeExample(ToDatasetLine(ex), model.vocab, model.hp.max_contexts,
                                                model.hp.max_target_parts);
      tokens = nmt::DecodeTargets(nmt::Predict(model, encoded, model.hp.beam_width), model.vocab);
    } catch (const astpaths::JavaSyntaxError& e) {
      spdlog::warn("{}.{}: source not captioned: {}", record.value("class", ""), record.value("method", ""), e.what());
      has_source = false;
    }
  }
  caption::PrivacyCaption pc = caption::Assemble(tokens, apis);
  OrderedJson out = record;
  if (!has_source) out["no_source"] = true;
  out["code_caption"] = pc.code_caption;
  out["privacy_caption"] = pc.full_text;
  return out;
}

}  // namespace prigen::pipeline
