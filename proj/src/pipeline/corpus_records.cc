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

#include "prigen/pipeline/corpus_records.h"

#include "prigen/astpaths/java_parser.h"
#include "prigen/astpaths/subtoken.h"
#include "prigen/common/error.h"

namespace prigen::pipeline {

corpus::CorpusExample ExampleFromJson(const OrderedJson& j) {
  if (!j.is_object()) throw ValidationError("corpus record is not an object");
  auto str = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_string()) {
      throw ValidationError(std::string("corpus record lacks string field '") + key + "'");
    }
    return j[key].get<std::string>();
  };
  corpus::CorpusExample ex;
  ex.example_id = str("id");
  ex.source_text = str("source");
  if (j.contains("target")) {
    ex.target_caption = j["target"].get<std::vector<std::string>>();
  } else {
    ex.target_caption = corpus::NormalizeCaption(str("caption"));
  }
  if (j.contains("contexts")) {
    for (const auto& c : j["contexts"]) ex.contexts.push_back(corpus::ParseContext(c.get<std::string>()));
  }
  if (j.contains("loc")) ex.loc = j["loc"].get<int>();
  if (j.contains("obfuscation")) ex.obfuscation_score = j["obfuscation"].get<double>();
  return ex;
}

OrderedJson ExampleToJson(const corpus::CorpusExample& ex) {
  OrderedJson j;
  j["id"] = ex.example_id;
  j["source"] = ex.source_text;
  std::string caption;
  for (const auto& t : ex.target_caption) caption += (caption.empty() ? "" : " ") + t;
  j["caption"] = caption;
  j["target"] = ex.target_caption;
  OrderedJson ctxs = OrderedJson::array();
  for (const auto& c : ex.contexts) ctxs.push_back(corpus::FormatContext(c));
  j["contexts"] = std::move(ctxs);
  j["loc"] = ex.loc;
  j["obfuscation"] = ex.obfuscation_score;
  return j;
}

std::vector<corpus::CorpusExample> ReadCorpus(const std::filesystem::path& path) {
  std::vector<corpus::CorpusExample> out;
  std::size_t line = 0;
  for (const auto& j : ReadJsonLines(path)) {
    ++line;
    try {
      out.push_back(ExampleFromJson(j));
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(path.string() + ": record " + std::to_string(line) + ": " + e.what());
    } catch (const InputError& e) {
      throw ValidationError(path.string() + ": record " + std::to_string(line) + ": " + e.what());
    }
  }
  return out;
}

void WriteCorpus(const std::filesystem::path& path, const std::vector<corpus::CorpusExample>& examples) {
  std::vector<OrderedJson> records;
  records.reserve(examples.size());
  for (const auto& ex : examples) records.push_back(ExampleToJson(ex));
  WriteJsonLines(path, records);
}

std::uint64_t ExampleSeed(std::uint64_t seed, std::string_view example_id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : example_id) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return seed ^ h;
}

void AddPaths(corpus::CorpusExample& ex, astpaths::PathLimits limits) {
  limits.seed = ExampleSeed(limits.seed, ex.example_id);
  ex.contexts = astpaths::ExtractMethodContexts(ex.source_text, limits);
  ex.loc = astpaths::CountLinesOfCode(ex.source_text);
  ex.obfuscation_score = corpus::ObfuscationScore(ex.source_text);
}

corpus::DatasetLine ToDatasetLine(const corpus::CorpusExample& ex) { return {ex.target_caption, ex.contexts}; }

}  // namespace prigen::pipeline
