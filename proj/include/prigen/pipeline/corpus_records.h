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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "prigen/astpaths/path_extractor.h"
#include "prigen/common/json_lines.h"
#include "prigen/corpus/corpus.h"
#include "prigen/corpus/dataset_format.h"

namespace prigen::pipeline {

// Corpus JSON Lines: {"id", "source", "caption"} plus, after the paths
// stage, "target", "contexts", "loc" and "obfuscation".
corpus::CorpusExample ExampleFromJson(const OrderedJson& record);
OrderedJson ExampleToJson(const corpus::CorpusExample& example);

std::vector<corpus::CorpusExample> ReadCorpus(const std::filesystem::path& path);
void WriteCorpus(const std::filesystem::path& path, const std::vector<corpus::CorpusExample>& examples);

// Per-example sampling seed, independent of corpus order.
std::uint64_t ExampleSeed(std::uint64_t seed, std::string_view example_id);

// Fills target, contexts, loc and obfuscation from source_text. Throws
// JavaSyntaxError when the source is outside the supported subset.
void AddPaths(corpus::CorpusExample& example, astpaths::PathLimits limits);

corpus::DatasetLine ToDatasetLine(const corpus::CorpusExample& example);

}  // namespace prigen::pipeline
