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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prigen/astpaths/path_extractor.h"

namespace prigen::corpus {

struct CorpusExample {
  std::string example_id;
  std::string source_text;
  std::vector<std::string> target_caption;
  std::vector<astpaths::ContextTokens> contexts;
  int loc = 0;
  double obfuscation_score = 0.0;
};

struct LexToken {
  std::string text;
  bool identifier = false;
};

// Lenient tokenizer for arbitrary code text: identifiers, numbers, quoted
// literals and single punctuation characters. Never throws.
std::vector<LexToken> TokenizeLenient(std::string_view text);

// Lowercased alphanumeric runs of a natural-language caption.
std::vector<std::string> NormalizeCaption(std::string_view text);

// Fraction of identifier occurrences of length <= 2, ignoring keywords and
// well-known API names. 0 when there are no identifiers.
double ObfuscationScore(std::string_view text);

// Sorted, deduplicated shingle ids for each text, ids shared across texts.
std::vector<std::vector<std::uint32_t>> Shingles(std::span<const std::string> texts, int shingle_size);

double Jaccard(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

struct DedupResult {
  std::vector<std::size_t> kept;
  // (removed, witness): witness is an earlier kept example.
  std::vector<std::pair<std::size_t, std::size_t>> removed;
};

// Greedy in input order: an example is dropped when its shingle Jaccard with
// any kept example reaches the threshold.
DedupResult Dedup(std::span<const std::string> texts, int shingle_size = 5, double threshold = 0.8);

// Indices of examples whose score is <= max_score.
std::vector<std::size_t> FilterObfuscated(std::span<const std::string> texts, double max_score);

struct SplitSpec {
  double train = 0.8;
  double validation = 0.1;
  double test = 0.1;
  std::uint64_t seed = 0;
};

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> validation;
  std::vector<std::size_t> test;
};

void ValidateSplit(const SplitSpec& spec);
SplitIndices Split(std::size_t n, const SplitSpec& spec);

}  // namespace prigen::corpus
