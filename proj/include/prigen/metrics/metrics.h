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
#include <string>
#include <vector>

namespace prigen::metrics {

using Tokens = std::vector<std::string>;

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvalReport {
  double bleu4 = 0.0;
  double rouge_precision = 0.0;
  double rouge_recall = 0.0;
  double rouge_f1 = 0.0;
  std::size_t pair_count = 0;
};

std::size_t LcsLength(const Tokens& a, const Tokens& b);

// Corpus-level cumulative BLEU-4 without smoothing.
double Bleu4Corpus(const std::vector<Tokens>& hypotheses, const std::vector<Tokens>& references);

// Throws ArgumentError when either side is empty.
RougeScore RougeLcsPair(const Tokens& hypothesis, const Tokens& reference);

// An empty hypothesis scores 0 on every ROUGE field.
EvalReport Evaluate(const std::vector<Tokens>& hypotheses, const std::vector<Tokens>& references);

// {"bleu4": 12.34, "rouge_p": ..., "rouge_r": ..., "rouge_f1": ..., "pairs": n}
// with scores multiplied by 100 and printed with two decimals.
std::string RenderReport(const EvalReport& report);

Tokens SplitWhitespace(const std::string& line);

}  // namespace prigen::metrics
