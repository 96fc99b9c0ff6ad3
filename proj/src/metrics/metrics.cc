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

#include "prigen/metrics/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "prigen/common/error.h"

namespace prigen::metrics {
namespace {

void CheckAligned(const std::vector<Tokens>& hyps, const std::vector<Tokens>& refs) {
  if (hyps.size() != refs.size()) {
    throw ArgumentError("hypothesis and reference counts differ (" + std::to_string(hyps.size()) + " vs " +
                        std::to_string(refs.size()) + ")");
  }
  if (hyps.empty()) throw ArgumentError("no hypothesis/reference pairs");
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (refs[i].empty()) throw ArgumentError("reference " + std::to_string(i + 1) + " is empty");
  }
}

std::map<Tokens, int> NGramCounts(const Tokens& t, std::size_t n) {
  std::map<Tokens, int> counts;
  for (std::size_t i = 0; i + n <= t.size(); ++i) ++counts[Tokens(t.begin() + i, t.begin() + i + n)];
  return counts;
}

}  // namespace

std::size_t LcsLength(const Tokens& a, const Tokens& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double Bleu4Corpus(const std::vector<Tokens>& hyps, const std::vector<Tokens>& refs) {
  CheckAligned(hyps, refs);
  std::size_t hyp_len = 0, ref_len = 0;
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t matched = 0, total = 0;
    for (std::size_t i = 0; i < hyps.size(); ++i) {
      auto h = NGramCounts(hyps[i], n);
      auto r = NGramCounts(refs[i], n);
      for (const auto& [gram, count] : h) {
        auto it = r.find(gram);
        if (it != r.end()) matched += static_cast<std::size_t>(std::min(count, it->second));
      }
      if (hyps[i].size() >= n) total += hyps[i].size() - n + 1;
    }
    if (matched == 0 || total == 0) return 0.0;
    log_sum += std::log(static_cast<double>(matched) / static_cast<double>(total));
  }
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    hyp_len += hyps[i].size();
    ref_len += refs[i].size();
  }
  const double bp = hyp_len > ref_len ? 1.0 : std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len));
  return bp * std::exp(log_sum / 4.0);
}

RougeScore RougeLcsPair(const Tokens& hyp, const Tokens& ref) {
  if (hyp.empty() || ref.empty()) throw ArgumentError("ROUGE needs non-empty token sequences");
  const double l = static_cast<double>(LcsLength(hyp, ref));
  RougeScore s;
  s.precision = l / static_cast<double>(hyp.size());
  s.recall = l / static_cast<double>(ref.size());
  s.f1 = s.precision + s.recall == 0.0 ? 0.0 : 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

EvalReport Evaluate(const std::vector<Tokens>& hyps, const std::vector<Tokens>& refs) {
  CheckAligned(hyps, refs);
  EvalReport r;
  r.pair_count = hyps.size();
  r.bleu4 = Bleu4Corpus(hyps, refs);
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    if (hyps[i].empty()) continue;
    RougeScore s = RougeLcsPair(hyps[i], refs[i]);
    r.rouge_precision += s.precision;
    r.rouge_recall += s.recall;
    r.rouge_f1 += s.f1;
  }
  const double n = static_cast<double>(r.pair_count);
  r.rouge_precision /= n;
  r.rouge_recall /= n;
  r.rouge_f1 /= n;
  return r;
}

std::string RenderReport(const EvalReport& report) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "{\"bleu4\": %.2f, \"rouge_p\": %.2f, \"rouge_r\": %.2f, \"rouge_f1\": %.2f, \"pairs\": %zu}",
                report.bleu4 * 100.0, report.rouge_precision * 100.0, report.rouge_recall * 100.0,
                report.rouge_f1 * 100.0, report.pair_count);
  return buf;
}

Tokens SplitWhitespace(const std::string& line) {
  Tokens out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace prigen::metrics
