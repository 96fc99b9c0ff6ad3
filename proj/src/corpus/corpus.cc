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

#include "prigen/corpus/corpus.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>

#include "prigen/astpaths/java_lexer.h"
#include "prigen/common/error.h"
#include "prigen/common/rng.h"

namespace prigen::corpus {
namespace {

bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool IsIdentPart(char c) { return IsIdentStart(c) || std::isdigit(static_cast<unsigned char>(c)); }

const std::set<std::string, std::less<>> kKnownApiNames = {
    "String", "Object",  "Integer", "Long",    "Boolean", "Double",    "Float",    "Math",     "System",
    "out",    "err",     "println", "print",   "Log",     "d",         "e",        "i",        "v",
    "w",      "List",    "Map",     "Set",     "ArrayList", "HashMap", "Context",  "Intent",   "Bundle",
    "View",   "Activity", "toString", "equals", "hashCode", "length",  "size",     "get",      "put",
    "add",    "remove",  "append",  "StringBuilder", "Exception", "URL", "Socket", "Thread",   "Runnable",
    "getSystemService", "Location", "LocationManager", "WifiManager", "TelephonyManager"};

}  // namespace

std::vector<LexToken> TokenizeLenient(std::string_view s) {
  std::vector<LexToken> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    bool ident = false;
    if (IsIdentStart(c)) {
      while (i < s.size() && IsIdentPart(s[i])) ++i;
      ident = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '.' || s[i] == '_')) ++i;
    } else if (c == '"' || c == '\'') {
      ++i;
      while (i < s.size() && s[i] != c && s[i] != '\n') {
        if (s[i] == '\\' && i + 1 < s.size()) ++i;
        ++i;
      }
      if (i < s.size() && s[i] == c) ++i;
    } else {
      ++i;
    }
    out.push_back({std::string(s.substr(start, i - start)), ident});
  }
  return out;
}

std::vector<std::string> NormalizeCaption(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

double ObfuscationScore(std::string_view text) {
  std::size_t total = 0, short_ids = 0;
  for (const auto& tok : TokenizeLenient(text)) {
    if (!tok.identifier) continue;
    if (astpaths::IsJavaKeyword(tok.text) || tok.text == "true" || tok.text == "false" || tok.text == "null") continue;
    if (kKnownApiNames.count(tok.text)) continue;
    ++total;
    if (tok.text.size() <= 2) ++short_ids;
  }
  return total == 0 ? 0.0 : static_cast<double>(short_ids) / static_cast<double>(total);
}

std::vector<std::vector<std::uint32_t>> Shingles(std::span<const std::string> texts, int shingle_size) {
  if (shingle_size < 1) throw ArgumentError("shingle size must be at least 1");
  std::unordered_map<std::string, std::uint32_t> ids;
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(texts.size());
  for (const auto& text : texts) {
    auto toks = TokenizeLenient(text);
    std::vector<std::uint32_t> set;
    const std::size_t k = static_cast<std::size_t>(shingle_size);
    const std::size_t count = toks.size() < k ? (toks.empty() ? 0 : 1) : toks.size() - k + 1;
    for (std::size_t i = 0; i < count; ++i) {
      std::string key;
      for (std::size_t j = i; j < std::min(i + k, toks.size()); ++j) {
        key += toks[j].text;
        key.push_back('\x1f');
      }
      auto [it, inserted] = ids.emplace(std::move(key), static_cast<std::uint32_t>(ids.size()));
      set.push_back(it->second);
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    out.push_back(std::move(set));
  }
  return out;
}

double Jaccard(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t inter = 0, i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++inter;
      ++i;
      ++j;
    }
  }
  return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

DedupResult Dedup(std::span<const std::string> texts, int shingle_size, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) throw ArgumentError("dedup threshold must be in (0, 1]");
  auto sets = Shingles(texts, shingle_size);
  DedupResult result;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    bool dup = false;
    for (std::size_t k : result.kept) {
      if (Jaccard(sets[i], sets[k]) >= threshold) {
        result.removed.emplace_back(i, k);
        dup = true;
        break;
      }
    }
    if (!dup) result.kept.push_back(i);
  }
  return result;
}

std::vector<std::size_t> FilterObfuscated(std::span<const std::string> texts, double max_score) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (ObfuscationScore(texts[i]) <= max_score) kept.push_back(i);
  }
  return kept;
}

void ValidateSplit(const SplitSpec& spec) {
  for (double f : {spec.train, spec.validation, spec.test}) {
    if (!(f >= 0.0 && f <= 1.0)) throw ArgumentError("split fractions must be in [0, 1]");
  }
  if (std::fabs(spec.train + spec.validation + spec.test - 1.0) > 1e-6) {
    throw ArgumentError("split fractions must sum to 1");
  }
}

SplitIndices Split(std::size_t n, const SplitSpec& spec) {
  ValidateSplit(spec);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(spec.seed);
  rng.Shuffle(order);
  const auto n_val = static_cast<std::size_t>(std::floor(static_cast<double>(n) * spec.validation + 1e-9));
  const auto n_test = static_cast<std::size_t>(std::floor(static_cast<double>(n) * spec.test + 1e-9));
  const std::size_t n_train = n - n_val - n_test;
  SplitIndices out;
  out.train.assign(order.begin(), order.begin() + n_train);
  out.validation.assign(order.begin() + n_train, order.begin() + n_train + n_val);
  out.test.assign(order.begin() + n_train + n_val, order.end());
  return out;
}

}  // namespace prigen::corpus
