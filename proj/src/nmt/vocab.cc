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

#include "prigen/nmt/vocab.h"

#include <algorithm>
#include <map>

#include "prigen/common/error.h"

namespace prigen::nmt {
namespace {

const char* const kReservedNames[kNumReserved] = {"<PAD>", "<SOS>", "<EOS>", "<UNK>"};

std::vector<std::string> Ranked(const std::map<std::string, int>& counts, int min_count) {
  std::vector<std::pair<std::string, int>> items;
  for (const auto& [tok, n] : counts) {
    if (n >= min_count) items.emplace_back(tok, n);
  }
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> out;
  for (auto& [tok, n] : items) out.push_back(std::move(tok));
  return out;
}

}  // namespace

TokenMap::TokenMap() {
  for (int i = 0; i < kNumReserved; ++i) {
    id_to_token_.emplace_back(kReservedNames[i]);
    token_to_id_.emplace(kReservedNames[i], i);
  }
}

TokenMap::TokenMap(const std::vector<std::string>& tokens) : TokenMap() {
  for (const auto& t : tokens) {
    if (!token_to_id_.emplace(t, size()).second) throw ValidationError("duplicate vocabulary token '" + t + "'");
    id_to_token_.push_back(t);
  }
}

int TokenMap::Lookup(std::string_view token) const {
  auto it = token_to_id_.find(std::string(token));
  return it == token_to_id_.end() ? kUnk : it->second;
}

bool TokenMap::Contains(std::string_view token) const { return token_to_id_.count(std::string(token)) > 0; }

std::vector<std::string> TokenMap::Tokens() const {
  return std::vector<std::string>(id_to_token_.begin() + kNumReserved, id_to_token_.end());
}

Vocab BuildVocab(std::span<const corpus::DatasetLine> train, int min_count) {
  if (train.empty()) throw ArgumentError("cannot build a vocabulary from an empty training set");
  if (min_count < 1) throw ArgumentError("min_count must be at least 1");
  std::map<std::string, int> subs, nodes, targets;
  for (const auto& line : train) {
    for (const auto& t : line.target) ++targets[t];
    for (const auto& ctx : line.contexts) {
      for (const auto& t : ctx.left) ++subs[t];
      for (const auto& t : ctx.right) ++subs[t];
      for (const auto& t : ctx.path) ++nodes[t];
    }
  }
  Vocab v;
  v.subtokens = TokenMap(Ranked(subs, min_count));
  v.nodes = TokenMap(Ranked(nodes, min_count));
  v.targets = TokenMap(Ranked(targets, min_count));
  return v;
}

Example EncodeExample(const corpus::DatasetLine& line, const Vocab& vocab, int max_contexts, int max_target_parts) {
  Example ex;
  const std::size_t n_ctx = std::min(line.contexts.size(), static_cast<std::size_t>(std::max(max_contexts, 0)));
  for (std::size_t i = 0; i < n_ctx; ++i) {
    const auto& c = line.contexts[i];
    EncodedContext e;
    for (const auto& t : c.left) e.left.push_back(vocab.subtokens.Lookup(t));
    for (const auto& t : c.path) e.path.push_back(vocab.nodes.Lookup(t));
    for (const auto& t : c.right) e.right.push_back(vocab.subtokens.Lookup(t));
    ex.contexts.push_back(std::move(e));
  }
  const std::size_t n_tgt = std::min(line.target.size(), static_cast<std::size_t>(std::max(max_target_parts - 1, 0)));
  for (std::size_t i = 0; i < n_tgt; ++i) ex.target.push_back(vocab.targets.Lookup(line.target[i]));
  return ex;
}

std::vector<std::string> DecodeTargets(const std::vector<int>& ids, const Vocab& vocab) {
  std::vector<std::string> out;
  for (int id : ids) out.push_back(vocab.targets.Token(id));
  return out;
}

}  // namespace prigen::nmt
