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

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "prigen/corpus/dataset_format.h"

namespace prigen::nmt {

inline constexpr int kPad = 0;
inline constexpr int kSos = 1;
inline constexpr int kEos = 2;
inline constexpr int kUnk = 3;
inline constexpr int kNumReserved = 4;

class TokenMap {
 public:
  TokenMap();
  // Appends tokens after the reserved ones. Duplicates are rejected.
  explicit TokenMap(const std::vector<std::string>& tokens);

  int Lookup(std::string_view token) const;  // kUnk when absent
  bool Contains(std::string_view token) const;
  const std::string& Token(int id) const { return id_to_token_[id]; }
  int size() const { return static_cast<int>(id_to_token_.size()); }
  // Tokens after the reserved ones, in id order.
  std::vector<std::string> Tokens() const;

  bool operator==(const TokenMap& other) const { return id_to_token_ == other.id_to_token_; }

 private:
  std::vector<std::string> id_to_token_;
  std::unordered_map<std::string, int> token_to_id_;
};

struct Vocab {
  TokenMap subtokens;
  TokenMap nodes;
  TokenMap targets;
  bool operator==(const Vocab&) const = default;
};

// Ids sorted by frequency descending then lexicographically; tokens below
// min_count are left out. Throws ArgumentError on an empty training set.
Vocab BuildVocab(std::span<const corpus::DatasetLine> train, int min_count);

struct EncodedContext {
  std::vector<int> left;
  std::vector<int> path;
  std::vector<int> right;
  bool operator==(const EncodedContext&) const = default;
};

struct Example {
  std::vector<EncodedContext> contexts;
  std::vector<int> target;  // without SOS/EOS
};

// Maps tokens to ids (unknowns to UNK), keeps the first max_contexts contexts
// and at most max_target_parts - 1 target tokens.
Example EncodeExample(const corpus::DatasetLine& line, const Vocab& vocab, int max_contexts, int max_target_parts);

std::vector<std::string> DecodeTargets(const std::vector<int>& ids, const Vocab& vocab);

}  // namespace prigen::nmt
