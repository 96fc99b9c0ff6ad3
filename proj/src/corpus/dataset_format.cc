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

#include "prigen/corpus/dataset_format.h"

#include "prigen/common/error.h"

namespace prigen::corpus {
namespace {

void CheckToken(const std::string& tok) {
  if (tok.empty()) throw ValidationError("empty token in dataset line");
  if (tok.find_first_of(" ,|\t\n\r") != std::string::npos) {
    throw ValidationError("token '" + tok + "' contains a reserved character");
  }
}

std::string Join(const std::vector<std::string>& toks) {
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    CheckToken(toks[i]);
    if (i) out.push_back('|');
    out += toks[i];
  }
  return out;
}

std::vector<std::string> SplitOn(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> SplitField(std::string_view field, std::string_view what) {
  auto parts = SplitOn(field, '|');
  for (const auto& p : parts) {
    if (p.empty()) throw ParseError("empty subtoken in " + std::string(what));
  }
  return parts;
}

}  // namespace

std::string FormatContext(const astpaths::ContextTokens& ctx) {
  if (ctx.left.empty() || ctx.path.empty() || ctx.right.empty()) {
    throw ValidationError("context with an empty field");
  }
  return Join(ctx.left) + "," + Join(ctx.path) + "," + Join(ctx.right);
}

astpaths::ContextTokens ParseContext(std::string_view field) {
  auto parts = SplitOn(field, ',');
  if (parts.size() != 3) throw ParseError("context '" + std::string(field) + "' does not have three fields");
  astpaths::ContextTokens ctx;
  ctx.left = SplitField(parts[0], "context");
  ctx.path = SplitField(parts[1], "context");
  ctx.right = SplitField(parts[2], "context");
  return ctx;
}

std::string FormatDatasetLine(const DatasetLine& line) {
  std::string out = line.target.empty() ? "_" : Join(line.target);
  for (const auto& ctx : line.contexts) out += " " + FormatContext(ctx);
  return out;
}

DatasetLine ParseDatasetLine(std::string_view text) {
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  auto fields = SplitOn(text, ' ');
  if (fields.empty() || fields[0].empty()) throw ParseError("dataset line has no target");
  DatasetLine line;
  if (fields[0] != "_") line.target = SplitField(fields[0], "target");
  for (std::size_t i = 1; i < fields.size(); ++i) line.contexts.push_back(ParseContext(fields[i]));
  return line;
}

}  // namespace prigen::corpus
