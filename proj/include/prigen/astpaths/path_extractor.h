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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "prigen/astpaths/java_ast.h"

namespace prigen::astpaths {

struct PathLimits {
  int max_length = 9;  // nodes on the path, terminals included
  int max_width = 2;   // child-index gap at the apex
  int max_contexts = 200;
  std::uint64_t seed = 0;
};

struct PathStep {
  int node = -1;
  std::string label;
  bool up = false;
};

struct PathContext {
  int left_terminal = -1;
  int right_terminal = -1;
  int apex = -1;
  std::vector<std::string> left_subtokens;
  std::vector<PathStep> steps;
  std::vector<std::string> right_subtokens;
};

// Token view of a context: path entries are "Label^" (up) or "Label_" (down).
struct ContextTokens {
  std::vector<std::string> left;
  std::vector<std::string> path;
  std::vector<std::string> right;
  bool operator==(const ContextTokens&) const = default;
};

void ValidateLimits(const PathLimits& limits);

// All terminal pairs within the limits, in (left, right) source order. When
// more than max_contexts qualify a seeded sample is kept, still in order.
std::vector<PathContext> ExtractPaths(const Ast& ast, const PathLimits& limits);

ContextTokens ToTokens(const PathContext& context);

// Parses a method and extracts its contexts.
std::vector<ContextTokens> ExtractMethodContexts(std::string_view source, const PathLimits& limits);

}  // namespace prigen::astpaths
