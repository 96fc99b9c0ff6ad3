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

#include "prigen/astpaths/path_extractor.h"

#include <algorithm>
#include <utility>

#include "prigen/astpaths/java_parser.h"
#include "prigen/astpaths/subtoken.h"
#include "prigen/common/error.h"
#include "prigen/common/rng.h"

namespace prigen::astpaths {

void ValidateLimits(const PathLimits& limits) {
  if (limits.max_length < 2) throw ArgumentError("max_length must be at least 2");
  if (limits.max_width < 0) throw ArgumentError("max_width must be non-negative");
  if (limits.max_contexts < 1) throw ArgumentError("max_contexts must be at least 1");
}

std::vector<PathContext> ExtractPaths(const Ast& ast, const PathLimits& limits) {
  ValidateLimits(limits);
  const auto& terms = ast.terminals();

  struct Pair {
    int a, b, lca;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      int a = terms[i], b = terms[j];
      int x = a, y = b;
      int below_x = -1, below_y = -1;
      while (ast.node(x).depth > ast.node(y).depth) below_x = std::exchange(x, ast.node(x).parent);
      while (ast.node(y).depth > ast.node(x).depth) below_y = std::exchange(y, ast.node(y).parent);
      while (x != y) {
        below_x = std::exchange(x, ast.node(x).parent);
        below_y = std::exchange(y, ast.node(y).parent);
      }
      const int lca = x;
      const int length = (ast.node(a).depth - ast.node(lca).depth) + (ast.node(b).depth - ast.node(lca).depth) + 1;
      if (length > limits.max_length) continue;
      // Terminals are leaves, so neither is the ancestor of the other.
      const int width = ast.node(below_y).child_index - ast.node(below_x).child_index;
      if (width > limits.max_width) continue;
      pairs.push_back({a, b, lca});
    }
  }

  if (static_cast<int>(pairs.size()) > limits.max_contexts) {
    Rng rng(limits.seed);
    const std::size_t k = static_cast<std::size_t>(limits.max_contexts);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng.Below(pairs.size() - i));
      std::swap(pairs[i], pairs[j]);
    }
    pairs.resize(k);
    std::vector<std::size_t> order(terms.size() ? ast.nodes().size() : 0);
    for (std::size_t i = 0; i < terms.size(); ++i) order[terms[i]] = i;
    std::sort(pairs.begin(), pairs.end(), [&](const Pair& p, const Pair& q) {
      return std::pair(order[p.a], order[p.b]) < std::pair(order[q.a], order[q.b]);
    });
  }

  std::vector<PathContext> out;
  out.reserve(pairs.size());
  for (const Pair& p : pairs) {
    PathContext ctx;
    ctx.left_terminal = p.a;
    ctx.right_terminal = p.b;
    ctx.apex = p.lca;
    ctx.left_subtokens = TerminalSubtokens(ast.node(p.a).lexeme);
    ctx.right_subtokens = TerminalSubtokens(ast.node(p.b).lexeme);
    for (int n = p.a; n != p.lca; n = ast.node(n).parent) ctx.steps.push_back({n, ast.KindLabel(n), true});
    std::vector<int> down;
    for (int n = p.b; n != p.lca; n = ast.node(n).parent) down.push_back(n);
    ctx.steps.push_back({p.lca, ast.KindLabel(p.lca), false});
    for (auto it = down.rbegin(); it != down.rend(); ++it) ctx.steps.push_back({*it, ast.KindLabel(*it), false});
    out.push_back(std::move(ctx));
  }
  return out;
}

ContextTokens ToTokens(const PathContext& context) {
  ContextTokens t;
  t.left = context.left_subtokens;
  t.right = context.right_subtokens;
  for (const auto& s : context.steps) t.path.push_back(s.label + (s.up ? "^" : "_"));
  return t;
}

std::vector<ContextTokens> ExtractMethodContexts(std::string_view source, const PathLimits& limits) {
  Ast ast = ParseJavaMethod(source);
  std::vector<ContextTokens> out;
  for (const auto& ctx : ExtractPaths(ast, limits)) out.push_back(ToTokens(ctx));
  return out;
}

}  // namespace prigen::astpaths
