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

#include "prigen/apkstat/call_graph.h"

#include <algorithm>
#include <map>

namespace prigen::apkstat {

std::optional<uint32_t> CallGraph::Find(const MethodId& id) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
  if (it == nodes.end() || *it != id) return std::nullopt;
  return static_cast<uint32_t>(it - nodes.begin());
}

std::set<std::pair<MethodId, MethodId>> CallGraph::EdgeSet() const {
  std::set<std::pair<MethodId, MethodId>> out;
  for (const auto& [from, to] : edges) out.emplace(nodes[from], nodes[to]);
  return out;
}

MethodId InvokeTarget(const DexFile& dex, std::size_t dex_index, const Instruction& insn) {
  if (GetInvokeKind(insn.opcode) == InvokeKind::kCustom) {
    return MethodId{"<invoke-custom>", "call_site_" + std::to_string(dex_index) + "_" + std::to_string(insn.index), ""};
  }
  return dex.ResolveMethod(insn.index);
}

CallGraph BuildCallGraph(std::span<const DexFile> dexes) {
  std::map<MethodId, std::optional<MethodDefinition>> nodes;
  std::set<std::pair<MethodId, MethodId>> edge_set;

  for (std::size_t d = 0; d < dexes.size(); ++d) {
    const DexFile& dex = dexes[d];
    for (const ClassDef& cls : dex.class_defs()) {
      for (const auto* list : {&cls.direct_methods, &cls.virtual_methods}) {
        for (const EncodedMethod& m : *list) {
          MethodId id = dex.ResolveMethod(m.method_idx);
          auto& slot = nodes[id];
          // Cross-dex duplicates: the first definition wins.
          if (slot) continue;
          slot = MethodDefinition{d, m.method_idx, m.access_flags, m.code};
          if (!m.code) continue;
          for (const Instruction& insn : dex.code_items()[*m.code].insns) {
            if (insn.payload != PayloadKind::kNone || GetInvokeKind(insn.opcode) == InvokeKind::kNone) continue;
            edge_set.emplace(id, InvokeTarget(dex, d, insn));
          }
        }
      }
    }
  }
  for (const auto& [from, to] : edge_set) {
    nodes.try_emplace(from);
    nodes.try_emplace(to);
  }

  CallGraph g;
  g.nodes.reserve(nodes.size());
  for (auto& [id, def] : nodes) {
    g.nodes.push_back(id);
    g.definitions.push_back(def);
  }
  g.callees.resize(g.nodes.size());
  g.callers.resize(g.nodes.size());
  for (const auto& [from, to] : edge_set) {
    uint32_t a = *g.Find(from), b = *g.Find(to);
    g.edges.emplace_back(a, b);
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (const auto& [a, b] : g.edges) {
    g.callees[a].push_back(b);
    g.callers[b].push_back(a);
  }
  return g;
}

}  // namespace prigen::apkstat
