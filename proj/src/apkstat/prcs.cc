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

#include "prigen/apkstat/prcs.h"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <set>

#include "prigen/common/error.h"

namespace prigen::apkstat {
namespace {

bool ApiLess(const permdb::ApiSpec* a, const permdb::ApiSpec* b) {
  return std::tie(a->group, a->class_name, a->method_name, a->descriptor) <
         std::tie(b->group, b->class_name, b->method_name, b->descriptor);
}

struct ApiPtrLess {
  bool operator()(const permdb::ApiSpec* a, const permdb::ApiSpec* b) const { return ApiLess(a, b); }
};

using ApiCounts = std::map<const permdb::ApiSpec*, uint32_t, ApiPtrLess>;

}  // namespace

std::string RenderCode(const DexFile& dex, const CodeItem& code) {
  std::string out;
  char prefix[16];
  for (const Instruction& insn : code.insns) {
    if (!out.empty()) out += '\n';
    std::snprintf(prefix, sizeof(prefix), "%04x: ", insn.offset);
    out += prefix;
    out += dex.RenderInstruction(insn);
  }
  return out;
}

std::string RenderMethod(const DexFile& dex, const MethodId& method) {
  for (const ClassDef& cls : dex.class_defs()) {
    for (const auto* list : {&cls.direct_methods, &cls.virtual_methods}) {
      for (const EncodedMethod& m : *list) {
        if (dex.ResolveMethod(m.method_idx) != method) continue;
        if (!m.code) throw InputError("method has no body (abstract or native): " + method.ToString());
        return RenderCode(dex, dex.code_items()[*m.code]);
      }
    }
  }
  throw InputError("method is not defined in this dex: " + method.ToString());
}

std::vector<Prcs> FindPrcs(const CallGraph& graph, std::span<const DexFile> dexes, const permdb::ApiDb& db,
                           int max_hops, const std::string& apk_id) {
  if (max_hops < 1) throw ArgumentError("max_hops must be >= 1, got " + std::to_string(max_hops));
  const std::size_t n = graph.nodes.size();

  std::vector<const permdb::ApiSpec*> api_of(n, nullptr);
  for (std::size_t i = 0; i < n; ++i) {
    const MethodId& id = graph.nodes[i];
    api_of[i] = db.Lookup(id.class_name, id.method_name, id.descriptor);
  }

  // Invoke-site multiplicity per (caller, callee).
  std::vector<std::map<uint32_t, uint32_t>> sites(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& def = graph.definitions[i];
    if (!def || !def->code) continue;
    const DexFile& dex = dexes[def->dex];
    for (const Instruction& insn : dex.code_items()[*def->code].insns) {
      if (insn.payload != PayloadKind::kNone || GetInvokeKind(insn.opcode) == InvokeKind::kNone) continue;
      if (auto callee = graph.Find(InvokeTarget(dex, def->dex, insn))) ++sites[i][*callee];
    }
  }

  std::vector<int> hop(n, 0);
  std::vector<ApiCounts> apis(n);
  std::vector<uint32_t> frontier;
  for (uint32_t i = 0; i < n; ++i) {
    if (!graph.definitions[i] || !graph.definitions[i]->code) continue;
    for (const auto& [callee, count] : sites[i]) {
      if (api_of[callee]) apis[i][api_of[callee]] += count;
    }
    if (!apis[i].empty()) {
      hop[i] = 1;
      frontier.push_back(i);
    }
  }

  for (int h = 2; h <= max_hops && !frontier.empty(); ++h) {
    std::set<uint32_t> next;
    for (uint32_t u : frontier) {
      for (uint32_t caller : graph.callers[u]) {
        if (hop[caller] == 0) next.insert(caller);
      }
    }
    for (uint32_t v : next) hop[v] = h;
    for (uint32_t v : next) {
      for (const auto& [callee, count] : sites[v]) {
        if (hop[callee] != h - 1) continue;
        for (const auto& [api, unused] : apis[callee]) apis[v][api] += count;
      }
    }
    frontier.assign(next.begin(), next.end());
  }

  std::vector<Prcs> out;
  for (uint32_t i = 0; i < n; ++i) {
    if (hop[i] == 0) continue;
    const MethodDefinition& def = *graph.definitions[i];
    const DexFile& dex = dexes[def.dex];
    Prcs p;
    p.apk_id = apk_id;
    p.method = graph.nodes[i];
    p.code_text = RenderCode(dex, dex.code_items()[*def.code]);
    p.loc = static_cast<int>(std::count(p.code_text.begin(), p.code_text.end(), '\n')) + 1;
    p.hop_distance = hop[i];
    for (const auto& [api, count] : apis[i]) p.called_apis.push_back(ApiCall{*api, count});
    out.push_back(std::move(p));
  }
  return out;
}

PermissionReport CrossCheckPermissions(const ManifestInfo& manifest, std::span<const Prcs> prcs) {
  std::set<std::string> undeclared, needed;
  for (const Prcs& p : prcs) {
    for (const ApiCall& call : p.called_apis) {
      bool satisfied = false;
      for (const auto& perm : call.api.permissions) {
        needed.insert(perm);
        if (manifest.declared_permissions.count(perm)) satisfied = true;
      }
      if (!satisfied) undeclared.insert(call.api.permissions.begin(), call.api.permissions.end());
    }
  }
  PermissionReport report;
  report.undeclared_use.assign(undeclared.begin(), undeclared.end());
  for (const auto& perm : manifest.declared_permissions) {
    if (!needed.count(perm)) report.unmatched_declaration.push_back(perm);
  }
  return report;
}

}  // namespace prigen::apkstat
