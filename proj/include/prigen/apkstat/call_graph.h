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
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "prigen/apkstat/dex_file.h"
#include "prigen/apkstat/method_id.h"

namespace prigen::apkstat {

// Where a method defined in the application lives.
struct MethodDefinition {
  std::size_t dex = 0;
  uint32_t method_idx = 0;
  uint32_t access_flags = 0;
  std::optional<std::size_t> code;  // index into DexFile::code_items()
};

// Static invocation graph over every dex of one application. Nodes are
// sorted by MethodId; edges are unique (caller, callee) node-index pairs,
// sorted. Nodes without a definition are external callees.
struct CallGraph {
  std::vector<MethodId> nodes;
  std::vector<std::optional<MethodDefinition>> definitions;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  std::vector<std::vector<uint32_t>> callees;
  std::vector<std::vector<uint32_t>> callers;

  std::optional<uint32_t> Find(const MethodId& id) const;
  std::set<std::pair<MethodId, MethodId>> EdgeSet() const;
};

// Callee identity of an invoke instruction. invoke-custom targets have no
// method_id and become opaque "<invoke-custom>" nodes.
MethodId InvokeTarget(const DexFile& dex, std::size_t dex_index, const Instruction& insn);

CallGraph BuildCallGraph(std::span<const DexFile> dexes);

}  // namespace prigen::apkstat
