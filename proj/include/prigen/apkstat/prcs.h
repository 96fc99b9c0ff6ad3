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
#include <vector>

#include "prigen/apkstat/call_graph.h"
#include "prigen/apkstat/dex_file.h"
#include "prigen/apkstat/manifest.h"
#include "prigen/permdb/api_db.h"

namespace prigen::apkstat {

struct ApiCall {
  permdb::ApiSpec api;
  // Invoke sites in this method that lead to the API: direct calls for
  // hop 1, calls into the next-hop segment otherwise.
  uint32_t call_sites = 0;
};

// A permission-requiring code segment.
struct Prcs {
  std::string apk_id;
  MethodId method;
  std::string code_text;
  std::vector<ApiCall> called_apis;
  int hop_distance = 1;
  int loc = 0;
};

// Listing of a method body, one instruction per line ("0004: invoke-virtual
// {v0}, ..."). Throws InputError if the method is not defined in `dex` or
// has no code (abstract/native).
std::string RenderMethod(const DexFile& dex, const MethodId& method);
std::string RenderCode(const DexFile& dex, const CodeItem& code);

// Methods within `max_hops` caller steps of a permission-requiring API call.
// Hop 1 is a direct caller; hop h is at shortest caller distance h-1 from a
// hop-1 method. Sorted by (class, method, descriptor).
std::vector<Prcs> FindPrcs(const CallGraph& graph, std::span<const DexFile> dexes, const permdb::ApiDb& db,
                           int max_hops, const std::string& apk_id);

struct PermissionReport {
  // Permissions of APIs called without any of their permissions declared.
  std::vector<std::string> undeclared_use;
  // Declared permissions that no matched API call needs. Informational: the
  // API database covers only part of the platform.
  std::vector<std::string> unmatched_declaration;
};

PermissionReport CrossCheckPermissions(const ManifestInfo& manifest, std::span<const Prcs> prcs);

}  // namespace prigen::apkstat
