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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "prigen/apkstat/method_id.h"
#include "prigen/permdb/api_db.h"

namespace prigen::testing {

using apkstat::MethodId;

// One invoke instruction planted by the generator.
struct PlantedSite {
  MethodId caller;
  MethodId callee;
  int api_entry = -1;  // index into ApiDb::entries() when the callee is a listed API
};

struct FixtureApp {
  std::string apk_id;
  std::string package;
  std::vector<std::string> declared_permissions;
  bool binary_manifest = true;
  std::vector<std::vector<uint8_t>> dex_blobs;
  std::vector<PlantedSite> sites;
  std::map<MethodId, int> instruction_counts;  // defined methods with code
  std::set<MethodId> bodiless;                 // abstract methods
  std::vector<uint8_t> apk_bytes;
};

struct FixtureOptions {
  int methods = 30;
  int dex_files = 2;
  double api_call_rate = 0.12;
  double internal_call_rate = 0.5;
};

// Random application with a ledger of every invoke it contains. Payloads
// holding invoke-shaped data, range/polymorphic/custom invokes, abstract
// methods and cross-dex calls are all mixed in.
FixtureApp RandomApp(uint64_t seed, const permdb::ApiDb& db, const FixtureOptions& options = {});

struct ExpectedPrcs {
  int hop = 0;
  int loc = 0;
  // (api entry index) -> call sites
  std::map<int, uint32_t> apis;
};

// PRCS derived from the ledger alone: all-pairs shortest invoke distances
// over planted sites.
std::map<MethodId, ExpectedPrcs> OraclePrcs(const FixtureApp& app, const permdb::ApiDb& db, int max_hops);

// Edge set of the ledger.
std::set<std::pair<MethodId, MethodId>> OracleEdges(const FixtureApp& app);

permdb::ApiDb LoadTestDb();
std::string TestDataDir();

}  // namespace prigen::testing
