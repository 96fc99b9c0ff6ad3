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

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "prigen/apkstat/prcs.h"
#include "prigen/common/json_lines.h"
#include "prigen/permdb/api_db.h"

namespace prigen::pipeline {

struct ApkResult {
  std::string apk_id;
  std::filesystem::path path;
  bool ok = false;
  std::string error;
  apkstat::ManifestInfo manifest;
  std::vector<apkstat::Prcs> prcs;
  apkstat::PermissionReport report;
};

struct BatchSummary {
  std::size_t apks_ok = 0;
  std::size_t apks_failed = 0;
  std::size_t prcs_total = 0;
  std::vector<ApkResult> results;  // sorted by apk_id
};

// Full analysis of one APK. Throws InputError on unreadable or malformed input.
ApkResult AnalyzeApk(const std::filesystem::path& path, const permdb::ApiDb& db, int max_hops);
ApkResult AnalyzeApkBytes(std::vector<uint8_t> bytes, const std::string& apk_id, const permdb::ApiDb& db,
                          int max_hops);

// Expands directories to their *.apk files (sorted). Throws IoError for a
// missing path and ArgumentError for a directory without APKs.
std::vector<std::filesystem::path> CollectApks(const std::vector<std::filesystem::path>& inputs);

// Analyzes with up to `workers` threads. Per-APK failures are recorded, not
// thrown. The result order does not depend on scheduling.
BatchSummary BatchExtract(const std::vector<std::filesystem::path>& apks, const permdb::ApiDb& db, int max_hops,
                          int workers);

OrderedJson PrcsToJson(const apkstat::Prcs& prcs);
OrderedJson ReportToJson(const ApkResult& result);
OrderedJson SummaryToJson(const BatchSummary& summary);

}  // namespace prigen::pipeline
