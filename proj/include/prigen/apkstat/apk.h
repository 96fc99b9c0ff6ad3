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
#include <filesystem>
#include <string>
#include <vector>

namespace prigen::apkstat {

struct ApkContents {
  std::string apk_id;
  // Empty when the archive has no AndroidManifest.xml.
  std::vector<uint8_t> manifest_bytes;
  bool has_manifest = false;
  // classes.dex, classes2.dex, ... in numeric order.
  std::vector<std::vector<uint8_t>> dex_blobs;
};

// Returns 1 for "classes.dex", N for "classesN.dex" (N >= 2), 0 otherwise.
int DexEntryOrdinal(const std::string& entry_name);

ApkContents ParseApk(const std::filesystem::path& path);
ApkContents ParseApkBytes(std::vector<uint8_t> bytes, std::string apk_id);

}  // namespace prigen::apkstat
