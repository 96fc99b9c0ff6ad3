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

#include "prigen/apkstat/apk.h"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "prigen/apkstat/zip_reader.h"
#include "prigen/common/error.h"
#include "prigen/common/log.h"

namespace prigen::apkstat {

int DexEntryOrdinal(const std::string& name) {
  if (name == "classes.dex") return 1;
  const std::string prefix = "classes", suffix = ".dex";
  if (name.size() <= prefix.size() + suffix.size() || !name.starts_with(prefix) || !name.ends_with(suffix)) {
    return 0;
  }
  std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
  if (digits.empty() || digits.size() > 6 || digits[0] == '0' ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return 0;
  }
  int n = std::stoi(digits);
  return n >= 2 ? n : 0;
}

ApkContents ParseApkBytes(std::vector<uint8_t> bytes, std::string apk_id) {
  if (apk_id.empty()) throw ArgumentError("apk_id must be non-empty");
  ZipArchive zip(std::move(bytes));

  ApkContents apk;
  apk.apk_id = std::move(apk_id);
  if (const ZipEntry* m = zip.Find("AndroidManifest.xml")) {
    apk.manifest_bytes = zip.Read(*m);
    apk.has_manifest = true;
  } else {
    spdlog::warn("{}: no AndroidManifest.xml; permission cross-check disabled", apk.apk_id);
  }

  std::vector<std::pair<int, const ZipEntry*>> dex_entries;
  for (const ZipEntry& e : zip.entries()) {
    if (int n = DexEntryOrdinal(e.name)) dex_entries.emplace_back(n, &e);
  }
  if (dex_entries.empty()) throw FormatError("apk", 0, "no classes*.dex entry in " + apk.apk_id);
  std::sort(dex_entries.begin(), dex_entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [n, e] : dex_entries) apk.dex_blobs.push_back(zip.Read(*e));
  return apk;
}

ApkContents ParseApk(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return ParseApkBytes(std::move(bytes), path.filename().string());
}

}  // namespace prigen::apkstat
