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
#include <vector>

namespace prigen::apkstat {

struct ZipEntry {
  std::string name;
  uint16_t method = 0;  // 0 = stored, 8 = deflate
  uint32_t crc32 = 0;
  uint32_t compressed_size = 0;
  uint32_t uncompressed_size = 0;
  uint32_t local_header_offset = 0;
};

// Read-only view of a ZIP archive held in memory. Supports stored and
// deflated entries; ZIP64 and encryption are rejected.
class ZipArchive {
 public:
  // Throws FormatError if the buffer is not a ZIP archive.
  explicit ZipArchive(std::vector<uint8_t> bytes);

  const std::vector<ZipEntry>& entries() const { return entries_; }
  const ZipEntry* Find(const std::string& name) const;
  // Decompresses and CRC-checks one entry.
  std::vector<uint8_t> Read(const ZipEntry& entry) const;

 private:
  std::vector<uint8_t> bytes_;
  std::vector<ZipEntry> entries_;
};

}  // namespace prigen::apkstat
