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

#include "prigen/apkstat/zip_reader.h"

#include <zlib.h>

#include <algorithm>

#include "prigen/apkstat/byte_reader.h"
#include "prigen/common/error.h"

namespace prigen::apkstat {
namespace {

constexpr uint32_t kLocalHeaderSig = 0x04034b50;
constexpr uint32_t kCentralHeaderSig = 0x02014b50;
constexpr uint32_t kEndOfCentralDirSig = 0x06054b50;
constexpr std::size_t kEocdSize = 22;
// Largest entry we are willing to inflate.
constexpr uint32_t kMaxEntrySize = 512u << 20;

}  // namespace

ZipArchive::ZipArchive(std::vector<uint8_t> bytes) : bytes_(std::move(bytes)) {
  ByteReader r(bytes_);
  if (bytes_.size() < 4 || r.U32(0, "zip") != kLocalHeaderSig) {
    // An archive with zero entries starts directly with the EOCD record.
    if (bytes_.size() < 4 || r.U32(0, "zip") != kEndOfCentralDirSig) {
      throw FormatError("zip", 0, "not a ZIP archive (bad magic)");
    }
  }
  if (bytes_.size() < kEocdSize) throw FormatError("zip", 0, "too small for an end-of-central-directory record");

  // The EOCD record sits at the end, possibly followed by a comment of up to 64 KiB.
  std::size_t eocd = std::string::npos;
  const std::size_t lowest = bytes_.size() > kEocdSize + 0xffff ? bytes_.size() - kEocdSize - 0xffff : 0;
  for (std::size_t pos = bytes_.size() - kEocdSize + 1; pos-- > lowest;) {
    if (r.U32(pos, "zip eocd") == kEndOfCentralDirSig) {
      eocd = pos;
      break;
    }
  }
  if (eocd == std::string::npos) throw FormatError("zip eocd", bytes_.size(), "end of central directory not found");

  const uint16_t disk = r.U16(eocd + 4, "zip eocd");
  const uint16_t count = r.U16(eocd + 10, "zip eocd");
  const uint32_t cd_size = r.U32(eocd + 12, "zip eocd");
  const uint32_t cd_offset = r.U32(eocd + 16, "zip eocd");
  if (disk != 0) throw FormatError("zip eocd", eocd, "multi-disk archives are not supported");
  if (cd_offset == 0xffffffff || count == 0xffff) throw FormatError("zip eocd", eocd, "ZIP64 is not supported");
  r.Require(cd_offset, cd_size, "zip central directory");

  std::size_t pos = cd_offset;
  for (uint16_t i = 0; i < count; ++i) {
    if (r.U32(pos, "zip central header") != kCentralHeaderSig) {
      throw FormatError("zip central header", pos, "bad signature");
    }
    ZipEntry e;
    const uint16_t flags = r.U16(pos + 8, "zip central header");
    e.method = r.U16(pos + 10, "zip central header");
    e.crc32 = r.U32(pos + 16, "zip central header");
    e.compressed_size = r.U32(pos + 20, "zip central header");
    e.uncompressed_size = r.U32(pos + 24, "zip central header");
    const uint16_t name_len = r.U16(pos + 28, "zip central header");
    const uint16_t extra_len = r.U16(pos + 30, "zip central header");
    const uint16_t comment_len = r.U16(pos + 32, "zip central header");
    e.local_header_offset = r.U32(pos + 42, "zip central header");
    r.Require(pos + 46, name_len, "zip entry name");
    e.name.assign(reinterpret_cast<const char*>(bytes_.data() + pos + 46), name_len);
    if (flags & 0x1) throw FormatError("zip central header", pos, "encrypted entry '" + e.name + "'");
    entries_.push_back(std::move(e));
    pos += 46 + static_cast<std::size_t>(name_len) + extra_len + comment_len;
  }
}

const ZipEntry* ZipArchive::Find(const std::string& name) const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const ZipEntry& e) { return e.name == name; });
  return it == entries_.end() ? nullptr : &*it;
}

std::vector<uint8_t> ZipArchive::Read(const ZipEntry& entry) const {
  ByteReader r(bytes_);
  const std::size_t lh = entry.local_header_offset;
  if (r.U32(lh, "zip local header") != kLocalHeaderSig) {
    throw FormatError("zip local header", lh, "bad signature for '" + entry.name + "'");
  }
  const uint16_t name_len = r.U16(lh + 26, "zip local header");
  const uint16_t extra_len = r.U16(lh + 28, "zip local header");
  const std::size_t data_off = lh + 30 + static_cast<std::size_t>(name_len) + extra_len;
  r.Require(data_off, entry.compressed_size, "zip entry data");
  if (entry.uncompressed_size > kMaxEntrySize) {
    throw FormatError("zip entry data", data_off, "entry '" + entry.name + "' is too large");
  }

  std::vector<uint8_t> out;
  const uint8_t* src = bytes_.data() + data_off;
  if (entry.method == 0) {
    if (entry.compressed_size != entry.uncompressed_size) {
      throw FormatError("zip entry data", data_off, "stored entry size mismatch for '" + entry.name + "'");
    }
    out.assign(src, src + entry.compressed_size);
  } else if (entry.method == 8) {
    out.resize(entry.uncompressed_size);
    z_stream zs{};
    if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) throw FormatError("zip entry data", data_off, "inflateInit failed");
    zs.next_in = const_cast<Bytef*>(src);
    zs.avail_in = entry.compressed_size;
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    int rc = inflate(&zs, Z_FINISH);
    const uLong produced = zs.total_out;
    inflateEnd(&zs);
    if (rc != Z_STREAM_END || produced != entry.uncompressed_size) {
      throw FormatError("zip entry data", data_off, "corrupt deflate stream in '" + entry.name + "'");
    }
  } else {
    throw FormatError("zip entry data", data_off,
                      "unsupported compression method " + std::to_string(entry.method) + " in '" + entry.name + "'");
  }
  const uint32_t crc = static_cast<uint32_t>(::crc32(0L, out.data(), static_cast<uInt>(out.size())));
  if (crc != entry.crc32) throw FormatError("zip entry data", data_off, "CRC mismatch in '" + entry.name + "'");
  return out;
}

}  // namespace prigen::apkstat
