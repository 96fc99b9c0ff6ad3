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

#include "prigen/apkstat/byte_reader.h"

#include "prigen/common/error.h"

namespace prigen::apkstat {

void ByteReader::Require(std::size_t off, std::size_t len, const char* structure) const {
  if (off > data_.size() || len > data_.size() - off) {
    throw FormatError(structure, off,
                      "out of bounds (need " + std::to_string(len) + " bytes, file has " +
                          std::to_string(data_.size()) + ")");
  }
}

void ByteReader::RequireArray(std::size_t off, std::size_t count, std::size_t elem, const char* structure) const {
  if (elem != 0 && count > data_.size() / elem) {
    throw FormatError(structure, off, "element count " + std::to_string(count) + " exceeds file size");
  }
  Require(off, count * elem, structure);
}

uint8_t ByteReader::U8(std::size_t off, const char* structure) const {
  Require(off, 1, structure);
  return data_[off];
}

uint16_t ByteReader::U16(std::size_t off, const char* structure) const {
  Require(off, 2, structure);
  return static_cast<uint16_t>(data_[off] | (data_[off + 1] << 8));
}

uint32_t ByteReader::U32(std::size_t off, const char* structure) const {
  Require(off, 4, structure);
  return static_cast<uint32_t>(data_[off]) | (static_cast<uint32_t>(data_[off + 1]) << 8) |
         (static_cast<uint32_t>(data_[off + 2]) << 16) | (static_cast<uint32_t>(data_[off + 3]) << 24);
}

uint32_t ByteReader::Uleb128(std::size_t& off, const char* structure) const {
  const std::size_t start = off;
  uint32_t result = 0;
  for (int i = 0; i < 5; ++i) {
    uint8_t b = U8(off++, structure);
    if (i == 4 && (b & 0xf0) != 0) throw FormatError(structure, start, "malformed ULEB128 (overflow)");
    result |= static_cast<uint32_t>(b & 0x7f) << (7 * i);
    if ((b & 0x80) == 0) return result;
  }
  throw FormatError(structure, start, "malformed ULEB128 (more than 5 bytes)");
}

int32_t ByteReader::Sleb128(std::size_t& off, const char* structure) const {
  const std::size_t start = off;
  uint32_t result = 0;
  for (int i = 0; i < 5; ++i) {
    uint8_t b = U8(off++, structure);
    result |= static_cast<uint32_t>(b & 0x7f) << (7 * i);
    if ((b & 0x80) == 0) {
      int shift = 7 * (i + 1);
      if (shift < 32 && (b & 0x40)) result |= ~0u << shift;
      return static_cast<int32_t>(result);
    }
  }
  throw FormatError(structure, start, "malformed SLEB128 (more than 5 bytes)");
}

}  // namespace prigen::apkstat
