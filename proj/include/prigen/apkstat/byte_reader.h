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
#include <cstdint>
#include <span>
#include <string>

namespace prigen::apkstat {

// Little-endian reads over a borrowed buffer. Every access is bounds checked
// and failures throw FormatError naming `structure`.
class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

  std::size_t size() const { return data_.size(); }
  std::span<const uint8_t> data() const { return data_; }

  uint8_t U8(std::size_t off, const char* structure) const;
  uint16_t U16(std::size_t off, const char* structure) const;
  uint32_t U32(std::size_t off, const char* structure) const;

  // Throws unless [off, off + len) lies inside the buffer.
  void Require(std::size_t off, std::size_t len, const char* structure) const;
  // Same as Require with len = count * elem, guarding the multiplication.
  void RequireArray(std::size_t off, std::size_t count, std::size_t elem, const char* structure) const;

  // Advances `off` past the value.
  uint32_t Uleb128(std::size_t& off, const char* structure) const;
  int32_t Sleb128(std::size_t& off, const char* structure) const;

 private:
  std::span<const uint8_t> data_;
};

}  // namespace prigen::apkstat
