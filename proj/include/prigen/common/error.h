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
#include <stdexcept>
#include <string>

namespace prigen {

// Everything derived from InputError describes bad user input (files, flags,
// formats). The CLI maps these to exit code 1; anything else is internal.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

class ArgumentError : public InputError {
 public:
  using InputError::InputError;
};

// Malformed binary structure. Carries the structure name and byte offset.
class FormatError : public ParseError {
 public:
  FormatError(std::string structure, std::size_t offset, const std::string& what)
      : ParseError(structure + " @0x" + ToHex(offset) + ": " + what),
        structure_(std::move(structure)),
        offset_(offset) {}

  const std::string& structure() const { return structure_; }
  std::size_t offset() const { return offset_; }

 private:
  static std::string ToHex(std::size_t v) {
    static const char kDigits[] = "0123456789abcdef";
    std::string out;
    do {
      out.insert(out.begin(), kDigits[v & 0xf]);
      v >>= 4;
    } while (v != 0);
    return out;
  }

  std::string structure_;
  std::size_t offset_;
};

}  // namespace prigen
