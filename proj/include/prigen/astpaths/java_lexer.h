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
#include <string>
#include <string_view>
#include <vector>

#include "prigen/common/error.h"

namespace prigen::astpaths {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kIntLiteral,
  kFloatLiteral,
  kStringLiteral,
  kCharLiteral,
  kBoolLiteral,
  kNullLiteral,
  kOperator,  // punctuation and operators
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

// Syntax error with a source position. Subclassed for constructs outside the
// supported Java subset.
class JavaSyntaxError : public ParseError {
 public:
  JavaSyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : ParseError(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

class UnsupportedConstructError : public JavaSyntaxError {
 public:
  UnsupportedConstructError(const std::string& construct, std::size_t line, std::size_t column)
      : JavaSyntaxError("unsupported construct: " + construct, line, column), construct_(construct) {}
  const std::string& construct() const { return construct_; }

 private:
  std::string construct_;
};

bool IsJavaKeyword(std::string_view word);

// Tokenizes Java source, skipping whitespace and comments. The returned
// vector always ends with a kEnd token.
std::vector<Token> LexJava(std::string_view source);

}  // namespace prigen::astpaths
