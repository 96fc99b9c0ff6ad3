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

#include "prigen/astpaths/java_lexer.h"

#include <array>
#include <cctype>

namespace prigen::astpaths {
namespace {

constexpr std::array<std::string_view, 50> kKeywords = {
    "abstract", "assert",     "boolean",  "break",     "byte",      "case",      "catch",   "char",
    "class",    "const",      "continue", "default",   "do",        "double",    "else",    "enum",
    "extends",  "final",      "finally",  "float",     "for",       "goto",      "if",      "implements",
    "import",   "instanceof", "int",      "interface", "long",      "native",    "new",     "package",
    "private",  "protected",  "public",   "return",    "short",     "static",    "strictfp", "super",
    "switch",   "synchronized", "this",   "throw",     "throws",    "transient", "try",     "void",
    "volatile", "while"};

// Longest first for maximal munch.
constexpr std::array<std::string_view, 49> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=",
    "-=",   "*=",  "/=",  "%=",  "&=",  "|=", "^=", "<<", ">>", "(",  ")",  "{",  "}",  "[",  "]",  ";",
    ",",    ".",   "=",   "<",   ">",   "!",  "~",  "?",  ":",  "+",  "-",  "*",  "/",  "&",  "|",  "^", "%"};

bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$' || (c & 0x80); }
bool IsIdentPart(char c) { return IsIdentStart(c) || std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

bool IsJavaKeyword(std::string_view word) {
  for (auto k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

std::vector<Token> LexJava(std::string_view src) {
  std::vector<Token> tokens;
  std::size_t i = 0, line = 1, line_start = 0;
  auto col = [&](std::size_t pos) { return pos - line_start + 1; };
  auto newline = [&](std::size_t pos) {
    ++line;
    line_start = pos + 1;
  };

  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      newline(i);
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (src.substr(i, 2) == "//") {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (src.substr(i, 2) == "/*") {
      const std::size_t start_line = line, start_col = col(i);
      i += 2;
      while (i < src.size() && src.substr(i, 2) != "*/") {
        if (src[i] == '\n') newline(i);
        ++i;
      }
      if (i >= src.size()) throw JavaSyntaxError("unterminated block comment", start_line, start_col);
      i += 2;
      continue;
    }

    Token tok;
    tok.line = line;
    tok.column = col(i);
    const std::size_t start = i;

    if (IsIdentStart(c)) {
      while (i < src.size() && IsIdentPart(src[i])) ++i;
      tok.text = std::string(src.substr(start, i - start));
      if (tok.text == "true" || tok.text == "false") {
        tok.kind = TokenKind::kBoolLiteral;
      } else if (tok.text == "null") {
        tok.kind = TokenKind::kNullLiteral;
      } else {
        tok.kind = IsJavaKeyword(tok.text) ? TokenKind::kKeyword : TokenKind::kIdentifier;
      }
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '.' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      const bool hex = src.substr(i, 2) == "0x" || src.substr(i, 2) == "0X";
      bool is_float = false;
      if (hex) i += 2;
      while (i < src.size()) {
        char d = src[i];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
          if (!hex && (d == 'e' || d == 'E')) {
            is_float = true;
            if (i + 1 < src.size() && (src[i + 1] == '+' || src[i + 1] == '-')) ++i;
          }
          if (!hex && (d == 'f' || d == 'F' || d == 'd' || d == 'D')) is_float = true;
          ++i;
        } else if (d == '.' && !hex) {
          if (i + 1 < src.size() && std::isalpha(static_cast<unsigned char>(src[i + 1])) &&
              src[i + 1] != 'e' && src[i + 1] != 'E' && src[i + 1] != 'f' && src[i + 1] != 'F' &&
              src[i + 1] != 'd' && src[i + 1] != 'D') {
            break;  // "1.foo" is not a number continuation
          }
          is_float = true;
          ++i;
        } else {
          break;
        }
      }
      tok.text = std::string(src.substr(start, i - start));
      tok.kind = is_float ? TokenKind::kFloatLiteral : TokenKind::kIntLiteral;
    } else if (c == '"' || c == '\'') {
      if (src.substr(i, 3) == "\"\"\"") throw UnsupportedConstructError("text block", tok.line, tok.column);
      const char quote = c;
      ++i;
      while (i < src.size() && src[i] != quote) {
        if (src[i] == '\n') throw JavaSyntaxError("unterminated literal", tok.line, tok.column);
        if (src[i] == '\\') ++i;
        ++i;
      }
      if (i >= src.size()) throw JavaSyntaxError("unterminated literal", tok.line, tok.column);
      ++i;
      tok.text = std::string(src.substr(start, i - start));
      tok.kind = quote == '"' ? TokenKind::kStringLiteral : TokenKind::kCharLiteral;
    } else if (c == '@') {
      throw UnsupportedConstructError("annotation", tok.line, tok.column);
    } else {
      bool matched = false;
      for (auto op : kOperators) {
        if (src.substr(i, op.size()) == op) {
          tok.text = std::string(op);
          i += op.size();
          matched = true;
          break;
        }
      }
      if (!matched) {
        throw JavaSyntaxError(std::string("unexpected character '") + c + "'", tok.line, tok.column);
      }
      tok.kind = TokenKind::kOperator;
    }
    tokens.push_back(std::move(tok));
  }
  Token end;
  end.kind = TokenKind::kEnd;
  end.line = line;
  end.column = col(i);
  tokens.push_back(end);
  return tokens;
}

}  // namespace prigen::astpaths
