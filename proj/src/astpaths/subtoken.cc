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

#include "prigen/astpaths/subtoken.h"

#include <cctype>

namespace prigen::astpaths {
namespace {

enum class CharClass { kSeparator, kLower, kUpper, kDigit };

CharClass Classify(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  if (u >= 0x80) return CharClass::kLower;
  if (std::islower(u)) return CharClass::kLower;
  if (std::isupper(u)) return CharClass::kUpper;
  if (std::isdigit(u)) return CharClass::kDigit;
  return CharClass::kSeparator;
}

}  // namespace

std::vector<std::string> Subtokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    CharClass c = Classify(text[i]);
    if (c == CharClass::kSeparator) {
      flush();
      continue;
    }
    if (!cur.empty()) {
      CharClass prev = Classify(text[i - 1]);
      bool boundary = false;
      if ((prev == CharClass::kDigit) != (c == CharClass::kDigit)) boundary = true;
      if (prev == CharClass::kLower && c == CharClass::kUpper) boundary = true;
      // "HTTPClient": split before the last capital of an acronym.
      if (prev == CharClass::kUpper && c == CharClass::kUpper && i + 1 < text.size() &&
          Classify(text[i + 1]) == CharClass::kLower) {
        boundary = true;
      }
      if (boundary) flush();
    }
    cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
  }
  flush();
  return out;
}

std::vector<std::string> TerminalSubtokens(std::string_view lexeme) {
  auto subs = Subtokenize(lexeme);
  if (subs.empty()) subs.push_back("empty");
  return subs;
}

int CountLinesOfCode(std::string_view src) {
  enum class State { kCode, kBlockComment, kString, kChar };
  State state = State::kCode;
  int count = 0;
  bool has_code = false;
  for (std::size_t i = 0; i < src.size(); ++i) {
    char c = src[i];
    if (c == '\n') {
      if (has_code) ++count;
      has_code = false;
      if (state == State::kString || state == State::kChar) state = State::kCode;
      continue;
    }
    switch (state) {
      case State::kBlockComment:
        if (c == '*' && i + 1 < src.size() && src[i + 1] == '/') {
          state = State::kCode;
          ++i;
        }
        break;
      case State::kString:
      case State::kChar:
        has_code = true;
        if (c == '\\') {
          ++i;
        } else if ((state == State::kString && c == '"') || (state == State::kChar && c == '\'')) {
          state = State::kCode;
        }
        break;
      case State::kCode:
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
          while (i + 1 < src.size() && src[i + 1] != '\n') ++i;
        } else if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
          state = State::kBlockComment;
          ++i;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
          has_code = true;
          if (c == '"') state = State::kString;
          if (c == '\'') state = State::kChar;
        }
        break;
    }
  }
  if (has_code) ++count;
  return count;
}

}  // namespace prigen::astpaths
