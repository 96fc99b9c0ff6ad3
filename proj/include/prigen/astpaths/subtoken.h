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

#include <string>
#include <string_view>
#include <vector>

namespace prigen::astpaths {

// Splits an identifier on camelCase, digit boundaries and any
// non-alphanumeric separator. Subtokens are lowercased.
std::vector<std::string> Subtokenize(std::string_view text);

// Subtokenize with a fallback of {"empty"} when nothing remains.
std::vector<std::string> TerminalSubtokens(std::string_view lexeme);

// Lines with at least one character of code outside comments.
int CountLinesOfCode(std::string_view source);

}  // namespace prigen::astpaths
