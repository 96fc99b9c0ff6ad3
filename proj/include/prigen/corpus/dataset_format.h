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

#include "prigen/astpaths/path_extractor.h"

namespace prigen::corpus {

// One training line: "target ctx ctx ...", where target subtokens and the
// subtokens or path nodes inside a context field are joined by '|' and a
// context is "left,path,right". An empty target is written as "_".
struct DatasetLine {
  std::vector<std::string> target;
  std::vector<astpaths::ContextTokens> contexts;
  bool operator==(const DatasetLine&) const = default;
};

// A single "left,path,right" field.
std::string FormatContext(const astpaths::ContextTokens& context);
astpaths::ContextTokens ParseContext(std::string_view field);

std::string FormatDatasetLine(const DatasetLine& line);

// Throws ParseError on malformed input.
DatasetLine ParseDatasetLine(std::string_view text);

}  // namespace prigen::corpus
