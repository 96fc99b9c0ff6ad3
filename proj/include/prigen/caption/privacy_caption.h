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

#include <span>
#include <string>
#include <vector>

#include "prigen/permdb/api_db.h"

namespace prigen::caption {

inline constexpr const char* kNoCaptionLeadIn = "No code caption is available.";

struct PrivacyCaption {
  std::string code_caption;  // sentence-cased, ends with a period
  std::vector<std::string> api_sentences;
  std::string full_text;
};

// "Sends a network request." from {sends, a, network, request}; the
// placeholder lead-in when tokens is empty.
std::string RenderCodeCaption(const std::vector<std::string>& tokens);

std::string ApiSentence(const permdb::ApiSpec& api);

// One sentence per distinct (class, method), ordered by group, class and
// method. Throws ArgumentError when apis is empty.
PrivacyCaption Assemble(const std::vector<std::string>& caption_tokens, std::span<const permdb::ApiSpec> apis);

}  // namespace prigen::caption
