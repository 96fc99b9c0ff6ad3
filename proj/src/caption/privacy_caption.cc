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

#include "prigen/caption/privacy_caption.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>

#include "prigen/common/error.h"

namespace prigen::caption {
namespace {

std::string WithPeriod(std::string s) {
  if (s.empty() || s.back() != '.') s.push_back('.');
  return s;
}

auto SortKey(const permdb::ApiSpec& a) {
  return std::tie(a.group, a.class_name, a.method_name, a.descriptor, a.description, a.sensitive_info);
}

}  // namespace

std::string RenderCodeCaption(const std::vector<std::string>& tokens) {
  std::string text;
  for (const auto& t : tokens) {
    if (t.empty()) continue;
    if (!text.empty()) text.push_back(' ');
    text += t;
  }
  if (text.empty()) return kNoCaptionLeadIn;
  text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  return WithPeriod(std::move(text));
}

std::string ApiSentence(const permdb::ApiSpec& api) {
  return WithPeriod("This code accesses " + api.sensitive_info + " via " + api.class_name + "." + api.method_name +
                    ": " + api.description);
}

PrivacyCaption Assemble(const std::vector<std::string>& caption_tokens, std::span<const permdb::ApiSpec> apis) {
  if (apis.empty()) throw ArgumentError("a privacy caption needs at least one API");
  std::vector<const permdb::ApiSpec*> sorted;
  for (const auto& a : apis) sorted.push_back(&a);
  std::sort(sorted.begin(), sorted.end(), [](auto* x, auto* y) { return SortKey(*x) < SortKey(*y); });

  PrivacyCaption out;
  out.code_caption = RenderCodeCaption(caption_tokens);
  out.full_text = out.code_caption;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto* a : sorted) {
    if (!seen.emplace(a->class_name, a->method_name).second) continue;
    out.api_sentences.push_back(ApiSentence(*a));
    out.full_text += " " + out.api_sentences.back();
  }
  return out;
}

}  // namespace prigen::caption
