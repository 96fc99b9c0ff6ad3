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

#include "prigen/permdb/api_db.h"

#include <algorithm>
#include <regex>
#include <set>
#include <tuple>

#include "json.hpp"
#include "prigen/common/error.h"
#include "prigen/common/json_lines.h"

namespace prigen::permdb {
namespace {

using nlohmann::ordered_json;

constexpr std::string_view kGroupNames[] = {"INTERNET", "NETWORK", "LOCATION", "OTHER"};

bool IsJavaClassName(std::string_view name) {
  static const std::regex kPattern(R"([A-Za-z_$][A-Za-z0-9_$]*(\.[A-Za-z_$][A-Za-z0-9_$]*)*)");
  return std::regex_match(name.begin(), name.end(), kPattern);
}

bool IsMethodName(std::string_view name) {
  if (name == "<init>" || name == "<clinit>") return true;
  static const std::regex kPattern(R"([A-Za-z_$][A-Za-z0-9_$]*)");
  return std::regex_match(name.begin(), name.end(), kPattern);
}

// Consumes one field type descriptor starting at pos.
bool ConsumeFieldType(std::string_view d, std::size_t& pos) {
  while (pos < d.size() && d[pos] == '[') ++pos;
  if (pos >= d.size()) return false;
  char c = d[pos];
  if (std::string_view("ZBSCIJFD").find(c) != std::string_view::npos) {
    ++pos;
    return true;
  }
  if (c != 'L') return false;
  std::size_t end = d.find(';', pos);
  if (end == std::string_view::npos || end == pos + 1) return false;
  pos = end + 1;
  return true;
}

// Line/column of a byte offset, for parse error messages.
std::pair<std::size_t, std::size_t> LineColumn(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string EntryName(std::size_t index, const ordered_json& item) {
  std::string name = "entry #" + std::to_string(index);
  if (item.is_object() && item.contains("class") && item["class"].is_string() &&
      item.contains("method") && item["method"].is_string()) {
    name += " (" + item["class"].get<std::string>() + "." + item["method"].get<std::string>() + ")";
  }
  return name;
}

ApiSpec FromJson(std::size_t index, const ordered_json& item) {
  const std::string where = EntryName(index, item);
  auto fail = [&](const std::string& msg) { throw ValidationError(where + ": " + msg); };
  if (!item.is_object()) fail("expected an object");

  static const std::set<std::string> kKeys = {"class",          "method",      "descriptor", "description",
                                              "sensitive_info", "permissions", "group",      "deprecated"};
  for (const auto& [key, value] : item.items()) {
    if (!kKeys.count(key)) fail("unknown key '" + key + "'");
  }
  auto require_string = [&](const char* key) -> std::string {
    if (!item.contains(key) || !item[key].is_string()) fail(std::string("'") + key + "' must be a string");
    return item[key].get<std::string>();
  };

  ApiSpec spec;
  spec.class_name = require_string("class");
  spec.method_name = require_string("method");
  spec.description = require_string("description");
  spec.sensitive_info = require_string("sensitive_info");
  if (!item.contains("descriptor")) fail("'descriptor' is required (string or null)");
  if (item["descriptor"].is_string()) {
    spec.descriptor = item["descriptor"].get<std::string>();
  } else if (!item["descriptor"].is_null()) {
    fail("'descriptor' must be a string or null");
  }
  if (!item.contains("permissions") || !item["permissions"].is_array()) fail("'permissions' must be an array");
  for (const auto& p : item["permissions"]) {
    if (!p.is_string()) fail("permissions must be strings");
    spec.permissions.push_back(p.get<std::string>());
  }
  auto group = ParseGroup(require_string("group"));
  if (!group) fail("'group' must be one of INTERNET, NETWORK, LOCATION, OTHER");
  spec.group = *group;
  if (!item.contains("deprecated") || !item["deprecated"].is_boolean()) fail("'deprecated' must be a boolean");
  spec.deprecated = item["deprecated"].get<bool>();
  return spec;
}

}  // namespace

std::string_view GroupName(PermissionGroup group) { return kGroupNames[static_cast<int>(group)]; }

std::optional<PermissionGroup> ParseGroup(std::string_view name) {
  for (int i = 0; i < 4; ++i) {
    if (kGroupNames[i] == name) return static_cast<PermissionGroup>(i);
  }
  return std::nullopt;
}

bool IsValidPermission(std::string_view permission) {
  static const std::regex kAndroid(R"(android\.permission\.[A-Z_]+)");
  static const std::regex kVendor(R"([A-Za-z_][A-Za-z0-9_]*(\.[A-Za-z_][A-Za-z0-9_]*)+)");
  if (permission.starts_with("android.permission.")) {
    return std::regex_match(permission.begin(), permission.end(), kAndroid);
  }
  return std::regex_match(permission.begin(), permission.end(), kVendor);
}

bool IsValidMethodDescriptor(std::string_view d) {
  if (d.empty() || d[0] != '(') return false;
  std::size_t pos = 1;
  while (pos < d.size() && d[pos] != ')') {
    if (!ConsumeFieldType(d, pos)) return false;
  }
  if (pos >= d.size()) return false;
  ++pos;
  if (pos < d.size() && d[pos] == 'V') return pos + 1 == d.size();
  return ConsumeFieldType(d, pos) && pos == d.size();
}

ApiDb::ApiDb(std::vector<ApiSpec> entries) : entries_(std::move(entries)) {
  std::set<std::tuple<std::string, std::string, std::string, bool>> seen;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const ApiSpec& e = entries_[i];
    const std::string where = "entry #" + std::to_string(i) + " (" + e.class_name + "." + e.method_name + ")";
    if (e.class_name.empty() || !IsJavaClassName(e.class_name)) {
      throw ValidationError(where + ": invalid class name");
    }
    if (e.method_name.empty() || !IsMethodName(e.method_name)) {
      throw ValidationError(where + ": invalid method name");
    }
    if (e.descriptor && !IsValidMethodDescriptor(*e.descriptor)) {
      throw ValidationError(where + ": invalid descriptor '" + *e.descriptor + "'");
    }
    if (e.permissions.empty()) throw ValidationError(where + ": permissions must be non-empty");
    for (const auto& p : e.permissions) {
      if (!IsValidPermission(p)) throw ValidationError(where + ": invalid permission '" + p + "'");
    }
    auto key = std::make_tuple(e.class_name, e.method_name, e.descriptor.value_or(""), e.descriptor.has_value());
    if (!seen.insert(key).second) {
      throw ValidationError(where + ": duplicate (class, method, descriptor)");
    }
    index_[Key(e.class_name, e.method_name)].push_back(i);
  }
}

std::string ApiDb::Key(std::string_view class_name, std::string_view method_name) {
  std::string key(class_name);
  key += '\0';
  key += method_name;
  return key;
}

const ApiSpec* ApiDb::Lookup(std::string_view class_name, std::string_view method_name,
                             std::string_view descriptor) const {
  auto it = index_.find(Key(class_name, method_name));
  if (it == index_.end()) return nullptr;
  const ApiSpec* wildcard = nullptr;
  for (std::size_t i : it->second) {
    const ApiSpec& e = entries_[i];
    if (!e.descriptor) {
      wildcard = &e;
    } else if (*e.descriptor == descriptor) {
      return &e;
    }
  }
  return wildcard;
}

ApiDb ParseApiDb(std::string_view json_text, std::string_view source_name) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = LineColumn(json_text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string(source_name) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": malformed JSON: " + e.what());
  }
  if (!doc.is_array()) throw ValidationError(std::string(source_name) + ": top level must be an array");
  std::vector<ApiSpec> entries;
  entries.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) entries.push_back(FromJson(i, doc[i]));
  return ApiDb(std::move(entries));
}

ApiDb LoadApiDb(const std::filesystem::path& path) { return ParseApiDb(ReadFile(path), path.string()); }

std::string SerializeApiDb(const ApiDb& db) {
  ordered_json doc = ordered_json::array();
  for (const ApiSpec& e : db.entries()) {
    ordered_json item;
    item["class"] = e.class_name;
    item["method"] = e.method_name;
    item["descriptor"] = e.descriptor ? ordered_json(*e.descriptor) : ordered_json(nullptr);
    item["description"] = e.description;
    item["sensitive_info"] = e.sensitive_info;
    item["permissions"] = e.permissions;
    item["group"] = std::string(GroupName(e.group));
    item["deprecated"] = e.deprecated;
    doc.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

}  // namespace prigen::permdb
