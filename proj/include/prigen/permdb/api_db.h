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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace prigen::permdb {

enum class PermissionGroup { kInternet, kNetwork, kLocation, kOther };

std::string_view GroupName(PermissionGroup group);
std::optional<PermissionGroup> ParseGroup(std::string_view name);

// One permission-requiring Android API.
struct ApiSpec {
  std::string class_name;  // dotted, e.g. android.location.LocationManager
  std::string method_name;
  // Dalvik method descriptor. Absent means "any overload".
  std::optional<std::string> descriptor;
  std::string description;
  std::string sensitive_info;
  // Any one of these satisfies the API.
  std::vector<std::string> permissions;
  PermissionGroup group = PermissionGroup::kOther;
  bool deprecated = false;

  friend bool operator==(const ApiSpec&, const ApiSpec&) = default;
};

bool IsValidPermission(std::string_view permission);
bool IsValidMethodDescriptor(std::string_view descriptor);

// Immutable after construction; safe to share across threads.
class ApiDb {
 public:
  ApiDb() = default;
  // Validates every entry and throws ValidationError on the first violation.
  explicit ApiDb(std::vector<ApiSpec> entries);

  const std::vector<ApiSpec>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Exact descriptor match wins over a wildcard entry for the same method.
  const ApiSpec* Lookup(std::string_view class_name, std::string_view method_name,
                        std::string_view descriptor) const;

 private:
  static std::string Key(std::string_view class_name, std::string_view method_name);

  std::vector<ApiSpec> entries_;
  std::unordered_map<std::string, std::vector<std::size_t>> index_;
};

ApiDb ParseApiDb(std::string_view json_text, std::string_view source_name = "<memory>");
ApiDb LoadApiDb(const std::filesystem::path& path);
std::string SerializeApiDb(const ApiDb& db);

}  // namespace prigen::permdb
