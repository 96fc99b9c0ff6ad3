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

#include <cstdint>
#include <set>
#include <span>
#include <string>

namespace prigen::apkstat {

struct ManifestInfo {
  std::string package_name;
  std::set<std::string> declared_permissions;

  friend bool operator==(const ManifestInfo&, const ManifestInfo&) = default;
};

// Accepts plain-text XML or Android binary XML (AXML). Only the manifest
// package attribute and <uses-permission android:name> values are read.
ManifestInfo ParseManifest(std::span<const uint8_t> bytes);

}  // namespace prigen::apkstat
