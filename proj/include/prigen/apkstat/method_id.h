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

#include <compare>
#include <string>

namespace prigen::apkstat {

// Application-wide method identity. class_name is the dotted Java form,
// descriptor the full Dalvik method descriptor, e.g. "(I)Ljava/lang/String;".
struct MethodId {
  std::string class_name;
  std::string method_name;
  std::string descriptor;

  auto operator<=>(const MethodId&) const = default;
  bool operator==(const MethodId&) const = default;

  std::string ToString() const { return class_name + "." + method_name + ":" + descriptor; }
};

}  // namespace prigen::apkstat
