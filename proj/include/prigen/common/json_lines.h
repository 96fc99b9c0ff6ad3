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
#include <string>
#include <vector>

#include "json.hpp"

namespace prigen {

using OrderedJson = nlohmann::ordered_json;

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, const std::string& contents);

// One JSON object per non-empty line. Errors name the line number.
std::vector<OrderedJson> ReadJsonLines(const std::filesystem::path& path);
void WriteJsonLines(const std::filesystem::path& path, const std::vector<OrderedJson>& records);

std::vector<std::string> ReadLines(const std::filesystem::path& path);

}  // namespace prigen
