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

#include "prigen/nmt/model.h"

namespace prigen::nmt {

inline constexpr std::uint32_t kCheckpointVersion = 1;

// Little-endian binary: magic "PRIGENM\0", version, hyperparameters, the
// three vocabularies, then every tensor as (name, rows, cols, row-major f64).
std::string SerializeModel(const Model& model);
// Throws ParseError on truncation or bad magic/version and ValidationError
// when tensor names or shapes disagree with the stored configuration.
Model DeserializeModel(const std::string& bytes);

void SaveModel(const Model& model, const std::filesystem::path& path);
Model LoadModel(const std::filesystem::path& path);

}  // namespace prigen::nmt
