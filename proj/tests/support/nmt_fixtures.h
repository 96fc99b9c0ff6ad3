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
#include <vector>

#include "prigen/astpaths/path_extractor.h"
#include "prigen/corpus/dataset_format.h"
#include "prigen/nmt/model.h"
#include "prigen/nmt/vocab.h"

namespace prigen::testing {

// Dataset lines from the synthetic templated corpus.
std::vector<corpus::DatasetLine> SyntheticLines(int count, uint64_t seed,
                                                const astpaths::PathLimits& limits = astpaths::PathLimits{});

// Vocabulary from `lines` (min count 1) and parameters drawn from `hp.seed`.
nmt::Model MakeModel(const std::vector<corpus::DatasetLine>& lines, const nmt::HyperParams& hp);

std::vector<nmt::Example> EncodeAll(const std::vector<corpus::DatasetLine>& lines, const nmt::Model& model);

// Sizes at most 16, for gradient checks.
nmt::HyperParams SmallHyperParams(uint64_t seed);

}  // namespace prigen::testing
