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

#include "prigen/astpaths/path_extractor.h"
#include "prigen/common/json_lines.h"
#include "prigen/nmt/model.h"
#include "prigen/permdb/api_db.h"

namespace prigen::pipeline {

// Resolves the "apis" array of a PRCS record against the database. Throws
// ValidationError for entries the database does not know.
std::vector<permdb::ApiSpec> ResolveApis(const OrderedJson& record, const permdb::ApiDb& db);

// Copy of the PRCS record with "code_caption" and "privacy_caption" added.
// Records without a Java "source" field (or whose source cannot be parsed)
// get the placeholder caption and "no_source": true.
OrderedJson CaptionRecord(const OrderedJson& record, const nmt::Model& model, const permdb::ApiDb& db,
                          const astpaths::PathLimits& limits);

}  // namespace prigen::pipeline
