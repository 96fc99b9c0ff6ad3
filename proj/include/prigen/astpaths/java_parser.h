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

#include <string_view>

#include "prigen/astpaths/java_ast.h"
#include "prigen/astpaths/java_lexer.h"

namespace prigen::astpaths {

// Parses a single method declaration from the supported Java subset.
// Throws JavaSyntaxError, or UnsupportedConstructError naming the construct.
Ast ParseJavaMethod(std::string_view source);

}  // namespace prigen::astpaths
