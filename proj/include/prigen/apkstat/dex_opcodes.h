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
#include <string_view>

namespace prigen::apkstat {

// Instruction formats from the Dalvik bytecode format reference. The digit
// pair encodes (code units, register count) as in the reference tables.
enum class InsnFormat : uint8_t {
  k10x, k12x, k11n, k11x, k10t, k20t, k22x, k21t, k21s, k21h, k21c, k23x, k22b,
  k22t, k22s, k22c, k30t, k32x, k31i, k31t, k31c, k35c, k3rc, k45cc, k4rcc, k51l,
  kUnused,
};

enum class IndexKind : uint8_t { kNone, kString, kType, kField, kMethod, kCallSite, kMethodHandle, kProto };

struct OpcodeInfo {
  std::string_view name;
  InsnFormat format;
  IndexKind index;
};

const OpcodeInfo& GetOpcodeInfo(uint8_t opcode);

// Width in 16-bit code units; 0 for unused opcodes.
int FormatUnits(InsnFormat format);

enum class InvokeKind : uint8_t { kNone, kVirtual, kSuper, kDirect, kStatic, kInterface, kPolymorphic, kCustom };

InvokeKind GetInvokeKind(uint8_t opcode);
bool IsRangeInvoke(uint8_t opcode);

}  // namespace prigen::apkstat
