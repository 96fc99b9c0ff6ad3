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

#include "prigen/apkstat/dex_opcodes.h"

#include <array>

namespace prigen::apkstat {
namespace {

using F = InsnFormat;
using I = IndexKind;

constexpr OpcodeInfo kUnusedOp{"unused", F::kUnused, I::kNone};

constexpr std::array<OpcodeInfo, 256> BuildTable() {
  std::array<OpcodeInfo, 256> t{};
  for (auto& e : t) e = kUnusedOp;

  t[0x00] = {"nop", F::k10x, I::kNone};
  t[0x01] = {"move", F::k12x, I::kNone};
  t[0x02] = {"move/from16", F::k22x, I::kNone};
  t[0x03] = {"move/16", F::k32x, I::kNone};
  t[0x04] = {"move-wide", F::k12x, I::kNone};
  t[0x05] = {"move-wide/from16", F::k22x, I::kNone};
  t[0x06] = {"move-wide/16", F::k32x, I::kNone};
  t[0x07] = {"move-object", F::k12x, I::kNone};
  t[0x08] = {"move-object/from16", F::k22x, I::kNone};
  t[0x09] = {"move-object/16", F::k32x, I::kNone};
  t[0x0a] = {"move-result", F::k11x, I::kNone};
  t[0x0b] = {"move-result-wide", F::k11x, I::kNone};
  t[0x0c] = {"move-result-object", F::k11x, I::kNone};
  t[0x0d] = {"move-exception", F::k11x, I::kNone};
  t[0x0e] = {"return-void", F::k10x, I::kNone};
  t[0x0f] = {"return", F::k11x, I::kNone};
  t[0x10] = {"return-wide", F::k11x, I::kNone};
  t[0x11] = {"return-object", F::k11x, I::kNone};
  t[0x12] = {"const/4", F::k11n, I::kNone};
  t[0x13] = {"const/16", F::k21s, I::kNone};
  t[0x14] = {"const", F::k31i, I::kNone};
  t[0x15] = {"const/high16", F::k21h, I::kNone};
  t[0x16] = {"const-wide/16", F::k21s, I::kNone};
  t[0x17] = {"const-wide/32", F::k31i, I::kNone};
  t[0x18] = {"const-wide", F::k51l, I::kNone};
  t[0x19] = {"const-wide/high16", F::k21h, I::kNone};
  t[0x1a] = {"const-string", F::k21c, I::kString};
  t[0x1b] = {"const-string/jumbo", F::k31c, I::kString};
  t[0x1c] = {"const-class", F::k21c, I::kType};
  t[0x1d] = {"monitor-enter", F::k11x, I::kNone};
  t[0x1e] = {"monitor-exit", F::k11x, I::kNone};
  t[0x1f] = {"check-cast", F::k21c, I::kType};
  t[0x20] = {"instance-of", F::k22c, I::kType};
  t[0x21] = {"array-length", F::k12x, I::kNone};
  t[0x22] = {"new-instance", F::k21c, I::kType};
  t[0x23] = {"new-array", F::k22c, I::kType};
  t[0x24] = {"filled-new-array", F::k35c, I::kType};
  t[0x25] = {"filled-new-array/range", F::k3rc, I::kType};
  t[0x26] = {"fill-array-data", F::k31t, I::kNone};
  t[0x27] = {"throw", F::k11x, I::kNone};
  t[0x28] = {"goto", F::k10t, I::kNone};
  t[0x29] = {"goto/16", F::k20t, I::kNone};
  t[0x2a] = {"goto/32", F::k30t, I::kNone};
  t[0x2b] = {"packed-switch", F::k31t, I::kNone};
  t[0x2c] = {"sparse-switch", F::k31t, I::kNone};

  constexpr std::string_view kCmp[] = {"cmpl-float", "cmpg-float", "cmpl-double", "cmpg-double", "cmp-long"};
  for (int i = 0; i < 5; ++i) t[0x2d + i] = {kCmp[i], F::k23x, I::kNone};
  constexpr std::string_view kIf[] = {"if-eq", "if-ne", "if-lt", "if-ge", "if-gt", "if-le"};
  for (int i = 0; i < 6; ++i) t[0x32 + i] = {kIf[i], F::k22t, I::kNone};
  constexpr std::string_view kIfz[] = {"if-eqz", "if-nez", "if-ltz", "if-gez", "if-gtz", "if-lez"};
  for (int i = 0; i < 6; ++i) t[0x38 + i] = {kIfz[i], F::k21t, I::kNone};

  constexpr std::string_view kArray[] = {"aget",         "aget-wide",   "aget-object", "aget-boolean", "aget-byte",
                                         "aget-char",    "aget-short",  "aput",        "aput-wide",    "aput-object",
                                         "aput-boolean", "aput-byte",   "aput-char",   "aput-short"};
  for (int i = 0; i < 14; ++i) t[0x44 + i] = {kArray[i], F::k23x, I::kNone};
  constexpr std::string_view kInstance[] = {"iget",         "iget-wide", "iget-object", "iget-boolean", "iget-byte",
                                            "iget-char",    "iget-short", "iput",       "iput-wide",    "iput-object",
                                            "iput-boolean", "iput-byte",  "iput-char",  "iput-short"};
  for (int i = 0; i < 14; ++i) t[0x52 + i] = {kInstance[i], F::k22c, I::kField};
  constexpr std::string_view kStatic[] = {"sget",         "sget-wide", "sget-object", "sget-boolean", "sget-byte",
                                          "sget-char",    "sget-short", "sput",       "sput-wide",    "sput-object",
                                          "sput-boolean", "sput-byte",  "sput-char",  "sput-short"};
  for (int i = 0; i < 14; ++i) t[0x60 + i] = {kStatic[i], F::k21c, I::kField};

  constexpr std::string_view kInvoke[] = {"invoke-virtual", "invoke-super", "invoke-direct", "invoke-static",
                                          "invoke-interface"};
  constexpr std::string_view kInvokeRange[] = {"invoke-virtual/range", "invoke-super/range", "invoke-direct/range",
                                               "invoke-static/range", "invoke-interface/range"};
  for (int i = 0; i < 5; ++i) {
    t[0x6e + i] = {kInvoke[i], F::k35c, I::kMethod};
    t[0x74 + i] = {kInvokeRange[i], F::k3rc, I::kMethod};
  }

  constexpr std::string_view kUnop[] = {
      "neg-int",      "not-int",       "neg-long",     "not-long",      "neg-float",   "neg-double",   "int-to-long",
      "int-to-float", "int-to-double", "long-to-int",  "long-to-float", "long-to-double", "float-to-int",
      "float-to-long", "float-to-double", "double-to-int", "double-to-long", "double-to-float", "int-to-byte",
      "int-to-char",  "int-to-short"};
  for (int i = 0; i < 21; ++i) t[0x7b + i] = {kUnop[i], F::k12x, I::kNone};

  constexpr std::string_view kBinop[] = {
      "add-int",    "sub-int",    "mul-int",    "div-int",    "rem-int",     "and-int",     "or-int",
      "xor-int",    "shl-int",    "shr-int",    "ushr-int",   "add-long",    "sub-long",    "mul-long",
      "div-long",   "rem-long",   "and-long",   "or-long",    "xor-long",    "shl-long",    "shr-long",
      "ushr-long",  "add-float",  "sub-float",  "mul-float",  "div-float",   "rem-float",   "add-double",
      "sub-double", "mul-double", "div-double", "rem-double"};
  constexpr std::string_view kBinop2addr[] = {
      "add-int/2addr",    "sub-int/2addr",    "mul-int/2addr",    "div-int/2addr",    "rem-int/2addr",
      "and-int/2addr",    "or-int/2addr",     "xor-int/2addr",    "shl-int/2addr",    "shr-int/2addr",
      "ushr-int/2addr",   "add-long/2addr",   "sub-long/2addr",   "mul-long/2addr",   "div-long/2addr",
      "rem-long/2addr",   "and-long/2addr",   "or-long/2addr",    "xor-long/2addr",   "shl-long/2addr",
      "shr-long/2addr",   "ushr-long/2addr",  "add-float/2addr",  "sub-float/2addr",  "mul-float/2addr",
      "div-float/2addr",  "rem-float/2addr",  "add-double/2addr", "sub-double/2addr", "mul-double/2addr",
      "div-double/2addr", "rem-double/2addr"};
  for (int i = 0; i < 32; ++i) {
    t[0x90 + i] = {kBinop[i], F::k23x, I::kNone};
    t[0xb0 + i] = {kBinop2addr[i], F::k12x, I::kNone};
  }
  constexpr std::string_view kLit16[] = {"add-int/lit16", "rsub-int",      "mul-int/lit16", "div-int/lit16",
                                         "rem-int/lit16", "and-int/lit16", "or-int/lit16",  "xor-int/lit16"};
  for (int i = 0; i < 8; ++i) t[0xd0 + i] = {kLit16[i], F::k22s, I::kNone};
  constexpr std::string_view kLit8[] = {"add-int/lit8", "rsub-int/lit8", "mul-int/lit8", "div-int/lit8",
                                        "rem-int/lit8", "and-int/lit8",  "or-int/lit8",  "xor-int/lit8",
                                        "shl-int/lit8", "shr-int/lit8",  "ushr-int/lit8"};
  for (int i = 0; i < 11; ++i) t[0xd8 + i] = {kLit8[i], F::k22b, I::kNone};

  t[0xfa] = {"invoke-polymorphic", F::k45cc, I::kMethod};
  t[0xfb] = {"invoke-polymorphic/range", F::k4rcc, I::kMethod};
  t[0xfc] = {"invoke-custom", F::k35c, I::kCallSite};
  t[0xfd] = {"invoke-custom/range", F::k3rc, I::kCallSite};
  t[0xfe] = {"const-method-handle", F::k21c, I::kMethodHandle};
  t[0xff] = {"const-method-type", F::k21c, I::kProto};
  return t;
}

constexpr std::array<OpcodeInfo, 256> kOpcodes = BuildTable();

}  // namespace

const OpcodeInfo& GetOpcodeInfo(uint8_t opcode) { return kOpcodes[opcode]; }

int FormatUnits(InsnFormat format) {
  switch (format) {
    case F::k10x: case F::k12x: case F::k11n: case F::k11x: case F::k10t:
      return 1;
    case F::k20t: case F::k22x: case F::k21t: case F::k21s: case F::k21h: case F::k21c:
    case F::k23x: case F::k22b: case F::k22t: case F::k22s: case F::k22c:
      return 2;
    case F::k30t: case F::k32x: case F::k31i: case F::k31t: case F::k31c: case F::k35c: case F::k3rc:
      return 3;
    case F::k45cc: case F::k4rcc:
      return 4;
    case F::k51l:
      return 5;
    case F::kUnused:
      return 0;
  }
  return 0;
}

InvokeKind GetInvokeKind(uint8_t op) {
  if (op >= 0x6e && op <= 0x72) return static_cast<InvokeKind>(1 + op - 0x6e);
  if (op >= 0x74 && op <= 0x78) return static_cast<InvokeKind>(1 + op - 0x74);
  if (op == 0xfa || op == 0xfb) return InvokeKind::kPolymorphic;
  if (op == 0xfc || op == 0xfd) return InvokeKind::kCustom;
  return InvokeKind::kNone;
}

bool IsRangeInvoke(uint8_t op) { return (op >= 0x74 && op <= 0x78) || op == 0xfb || op == 0xfd; }

}  // namespace prigen::apkstat
