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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prigen/apkstat/dex_opcodes.h"
#include "prigen/apkstat/method_id.h"

namespace prigen::apkstat {

enum class PayloadKind : uint8_t { kNone, kPackedSwitch, kSparseSwitch, kFillArrayData };

// One decoded instruction. Which operand fields are meaningful depends on
// the opcode's format.
struct Instruction {
  uint32_t offset = 0;  // in code units from the start of insns
  uint32_t units = 0;
  uint8_t opcode = 0;
  PayloadKind payload = PayloadKind::kNone;
  uint32_t payload_entries = 0;

  uint32_t va = 0, vb = 0, vc = 0;
  int64_t literal = 0;
  int32_t branch = 0;
  uint32_t index = 0;
  uint32_t index2 = 0;  // proto index for invoke-polymorphic
  std::array<uint8_t, 5> args{};
  uint8_t arg_count = 0;  // 35c/45cc register list length; 3rc/4rcc range length

  const OpcodeInfo& info() const { return GetOpcodeInfo(opcode); }
};

struct CodeItem {
  uint32_t offset = 0;
  uint16_t registers_size = 0;
  uint16_t ins_size = 0;
  uint16_t outs_size = 0;
  uint16_t tries_size = 0;
  uint32_t insns_size = 0;
  std::vector<Instruction> insns;
};

struct ProtoId {
  uint32_t shorty_idx = 0;
  uint32_t return_type_idx = 0;
  std::vector<uint16_t> parameters;
};

struct FieldRef {
  uint16_t class_idx = 0;
  uint16_t type_idx = 0;
  uint32_t name_idx = 0;
};

struct MethodRef {
  uint16_t class_idx = 0;
  uint16_t proto_idx = 0;
  uint32_t name_idx = 0;
};

struct EncodedMethod {
  uint32_t method_idx = 0;
  uint32_t access_flags = 0;
  // Index into DexFile::code_items(), absent for abstract/native methods.
  std::optional<std::size_t> code;
};

struct ClassDef {
  uint32_t class_idx = 0;
  uint32_t access_flags = 0;
  uint32_t superclass_idx = 0;
  std::vector<EncodedMethod> direct_methods;
  std::vector<EncodedMethod> virtual_methods;
};

// Dalvik type descriptor to Java source form: "Ljava/lang/String;" becomes
// "java.lang.String", "[I" becomes "int[]". Malformed input is returned as is.
std::string DescriptorToDotted(const std::string& descriptor);

// Parsed DEX file. Construction validates every structure it reads and
// throws FormatError naming the structure and offset on the first defect;
// no read ever leaves the input buffer.
class DexFile {
 public:
  explicit DexFile(std::span<const uint8_t> bytes);

  const std::string& version() const { return version_; }
  const std::vector<std::string>& strings() const { return strings_; }
  const std::vector<uint32_t>& type_ids() const { return type_ids_; }
  const std::vector<ProtoId>& proto_ids() const { return proto_ids_; }
  const std::vector<FieldRef>& field_ids() const { return field_ids_; }
  const std::vector<MethodRef>& method_ids() const { return method_ids_; }
  const std::vector<ClassDef>& class_defs() const { return class_defs_; }
  const std::vector<CodeItem>& code_items() const { return code_items_; }

  const std::string& TypeDescriptor(uint32_t type_idx) const;
  std::string ProtoDescriptor(uint32_t proto_idx) const;
  MethodId ResolveMethod(uint32_t method_idx) const;
  std::string FieldName(uint32_t field_idx) const;

  // Human-readable rendering of one instruction's operands, with symbolic
  // names for string/type/field/method references.
  std::string RenderInstruction(const Instruction& insn) const;

 private:
  void ParseHeader();
  void ParseStrings();
  void ParseTypes();
  void ParseProtos();
  void ParseFields();
  void ParseMethods();
  void ParseClassDefs();
  void ParseClassData(ClassDef& def, uint32_t class_data_off);
  std::size_t ParseCodeItem(uint32_t offset);
  std::vector<Instruction> DecodeInstructions(std::size_t insns_off, uint32_t insns_size) const;
  void ValidateIndex(const Instruction& insn, std::size_t where) const;

  std::span<const uint8_t> bytes_;
  std::string version_;
  struct Section {
    uint32_t size = 0;
    uint32_t offset = 0;
  };
  Section string_section_, type_section_, proto_section_, field_section_, method_section_, class_section_;

  std::vector<std::string> strings_;
  std::vector<uint32_t> type_ids_;
  std::vector<ProtoId> proto_ids_;
  std::vector<FieldRef> field_ids_;
  std::vector<MethodRef> method_ids_;
  std::vector<ClassDef> class_defs_;
  std::vector<CodeItem> code_items_;
};

}  // namespace prigen::apkstat
