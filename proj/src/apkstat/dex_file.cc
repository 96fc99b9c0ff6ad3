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

#include "prigen/apkstat/dex_file.h"

#include <cinttypes>
#include <cstdio>
#include <unordered_map>

#include "prigen/apkstat/byte_reader.h"
#include "prigen/common/error.h"

namespace prigen::apkstat {
namespace {

constexpr std::size_t kHeaderSize = 0x70;
constexpr uint32_t kEndianConstant = 0x12345678;
constexpr uint32_t kNoIndex = 0xffffffff;

// Decodes MUTF-8 (modified UTF-8 with surrogate pairs) into standard UTF-8.
std::string DecodeMutf8(const ByteReader& r, std::size_t off) {
  std::string out;
  std::vector<uint32_t> units;
  while (true) {
    uint8_t a = r.U8(off, "string_data_item");
    if (a == 0) break;
    uint32_t unit;
    if (a < 0x80) {
      unit = a;
      off += 1;
    } else if ((a & 0xe0) == 0xc0) {
      uint8_t b = r.U8(off + 1, "string_data_item");
      if ((b & 0xc0) != 0x80) throw FormatError("string_data_item", off, "bad MUTF-8 continuation byte");
      unit = ((a & 0x1f) << 6) | (b & 0x3f);
      off += 2;
    } else if ((a & 0xf0) == 0xe0) {
      uint8_t b = r.U8(off + 1, "string_data_item");
      uint8_t c = r.U8(off + 2, "string_data_item");
      if ((b & 0xc0) != 0x80 || (c & 0xc0) != 0x80) {
        throw FormatError("string_data_item", off, "bad MUTF-8 continuation byte");
      }
      unit = ((a & 0x0f) << 12) | ((b & 0x3f) << 6) | (c & 0x3f);
      off += 3;
    } else {
      throw FormatError("string_data_item", off, "bad MUTF-8 lead byte");
    }
    units.push_back(unit);
  }
  auto put = [&out](uint32_t cp) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xc0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3f));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xe0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
      out += static_cast<char>(0x80 | (cp & 0x3f));
    } else {
      out += static_cast<char>(0xf0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3f));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
      out += static_cast<char>(0x80 | (cp & 0x3f));
    }
  };
  for (std::size_t i = 0; i < units.size(); ++i) {
    uint32_t u = units[i];
    if (u >= 0xd800 && u < 0xdc00 && i + 1 < units.size() && units[i + 1] >= 0xdc00 && units[i + 1] < 0xe000) {
      put(0x10000 + ((u - 0xd800) << 10) + (units[i + 1] - 0xdc00));
      ++i;
    } else {
      put(u);
    }
  }
  return out;
}

std::string Hex(uint64_t v, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%0*" PRIx64, width, v);
  return buf;
}

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          out += "\\u00" + Hex(c, 2);
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out + "\"";
}

}  // namespace

std::string DescriptorToDotted(const std::string& d) {
  std::size_t dims = 0;
  while (dims < d.size() && d[dims] == '[') ++dims;
  std::string base = d.substr(dims);
  std::string out;
  if (base.size() == 1) {
    switch (base[0]) {
      case 'V': out = "void"; break;
      case 'Z': out = "boolean"; break;
      case 'B': out = "byte"; break;
      case 'S': out = "short"; break;
      case 'C': out = "char"; break;
      case 'I': out = "int"; break;
      case 'J': out = "long"; break;
      case 'F': out = "float"; break;
      case 'D': out = "double"; break;
      default: return d;
    }
  } else if (base.size() >= 3 && base.front() == 'L' && base.back() == ';') {
    out = base.substr(1, base.size() - 2);
    for (char& c : out) {
      if (c == '/') c = '.';
    }
  } else {
    return d;
  }
  for (std::size_t i = 0; i < dims; ++i) out += "[]";
  return out;
}

DexFile::DexFile(std::span<const uint8_t> bytes) : bytes_(bytes) {
  ParseHeader();
  ParseStrings();
  ParseTypes();
  ParseProtos();
  ParseFields();
  ParseMethods();
  ParseClassDefs();
  bytes_ = {};
}

void DexFile::ParseHeader() {
  ByteReader r(bytes_);
  if (bytes_.size() < 8) throw FormatError("header", 0, "file too small for DEX magic");
  static const uint8_t kMagic[4] = {'d', 'e', 'x', '\n'};
  for (int i = 0; i < 4; ++i) {
    if (bytes_[i] != kMagic[i]) throw FormatError("header", 0, "bad DEX magic");
  }
  if (bytes_[4] != '0' || bytes_[5] != '3' || bytes_[6] < '5' || bytes_[6] > '9' || bytes_[7] != 0) {
    throw FormatError("header", 4, "unsupported DEX version");
  }
  version_.assign(reinterpret_cast<const char*>(bytes_.data() + 4), 3);
  r.Require(0, kHeaderSize, "header");

  const uint32_t header_size = r.U32(0x24, "header");
  if (header_size != kHeaderSize) throw FormatError("header", 0x24, "unexpected header_size " + std::to_string(header_size));
  const uint32_t endian = r.U32(0x28, "header");
  if (endian != kEndianConstant) throw FormatError("header", 0x28, "unsupported endian tag");

  auto section = [&](std::size_t off) { return Section{r.U32(off, "header"), r.U32(off + 4, "header")}; };
  string_section_ = section(0x38);
  type_section_ = section(0x40);
  proto_section_ = section(0x48);
  field_section_ = section(0x50);
  method_section_ = section(0x58);
  class_section_ = section(0x60);
  if (type_section_.size > 65536) throw FormatError("header", 0x40, "type_ids_size exceeds 65536");
  if (proto_section_.size > 65536) throw FormatError("header", 0x48, "proto_ids_size exceeds 65536");
}

void DexFile::ParseStrings() {
  ByteReader r(bytes_);
  r.RequireArray(string_section_.offset, string_section_.size, 4, "string_ids");
  strings_.reserve(string_section_.size);
  for (uint32_t i = 0; i < string_section_.size; ++i) {
    std::size_t data_off = r.U32(string_section_.offset + 4 * i, "string_ids");
    r.Uleb128(data_off, "string_data_item");  // utf16_size; decoding is driven by the terminator
    strings_.push_back(DecodeMutf8(r, data_off));
  }
}

void DexFile::ParseTypes() {
  ByteReader r(bytes_);
  r.RequireArray(type_section_.offset, type_section_.size, 4, "type_ids");
  type_ids_.reserve(type_section_.size);
  for (uint32_t i = 0; i < type_section_.size; ++i) {
    uint32_t idx = r.U32(type_section_.offset + 4 * i, "type_ids");
    if (idx >= strings_.size()) throw FormatError("type_ids", type_section_.offset + 4 * i, "string index out of range");
    type_ids_.push_back(idx);
  }
}

void DexFile::ParseProtos() {
  ByteReader r(bytes_);
  r.RequireArray(proto_section_.offset, proto_section_.size, 12, "proto_ids");
  proto_ids_.reserve(proto_section_.size);
  for (uint32_t i = 0; i < proto_section_.size; ++i) {
    const std::size_t off = proto_section_.offset + 12 * static_cast<std::size_t>(i);
    ProtoId p;
    p.shorty_idx = r.U32(off, "proto_ids");
    p.return_type_idx = r.U32(off + 4, "proto_ids");
    const uint32_t params_off = r.U32(off + 8, "proto_ids");
    if (p.shorty_idx >= strings_.size()) throw FormatError("proto_ids", off, "shorty index out of range");
    if (p.return_type_idx >= type_ids_.size()) throw FormatError("proto_ids", off + 4, "return type out of range");
    if (params_off != 0) {
      const uint32_t n = r.U32(params_off, "type_list");
      r.RequireArray(params_off + 4, n, 2, "type_list");
      for (uint32_t k = 0; k < n; ++k) {
        uint16_t t = r.U16(params_off + 4 + 2 * k, "type_list");
        if (t >= type_ids_.size()) throw FormatError("type_list", params_off + 4 + 2 * k, "type index out of range");
        p.parameters.push_back(t);
      }
    }
    proto_ids_.push_back(std::move(p));
  }
}

void DexFile::ParseFields() {
  ByteReader r(bytes_);
  r.RequireArray(field_section_.offset, field_section_.size, 8, "field_ids");
  field_ids_.reserve(field_section_.size);
  for (uint32_t i = 0; i < field_section_.size; ++i) {
    const std::size_t off = field_section_.offset + 8 * static_cast<std::size_t>(i);
    FieldRef f{r.U16(off, "field_ids"), r.U16(off + 2, "field_ids"), r.U32(off + 4, "field_ids")};
    if (f.class_idx >= type_ids_.size() || f.type_idx >= type_ids_.size() || f.name_idx >= strings_.size()) {
      throw FormatError("field_ids", off, "index out of range");
    }
    field_ids_.push_back(f);
  }
}

void DexFile::ParseMethods() {
  ByteReader r(bytes_);
  r.RequireArray(method_section_.offset, method_section_.size, 8, "method_ids");
  method_ids_.reserve(method_section_.size);
  for (uint32_t i = 0; i < method_section_.size; ++i) {
    const std::size_t off = method_section_.offset + 8 * static_cast<std::size_t>(i);
    MethodRef m{r.U16(off, "method_ids"), r.U16(off + 2, "method_ids"), r.U32(off + 4, "method_ids")};
    if (m.class_idx >= type_ids_.size() || m.proto_idx >= proto_ids_.size() || m.name_idx >= strings_.size()) {
      throw FormatError("method_ids", off, "index out of range");
    }
    method_ids_.push_back(m);
  }
}

void DexFile::ParseClassDefs() {
  ByteReader r(bytes_);
  r.RequireArray(class_section_.offset, class_section_.size, 32, "class_defs");
  class_defs_.reserve(class_section_.size);
  for (uint32_t i = 0; i < class_section_.size; ++i) {
    const std::size_t off = class_section_.offset + 32 * static_cast<std::size_t>(i);
    ClassDef def;
    def.class_idx = r.U32(off, "class_defs");
    def.access_flags = r.U32(off + 4, "class_defs");
    def.superclass_idx = r.U32(off + 8, "class_defs");
    const uint32_t class_data_off = r.U32(off + 24, "class_defs");
    if (def.class_idx >= type_ids_.size()) throw FormatError("class_defs", off, "class index out of range");
    if (def.superclass_idx != kNoIndex && def.superclass_idx >= type_ids_.size()) {
      throw FormatError("class_defs", off + 8, "superclass index out of range");
    }
    if (class_data_off != 0) ParseClassData(def, class_data_off);
    class_defs_.push_back(std::move(def));
  }
}

void DexFile::ParseClassData(ClassDef& def, uint32_t class_data_off) {
  ByteReader r(bytes_);
  std::size_t p = class_data_off;
  const uint32_t static_fields = r.Uleb128(p, "class_data_item");
  const uint32_t instance_fields = r.Uleb128(p, "class_data_item");
  const uint32_t direct = r.Uleb128(p, "class_data_item");
  const uint32_t virt = r.Uleb128(p, "class_data_item");
  // Each encoded field takes at least 2 bytes and each method at least 3.
  const std::size_t remaining = bytes_.size() - std::min(p, bytes_.size());
  if (static_cast<uint64_t>(static_fields) + instance_fields > remaining / 2 ||
      static_cast<uint64_t>(direct) + virt > remaining / 3) {
    throw FormatError("class_data_item", class_data_off, "member counts exceed file size");
  }
  for (uint64_t k = 0; k < static_cast<uint64_t>(static_fields) + instance_fields; ++k) {
    r.Uleb128(p, "encoded_field");
    r.Uleb128(p, "encoded_field");
  }
  auto read_methods = [&](uint32_t count, std::vector<EncodedMethod>& out) {
    uint64_t method_idx = 0;
    out.reserve(count);
    for (uint32_t k = 0; k < count; ++k) {
      const std::size_t at = p;
      method_idx += r.Uleb128(p, "encoded_method");
      EncodedMethod m;
      m.access_flags = r.Uleb128(p, "encoded_method");
      const uint32_t code_off = r.Uleb128(p, "encoded_method");
      if (method_idx >= method_ids_.size()) throw FormatError("encoded_method", at, "method index out of range");
      m.method_idx = static_cast<uint32_t>(method_idx);
      if (code_off != 0) m.code = ParseCodeItem(code_off);
      out.push_back(m);
    }
  };
  read_methods(direct, def.direct_methods);
  read_methods(virt, def.virtual_methods);
}

std::size_t DexFile::ParseCodeItem(uint32_t offset) {
  ByteReader r(bytes_);
  CodeItem c;
  c.offset = offset;
  r.Require(offset, 16, "code_item");
  c.registers_size = r.U16(offset, "code_item");
  c.ins_size = r.U16(offset + 2, "code_item");
  c.outs_size = r.U16(offset + 4, "code_item");
  c.tries_size = r.U16(offset + 6, "code_item");
  c.insns_size = r.U32(offset + 12, "code_item");
  if (c.insns_size == 0) throw FormatError("code_item", offset, "empty instruction stream");
  r.RequireArray(offset + 16, c.insns_size, 2, "code_item insns");
  c.insns = DecodeInstructions(offset + 16, c.insns_size);
  code_items_.push_back(std::move(c));
  return code_items_.size() - 1;
}

std::vector<Instruction> DexFile::DecodeInstructions(std::size_t base, uint32_t insns_size) const {
  ByteReader r(bytes_);
  std::vector<Instruction> out;
  uint32_t pc = 0;
  auto unit = [&](uint32_t i) -> uint16_t { return r.U16(base + 2 * static_cast<std::size_t>(i), "code_item insns"); };

  while (pc < insns_size) {
    const std::size_t where = base + 2 * static_cast<std::size_t>(pc);
    Instruction insn;
    insn.offset = pc;
    const uint16_t u0 = unit(pc);
    insn.opcode = static_cast<uint8_t>(u0 & 0xff);
    const uint32_t left = insns_size - pc;

    if (insn.opcode == 0x00 && (u0 >> 8) != 0) {
      uint64_t width;
      if (u0 == 0x0100 || u0 == 0x0200) {
        if (left < 2) throw FormatError("code_item insns", where, "instruction stream overrun in switch payload");
        const uint32_t size = unit(pc + 1);
        insn.payload = u0 == 0x0100 ? PayloadKind::kPackedSwitch : PayloadKind::kSparseSwitch;
        insn.payload_entries = size;
        width = u0 == 0x0100 ? 4 + 2ull * size : 2 + 4ull * size;
      } else if (u0 == 0x0300) {
        if (left < 4) throw FormatError("code_item insns", where, "instruction stream overrun in array payload");
        const uint32_t elem = unit(pc + 1);
        const uint32_t count = unit(pc + 2) | (static_cast<uint32_t>(unit(pc + 3)) << 16);
        insn.payload = PayloadKind::kFillArrayData;
        insn.payload_entries = count;
        width = 4 + (static_cast<uint64_t>(elem) * count + 1) / 2;
      } else {
        throw FormatError("code_item insns", where, "unknown pseudo-instruction 0x" + Hex(u0, 4));
      }
      if (width > left) throw FormatError("code_item insns", where, "instruction stream overrun in payload");
      insn.units = static_cast<uint32_t>(width);
      out.push_back(insn);
      pc += insn.units;
      continue;
    }

    const OpcodeInfo& info = GetOpcodeInfo(insn.opcode);
    const int units = FormatUnits(info.format);
    if (units == 0) throw FormatError("code_item insns", where, "unused opcode 0x" + Hex(insn.opcode, 2));
    if (static_cast<uint32_t>(units) > left) {
      throw FormatError("code_item insns", where, "instruction stream overrun (" + std::string(info.name) + ")");
    }
    insn.units = units;
    uint16_t u[5] = {u0, 0, 0, 0, 0};
    for (int k = 1; k < units; ++k) u[k] = unit(pc + k);
    const uint32_t a_nib = (u0 >> 8) & 0xf, b_nib = u0 >> 12, aa = u0 >> 8;

    switch (info.format) {
      case InsnFormat::k10x:
        break;
      case InsnFormat::k12x:
        insn.va = a_nib;
        insn.vb = b_nib;
        break;
      case InsnFormat::k11n:
        insn.va = a_nib;
        insn.literal = static_cast<int8_t>(static_cast<uint8_t>(b_nib << 4)) >> 4;
        break;
      case InsnFormat::k11x:
        insn.va = aa;
        break;
      case InsnFormat::k10t:
        insn.branch = static_cast<int8_t>(aa);
        break;
      case InsnFormat::k20t:
        insn.branch = static_cast<int16_t>(u[1]);
        break;
      case InsnFormat::k22x:
        insn.va = aa;
        insn.vb = u[1];
        break;
      case InsnFormat::k21t:
        insn.va = aa;
        insn.branch = static_cast<int16_t>(u[1]);
        break;
      case InsnFormat::k21s:
        insn.va = aa;
        insn.literal = static_cast<int16_t>(u[1]);
        break;
      case InsnFormat::k21h:
        insn.va = aa;
        insn.literal = insn.opcode == 0x15 ? static_cast<int64_t>(static_cast<int32_t>(static_cast<uint32_t>(u[1]) << 16))
                                           : static_cast<int64_t>(static_cast<uint64_t>(u[1]) << 48);
        break;
      case InsnFormat::k21c:
        insn.va = aa;
        insn.index = u[1];
        break;
      case InsnFormat::k23x:
        insn.va = aa;
        insn.vb = u[1] & 0xff;
        insn.vc = u[1] >> 8;
        break;
      case InsnFormat::k22b:
        insn.va = aa;
        insn.vb = u[1] & 0xff;
        insn.literal = static_cast<int8_t>(u[1] >> 8);
        break;
      case InsnFormat::k22t:
        insn.va = a_nib;
        insn.vb = b_nib;
        insn.branch = static_cast<int16_t>(u[1]);
        break;
      case InsnFormat::k22s:
        insn.va = a_nib;
        insn.vb = b_nib;
        insn.literal = static_cast<int16_t>(u[1]);
        break;
      case InsnFormat::k22c:
        insn.va = a_nib;
        insn.vb = b_nib;
        insn.index = u[1];
        break;
      case InsnFormat::k30t:
        insn.branch = static_cast<int32_t>(u[1] | (static_cast<uint32_t>(u[2]) << 16));
        break;
      case InsnFormat::k32x:
        insn.va = u[1];
        insn.vb = u[2];
        break;
      case InsnFormat::k31i:
        insn.va = aa;
        insn.literal = static_cast<int32_t>(u[1] | (static_cast<uint32_t>(u[2]) << 16));
        break;
      case InsnFormat::k31t:
        insn.va = aa;
        insn.branch = static_cast<int32_t>(u[1] | (static_cast<uint32_t>(u[2]) << 16));
        break;
      case InsnFormat::k31c:
        insn.va = aa;
        insn.index = u[1] | (static_cast<uint32_t>(u[2]) << 16);
        break;
      case InsnFormat::k35c:
      case InsnFormat::k45cc: {
        insn.arg_count = static_cast<uint8_t>(b_nib);
        if (insn.arg_count > 5) throw FormatError("code_item insns", where, "register list longer than 5");
        insn.index = u[1];
        const uint8_t regs[5] = {static_cast<uint8_t>(u[2] & 0xf), static_cast<uint8_t>((u[2] >> 4) & 0xf),
                                 static_cast<uint8_t>((u[2] >> 8) & 0xf), static_cast<uint8_t>(u[2] >> 12),
                                 static_cast<uint8_t>(a_nib)};
        for (int k = 0; k < insn.arg_count; ++k) insn.args[k] = regs[k];
        if (info.format == InsnFormat::k45cc) insn.index2 = u[3];
        break;
      }
      case InsnFormat::k3rc:
      case InsnFormat::k4rcc:
        insn.arg_count = static_cast<uint8_t>(aa);
        insn.index = u[1];
        insn.vc = u[2];
        if (info.format == InsnFormat::k4rcc) insn.index2 = u[3];
        break;
      case InsnFormat::k51l: {
        uint64_t v = 0;
        for (int k = 4; k >= 1; --k) v = (v << 16) | u[k];
        insn.va = aa;
        insn.literal = static_cast<int64_t>(v);
        break;
      }
      case InsnFormat::kUnused:
        break;
    }
    ValidateIndex(insn, where);
    out.push_back(insn);
    pc += insn.units;
  }
  return out;
}

void DexFile::ValidateIndex(const Instruction& insn, std::size_t where) const {
  const OpcodeInfo& info = insn.info();
  std::size_t limit = SIZE_MAX;
  switch (info.index) {
    case IndexKind::kString: limit = strings_.size(); break;
    case IndexKind::kType: limit = type_ids_.size(); break;
    case IndexKind::kField: limit = field_ids_.size(); break;
    case IndexKind::kMethod: limit = method_ids_.size(); break;
    case IndexKind::kProto: limit = proto_ids_.size(); break;
    default: break;
  }
  if (insn.index >= limit) {
    throw FormatError("code_item insns", where,
                      std::string(info.name) + " reference index " + std::to_string(insn.index) + " out of range");
  }
  if ((info.format == InsnFormat::k45cc || info.format == InsnFormat::k4rcc) && insn.index2 >= proto_ids_.size()) {
    throw FormatError("code_item insns", where, "proto index out of range");
  }
}

const std::string& DexFile::TypeDescriptor(uint32_t type_idx) const { return strings_.at(type_ids_.at(type_idx)); }

std::string DexFile::ProtoDescriptor(uint32_t proto_idx) const {
  const ProtoId& p = proto_ids_.at(proto_idx);
  std::string d = "(";
  for (uint16_t t : p.parameters) d += TypeDescriptor(t);
  d += ")";
  d += TypeDescriptor(p.return_type_idx);
  return d;
}

MethodId DexFile::ResolveMethod(uint32_t method_idx) const {
  const MethodRef& m = method_ids_.at(method_idx);
  return MethodId{DescriptorToDotted(TypeDescriptor(m.class_idx)), strings_.at(m.name_idx), ProtoDescriptor(m.proto_idx)};
}

std::string DexFile::FieldName(uint32_t field_idx) const {
  const FieldRef& f = field_ids_.at(field_idx);
  return DescriptorToDotted(TypeDescriptor(f.class_idx)) + "." + strings_.at(f.name_idx) + ":" +
         TypeDescriptor(f.type_idx);
}

std::string DexFile::RenderInstruction(const Instruction& insn) const {
  switch (insn.payload) {
    case PayloadKind::kPackedSwitch:
      return "packed-switch-payload (" + std::to_string(insn.payload_entries) + " entries)";
    case PayloadKind::kSparseSwitch:
      return "sparse-switch-payload (" + std::to_string(insn.payload_entries) + " entries)";
    case PayloadKind::kFillArrayData:
      return "fill-array-data-payload (" + std::to_string(insn.payload_entries) + " elements)";
    case PayloadKind::kNone:
      break;
  }
  const OpcodeInfo& info = insn.info();
  auto v = [](uint32_t reg) { return "v" + std::to_string(reg); };
  auto target = [&] { return Hex(static_cast<uint32_t>(static_cast<int64_t>(insn.offset) + insn.branch), 4); };
  auto lit = [&] { return "#" + std::to_string(insn.literal); };
  auto ref = [&]() -> std::string {
    switch (info.index) {
      case IndexKind::kString: return Quote(strings_[insn.index]);
      case IndexKind::kType: return DescriptorToDotted(TypeDescriptor(insn.index));
      case IndexKind::kField: return FieldName(insn.index);
      case IndexKind::kMethod: return ResolveMethod(insn.index).ToString();
      case IndexKind::kProto: return ProtoDescriptor(insn.index);
      case IndexKind::kCallSite: return "call_site@" + std::to_string(insn.index);
      case IndexKind::kMethodHandle: return "method_handle@" + std::to_string(insn.index);
      case IndexKind::kNone: return "";
    }
    return "";
  };
  auto reg_list = [&]() {
    std::string s = "{";
    for (int k = 0; k < insn.arg_count; ++k) s += (k ? ", " : "") + v(insn.args[k]);
    return s + "}";
  };
  auto reg_range = [&]() {
    if (insn.arg_count == 0) return std::string("{}");
    return "{" + v(insn.vc) + " .. " + v(insn.vc + insn.arg_count - 1) + "}";
  };

  std::string ops;
  switch (info.format) {
    case InsnFormat::k10x: break;
    case InsnFormat::k12x: case InsnFormat::k22x: case InsnFormat::k32x: ops = v(insn.va) + ", " + v(insn.vb); break;
    case InsnFormat::k11n: case InsnFormat::k21s: case InsnFormat::k21h: case InsnFormat::k31i: case InsnFormat::k51l:
      ops = v(insn.va) + ", " + lit();
      break;
    case InsnFormat::k11x: ops = v(insn.va); break;
    case InsnFormat::k10t: case InsnFormat::k20t: case InsnFormat::k30t: ops = target(); break;
    case InsnFormat::k21t: case InsnFormat::k31t: ops = v(insn.va) + ", " + target(); break;
    case InsnFormat::k21c: case InsnFormat::k31c: ops = v(insn.va) + ", " + ref(); break;
    case InsnFormat::k23x: ops = v(insn.va) + ", " + v(insn.vb) + ", " + v(insn.vc); break;
    case InsnFormat::k22b: case InsnFormat::k22s: ops = v(insn.va) + ", " + v(insn.vb) + ", " + lit(); break;
    case InsnFormat::k22t: ops = v(insn.va) + ", " + v(insn.vb) + ", " + target(); break;
    case InsnFormat::k22c: ops = v(insn.va) + ", " + v(insn.vb) + ", " + ref(); break;
    case InsnFormat::k35c: ops = reg_list() + ", " + ref(); break;
    case InsnFormat::k3rc: ops = reg_range() + ", " + ref(); break;
    case InsnFormat::k45cc: ops = reg_list() + ", " + ref() + ", " + ProtoDescriptor(insn.index2); break;
    case InsnFormat::k4rcc: ops = reg_range() + ", " + ref() + ", " + ProtoDescriptor(insn.index2); break;
    case InsnFormat::kUnused: break;
  }
  std::string out(info.name);
  if (!ops.empty()) out += " " + ops;
  return out;
}

}  // namespace prigen::apkstat
