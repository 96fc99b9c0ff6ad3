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

#include "prigen/apkstat/manifest.h"

#include <cctype>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "prigen/apkstat/byte_reader.h"
#include "prigen/common/error.h"

namespace prigen::apkstat {
namespace {

constexpr std::string_view kAndroidNs = "http://schemas.android.com/apk/res/android";
constexpr uint32_t kAndroidNameResId = 0x01010003;
constexpr uint32_t kNoIndex = 0xffffffff;

constexpr uint16_t kResXmlType = 0x0003;
constexpr uint16_t kStringPoolType = 0x0001;
constexpr uint16_t kResourceMapType = 0x0180;
constexpr uint16_t kStartElementType = 0x0102;
constexpr uint8_t kTypeString = 0x03;

// ---- plain XML ----------------------------------------------------------

std::string DecodeEntities(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '&') {
      out += s[i];
      continue;
    }
    std::size_t semi = s.find(';', i);
    if (semi == std::string_view::npos) {
      out += s[i];
      continue;
    }
    std::string_view ent = s.substr(i + 1, semi - i - 1);
    if (ent == "amp") out += '&';
    else if (ent == "lt") out += '<';
    else if (ent == "gt") out += '>';
    else if (ent == "quot") out += '"';
    else if (ent == "apos") out += '\'';
    else {
      out += s.substr(i, semi - i + 1);
    }
    i = semi;
  }
  return out;
}

bool IsNameChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-' ||
         c == ':' || c == '.';
}

ManifestInfo ParsePlainXml(std::string_view text) {
  ManifestInfo info;
  std::vector<std::string> android_prefixes = {"android"};
  std::size_t pos = 0;
  auto skip_past = [&](std::string_view terminator, const char* what) {
    std::size_t end = text.find(terminator, pos);
    if (end == std::string_view::npos) throw ParseError(std::string("manifest XML: unterminated ") + what);
    pos = end + terminator.size();
  };

  while ((pos = text.find('<', pos)) != std::string_view::npos) {
    if (text.substr(pos, 4) == "<!--") {
      skip_past("-->", "comment");
      continue;
    }
    if (text.substr(pos, 2) == "<?") {
      skip_past("?>", "processing instruction");
      continue;
    }
    if (text.substr(pos, 2) == "<!" || text.substr(pos, 2) == "</") {
      skip_past(">", "tag");
      continue;
    }
    ++pos;
    std::size_t name_start = pos;
    while (pos < text.size() && IsNameChar(text[pos])) ++pos;
    std::string element(text.substr(name_start, pos - name_start));
    if (element.empty()) throw ParseError("manifest XML: malformed tag at offset " + std::to_string(name_start));

    std::map<std::string, std::string> attrs;
    while (true) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos >= text.size()) throw ParseError("manifest XML: unterminated element <" + element + ">");
      if (text[pos] == '>') {
        ++pos;
        break;
      }
      if (text.substr(pos, 2) == "/>") {
        pos += 2;
        break;
      }
      std::size_t an = pos;
      while (pos < text.size() && IsNameChar(text[pos])) ++pos;
      if (an == pos) throw ParseError("manifest XML: malformed attribute in <" + element + ">");
      std::string attr(text.substr(an, pos - an));
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos >= text.size() || text[pos] != '=') throw ParseError("manifest XML: attribute without value: " + attr);
      ++pos;
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos >= text.size() || (text[pos] != '"' && text[pos] != '\'')) {
        throw ParseError("manifest XML: unquoted attribute value: " + attr);
      }
      char quote = text[pos++];
      std::size_t close = text.find(quote, pos);
      if (close == std::string_view::npos) throw ParseError("manifest XML: unterminated attribute value: " + attr);
      attrs[attr] = DecodeEntities(text.substr(pos, close - pos));
      pos = close + 1;
    }

    for (const auto& [k, v] : attrs) {
      if (k.starts_with("xmlns:") && v == kAndroidNs) android_prefixes.push_back(k.substr(6));
    }
    if (element == "manifest") {
      if (auto it = attrs.find("package"); it != attrs.end()) info.package_name = it->second;
    } else if (element == "uses-permission") {
      for (const auto& prefix : android_prefixes) {
        if (auto it = attrs.find(prefix + ":name"); it != attrs.end()) {
          info.declared_permissions.insert(it->second);
          break;
        }
      }
    }
  }
  return info;
}

// ---- binary XML ---------------------------------------------------------

void AppendUtf8(std::string& out, uint32_t cp) {
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
}

std::vector<std::string> ReadStringPool(const ByteReader& r, std::size_t chunk, uint16_t header_size,
                                        uint32_t chunk_size) {
  const char* kWhere = "axml string pool";
  if (header_size < 28) throw FormatError(kWhere, chunk, "header too small");
  const uint32_t count = r.U32(chunk + 8, kWhere);
  const uint32_t flags = r.U32(chunk + 16, kWhere);
  const uint32_t strings_start = r.U32(chunk + 20, kWhere);
  const bool utf8 = (flags & 0x100) != 0;
  const std::size_t end = chunk + chunk_size;
  r.RequireArray(chunk + header_size, count, 4, kWhere);
  if (chunk + header_size + static_cast<std::size_t>(count) * 4 > end) {
    throw FormatError(kWhere, chunk, "offset table overruns chunk");
  }

  std::vector<std::string> strings;
  strings.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    std::size_t p = chunk + strings_start + static_cast<std::size_t>(r.U32(chunk + header_size + 4 * i, kWhere));
    if (p >= end) throw FormatError(kWhere, p, "string offset outside chunk");
    std::string s;
    if (utf8) {
      uint32_t chars = r.U8(p++, kWhere);
      if (chars & 0x80) chars = ((chars & 0x7f) << 8) | r.U8(p++, kWhere);
      uint32_t bytes = r.U8(p++, kWhere);
      if (bytes & 0x80) bytes = ((bytes & 0x7f) << 8) | r.U8(p++, kWhere);
      if (p + bytes > end) throw FormatError(kWhere, p, "string overruns chunk");
      r.Require(p, bytes, kWhere);
      s.assign(reinterpret_cast<const char*>(r.data().data() + p), bytes);
    } else {
      uint32_t len = r.U16(p, kWhere);
      p += 2;
      if (len & 0x8000) {
        len = ((len & 0x7fff) << 16) | r.U16(p, kWhere);
        p += 2;
      }
      if (p + static_cast<std::size_t>(len) * 2 > end) throw FormatError(kWhere, p, "string overruns chunk");
      for (uint32_t k = 0; k < len; ++k) {
        uint32_t cu = r.U16(p + 2 * k, kWhere);
        if (cu >= 0xd800 && cu < 0xdc00 && k + 1 < len) {
          uint32_t lo = r.U16(p + 2 * (k + 1), kWhere);
          if (lo >= 0xdc00 && lo < 0xe000) {
            AppendUtf8(s, 0x10000 + ((cu - 0xd800) << 10) + (lo - 0xdc00));
            ++k;
            continue;
          }
        }
        AppendUtf8(s, cu);
      }
    }
    strings.push_back(std::move(s));
  }
  return strings;
}

ManifestInfo ParseBinaryXml(std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  const uint16_t header_size = r.U16(2, "axml header");
  const uint32_t total = r.U32(4, "axml header");
  if (header_size < 8 || total > bytes.size()) {
    throw FormatError("axml header", 0, "truncated chunk (declared size " + std::to_string(total) + ")");
  }

  ManifestInfo info;
  std::vector<std::string> strings;
  std::vector<uint32_t> resource_ids;
  auto str = [&](uint32_t idx) -> std::optional<std::string> {
    if (idx == kNoIndex || idx >= strings.size()) return std::nullopt;
    return strings[idx];
  };

  std::size_t pos = header_size;
  while (pos + 8 <= total) {
    const uint16_t type = r.U16(pos, "axml chunk");
    const uint16_t hsize = r.U16(pos + 2, "axml chunk");
    const uint32_t csize = r.U32(pos + 4, "axml chunk");
    if (hsize < 8 || csize < hsize || csize > total - pos) {
      throw FormatError("axml chunk", pos, "truncated chunk (type 0x" + std::to_string(type) + ")");
    }
    if (type == kStringPoolType) {
      strings = ReadStringPool(r, pos, hsize, csize);
    } else if (type == kResourceMapType) {
      resource_ids.clear();
      for (std::size_t p = pos + hsize; p + 4 <= pos + csize; p += 4) resource_ids.push_back(r.U32(p, "axml resource map"));
    } else if (type == kStartElementType) {
      const char* kWhere = "axml start element";
      const std::size_t ext = pos + hsize;
      if (ext + 20 > pos + csize) throw FormatError(kWhere, pos, "truncated chunk");
      const auto element = str(r.U32(ext + 4, kWhere)).value_or("");
      const uint16_t attr_start = r.U16(ext + 8, kWhere);
      const uint16_t attr_size = r.U16(ext + 10, kWhere);
      const uint16_t attr_count = r.U16(ext + 12, kWhere);
      if (attr_count > 0 && attr_size < 20) throw FormatError(kWhere, pos, "attribute record too small");
      const std::size_t first = ext + attr_start;
      if (first + static_cast<std::size_t>(attr_count) * attr_size > pos + csize) {
        throw FormatError(kWhere, pos, "truncated chunk (attributes overrun)");
      }
      for (uint16_t a = 0; a < attr_count; ++a) {
        const std::size_t ap = first + static_cast<std::size_t>(a) * attr_size;
        const uint32_t ns_idx = r.U32(ap, kWhere);
        const uint32_t name_idx = r.U32(ap + 4, kWhere);
        const uint32_t raw = r.U32(ap + 8, kWhere);
        const uint8_t data_type = r.U8(ap + 15, kWhere);
        const uint32_t data = r.U32(ap + 16, kWhere);
        std::optional<std::string> value = str(raw);
        if (!value && data_type == kTypeString) value = str(data);
        if (!value) continue;
        const auto name = str(name_idx).value_or("");
        const auto ns = str(ns_idx).value_or("");
        const bool is_android_name =
            (name == "name" && ns == kAndroidNs) ||
            (name_idx < resource_ids.size() && resource_ids[name_idx] == kAndroidNameResId);
        if (element == "manifest" && name == "package" && ns.empty()) info.package_name = *value;
        if (element == "uses-permission" && is_android_name) info.declared_permissions.insert(*value);
      }
    }
    pos += csize;
  }
  if (pos != total) throw FormatError("axml chunk", pos, "truncated chunk at end of document");
  return info;
}

}  // namespace

ManifestInfo ParseManifest(std::span<const uint8_t> bytes) {
  if (bytes.size() >= 8 && bytes[0] == (kResXmlType & 0xff) && bytes[1] == (kResXmlType >> 8)) {
    return ParseBinaryXml(bytes);
  }
  std::string_view text(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos || text[first] != '<') {
    throw ParseError("manifest: unrecognized format (neither XML text nor binary XML)");
  }
  return ParsePlainXml(text);
}

}  // namespace prigen::apkstat
