// Copyright 2026 The Earlymod Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "earlymod/text.h"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace earlymod {

std::string_view CasingName(Casing casing) {
  switch (casing) {
    case Casing::kLower: return "lower";
    case Casing::kCapitalized: return "capitalized";
    case Casing::kUpper: return "upper";
    case Casing::kMixed: return "mixed";
  }
  return "mixed";
}

Casing ParseCasing(std::string_view name) {
  if (name == "lower") return Casing::kLower;
  if (name == "capitalized") return Casing::kCapitalized;
  if (name == "upper") return Casing::kUpper;
  if (name == "mixed") return Casing::kMixed;
  throw std::invalid_argument("unknown casing: " + std::string(name));
}

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string ToUpper(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

std::string LookupKey(std::string_view s) {
  static constexpr std::string_view kCurly = "\xE2\x80\x99";
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s.substr(i, kCurly.size()) == kCurly) {
      out.push_back('\'');
      i += kCurly.size() - 1;
      continue;
    }
    char c = s[i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
  }
  return out;
}

Casing DetectCasing(std::string_view s) {
  int letters = 0, upper = 0;
  bool first_upper = false, first_seen = false;
  for (char c : s) {
    if (!IsAsciiAlpha(c)) continue;
    ++letters;
    bool is_upper = c >= 'A' && c <= 'Z';
    if (is_upper) ++upper;
    if (!first_seen) {
      first_seen = true;
      first_upper = is_upper;
    }
  }
  if (upper == 0) return Casing::kLower;
  if (upper == letters) return letters == 1 ? Casing::kCapitalized : Casing::kUpper;
  if (first_upper && upper == 1) return Casing::kCapitalized;
  return Casing::kMixed;
}

std::string ApplyCasing(std::string_view replacement, Casing source) {
  std::string out(replacement);
  switch (source) {
    case Casing::kCapitalized:
      for (char &c : out) {
        if (IsAsciiAlpha(c)) {
          if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
          break;
        }
      }
      return out;
    case Casing::kUpper:
      return ToUpper(out);
    default:
      return out;
  }
}

std::string_view Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
  return s.substr(b, e - b);
}

std::vector<std::string_view> SplitUnquoted(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  bool quoted = false;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') {
      quoted = !quoted;
    } else if (s[i] == sep && !quoted) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t b = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > b) out.emplace_back(s.substr(b, i - b));
  }
  return out;
}

std::string NormalizeSpace(std::string_view s) {
  std::string out;
  for (const std::string &w : SplitWhitespace(s)) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

bool IsVowel(char c) {
  switch (c) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
    case 'A': case 'E': case 'I': case 'O': case 'U':
      return true;
    default:
      return false;
  }
}

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

uint64_t Fnv1a64(std::string_view s) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string Fnv1a64Hex(std::string_view s) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(s)));
  return buf;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace earlymod
