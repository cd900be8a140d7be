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

#include "earlymod/tokenizer.h"

#include <algorithm>
#include <cctype>

namespace earlymod {
namespace {

constexpr std::string_view kKindNames[] = {"word", "apostrophe-suffix", "punctuation",
                                           "number"};

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

size_t Utf8Length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;
}

// Length of the apostrophe at `i` (1 for ', 3 for U+2019), or 0.
size_t ApostropheAt(std::string_view s, size_t i) {
  if (i < s.size() && s[i] == '\'') return 1;
  if (s.substr(i, 3) == "\xE2\x80\x99") return 3;
  return 0;
}

// Length of the letter at `i`, or 0. Non-ASCII characters count as letters
// except the U+2000 block (quotes, dashes, spaces).
size_t LetterAt(std::string_view s, size_t i) {
  if (i >= s.size()) return 0;
  unsigned char c = s[i];
  if (IsAsciiAlpha(c)) return 1;
  if (c < 0x80) return 0;
  size_t n = Utf8Length(c);
  if (i + n > s.size()) return 0;
  if (c == 0xE2 && n == 3 && static_cast<unsigned char>(s[i + 1]) == 0x80) return 0;
  if (c == 0xC2) return 0;  // Latin-1 punctuation and NBSP
  return n;
}

size_t ScanLetters(std::string_view s, size_t i) {
  while (size_t n = LetterAt(s, i)) i += n;
  return i;
}

}  // namespace

std::string_view TokenKindName(TokenKind kind) { return kKindNames[static_cast<int>(kind)]; }

std::optional<TokenKind> ParseTokenKind(std::string_view name) {
  for (size_t i = 0; i < std::size(kKindNames); ++i) {
    if (kKindNames[i] == name) return static_cast<TokenKind>(i);
  }
  return std::nullopt;
}

std::vector<Token> Tokenize(std::string_view s) {
  std::vector<Token> out;
  auto emit = [&](size_t b, size_t e, TokenKind kind) {
    Token t;
    t.text = std::string(s.substr(b, e - b));
    t.begin = b;
    t.end = e;
    t.kind = kind;
    t.casing = DetectCasing(t.text);
    out.push_back(std::move(t));
  };

  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    if (IsSpace(c)) {
      ++i;
      continue;
    }
    if (IsDigit(c)) {
      size_t e = i;
      while (e < s.size() && (IsDigit(s[e]) || ((s[e] == '.' || s[e] == ',') &&
                                                e + 1 < s.size() && IsDigit(s[e + 1])))) {
        ++e;
      }
      emit(i, e, TokenKind::kNumber);
      i = e;
      continue;
    }

    size_t b = i;
    bool at_boundary = out.empty() || out.back().end < i ||
                       out.back().kind == TokenKind::kPunctuation;
    if (size_t ap = ApostropheAt(s, i); ap && at_boundary && LetterAt(s, i + ap)) {
      // Leading apostrophe word: 'tis, 'twas.
      i += ap;
    }
    if (!LetterAt(s, i)) {
      size_t n = Utf8Length(c);
      emit(b, std::min(s.size(), b + n), TokenKind::kPunctuation);
      i = b + n;
      continue;
    }

    size_t e = ScanLetters(s, i);
    while (e < s.size()) {
      // Hyphenated words.
      if (s[e] == '-' && LetterAt(s, e + 1)) {
        e = ScanLetters(s, e + 1);
        continue;
      }
      size_t ap = ApostropheAt(s, e);
      if (ap == 0 || !LetterAt(s, e + ap)) break;
      size_t after = ScanLetters(s, e + ap);
      char suffix = static_cast<char>(std::tolower(static_cast<unsigned char>(s[e + ap])));
      bool single = after == e + ap + 1;
      bool nt = suffix == 't' && single && e > 0 && (s[e - 1] == 'n' || s[e - 1] == 'N');
      if (single && (suffix == 'd' || suffix == 't' || suffix == 's') && !nt) {
        emit(b, e, TokenKind::kWord);
        emit(e, after, TokenKind::kApostropheSuffix);
        b = after;
        e = after;
        break;
      }
      e = after;
    }
    if (e > b) emit(b, e, TokenKind::kWord);
    i = e;
  }
  return out;
}

bool Adjacent(const Token &a, const Token &b) { return a.end == b.begin; }

}  // namespace earlymod
