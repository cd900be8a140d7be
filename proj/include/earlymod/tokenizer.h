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

#ifndef EARLYMOD_TOKENIZER_H_
#define EARLYMOD_TOKENIZER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "earlymod/text.h"

namespace earlymod {

enum class TokenKind { kWord, kApostropheSuffix, kPunctuation, kNumber };

std::string_view TokenKindName(TokenKind kind);
std::optional<TokenKind> ParseTokenKind(std::string_view name);

struct Token {
  std::string text;
  size_t begin = 0;  // byte offsets into the tokenized text
  size_t end = 0;
  Casing casing = Casing::kLower;
  TokenKind kind = TokenKind::kWord;

  friend bool operator==(const Token &, const Token &) = default;
};

// Splits UTF-8 text into words, numbers and punctuation. Whitespace is not
// a token; it is recoverable from the offsets.
//
//   allow'd  -> [allow] ['d]      trailing 'd 't 's (straight or U+2019)
//   'tis     -> ['tis]            leading apostrophe kept on the word
//   t'other  -> [t'other]         internal apostrophe kept
//   long-hair'd -> [long-hair] ['d]
//   don't    -> [don't]
std::vector<Token> Tokenize(std::string_view text);

// True when b starts exactly where a ends.
bool Adjacent(const Token &a, const Token &b);

}  // namespace earlymod

#endif  // EARLYMOD_TOKENIZER_H_
