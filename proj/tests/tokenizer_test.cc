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

#include <cctype>

#include "doctest.h"
#include "test_support.h"

namespace earlymod {
namespace {

std::vector<std::string> Texts(std::string_view text) {
  std::vector<std::string> out;
  for (const Token &t : Tokenize(text)) out.push_back(t.text);
  return out;
}

using V = std::vector<std::string>;

TEST_CASE("apostrophes") {
  CHECK(Texts("allow'd") == V{"allow", "'d"});
  CHECK(Texts("'tis true") == V{"'tis", "true"});
  CHECK(Texts("t'other") == V{"t'other"});
  CHECK(Texts("long-hair'd Greeks") == V{"long-hair", "'d", "Greeks"});
  CHECK(Texts("don't") == V{"don't"});
  CHECK(Texts("linkt") == V{"linkt"});
  CHECK(Texts("dry\xE2\x80\x99" "d") == V{"dry", "\xE2\x80\x99" "d"});
  CHECK(Texts("'twas, he said") == V{"'twas", ",", "he", "said"});
  CHECK(Texts("the boys' books") == V{"the", "boys", "'", "books"});
}

TEST_CASE("kinds, offsets and casing") {
  auto t = Tokenize("Unlesse 1,200 men; ALL came.");
  REQUIRE(t.size() == 7);
  CHECK(t[0].casing == Casing::kCapitalized);
  CHECK(t[1].kind == TokenKind::kNumber);
  CHECK(t[1].text == "1,200");
  CHECK(t[3].kind == TokenKind::kPunctuation);
  CHECK(t[4].casing == Casing::kUpper);
  CHECK(t[6].text == ".");
  CHECK(t[2].begin == 14);
  CHECK(t[2].end == 17);
  CHECK(Adjacent(t[2], t[3]));
  CHECK_FALSE(Adjacent(t[3], t[4]));
  CHECK(Tokenize("allow'd")[1].kind == TokenKind::kApostropheSuffix);
}

TEST_CASE("kind names round-trip") {
  for (TokenKind k : {TokenKind::kWord, TokenKind::kApostropheSuffix, TokenKind::kPunctuation,
                      TokenKind::kNumber}) {
    CHECK(ParseTokenKind(TokenKindName(k)) == k);
  }
}

TEST_CASE("property: tokens tile the text up to whitespace") {
  testing::Gen g(41);
  const std::vector<std::string> pieces = {
      "a", "B", "word", "Tis", "'", "\xE2\x80\x99", "-", " ", "  ", "\n", "\t", ",",
      ".", "1", "2,5", "d", "t", "s", "\xC2\xAB", "\xE2\x80\x94", "'d", "x-y", ";"};
  for (int i = 0; i < 3000; ++i) {
    std::string text;
    size_t n = g.Below(12);
    for (size_t k = 0; k < n; ++k) text += g.Pick(pieces);
    auto tokens = Tokenize(text);
    CAPTURE(text);
    size_t pos = 0;
    for (const Token &t : tokens) {
      REQUIRE(t.begin >= pos);
      REQUIRE(t.end > t.begin);
      REQUIRE(t.end <= text.size());
      for (size_t k = pos; k < t.begin; ++k) {
        CHECK(std::isspace(static_cast<unsigned char>(text[k])));
      }
      CHECK(text.substr(t.begin, t.end - t.begin) == t.text);
      CHECK(t.casing == DetectCasing(t.text));
      pos = t.end;
    }
    for (size_t k = pos; k < text.size(); ++k) {
      CHECK(std::isspace(static_cast<unsigned char>(text[k])));
    }
  }
}

}  // namespace
}  // namespace earlymod
