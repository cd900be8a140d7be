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

// Small string helpers shared by the dictionary readers and the pipeline.

#ifndef EARLYMOD_TEXT_H_
#define EARLYMOD_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace earlymod {

enum class Casing { kLower, kCapitalized, kUpper, kMixed };

std::string_view CasingName(Casing casing);
Casing ParseCasing(std::string_view name);

// ASCII case folding. Bytes >= 0x80 pass through unchanged.
std::string ToLower(std::string_view s);
std::string ToUpper(std::string_view s);

// Folds case and maps the typographic apostrophe (U+2019) to '\''.
std::string LookupKey(std::string_view s);

Casing DetectCasing(std::string_view s);

// Re-applies the casing of a source token to a replacement. Lower and mixed
// sources leave the replacement untouched.
std::string ApplyCasing(std::string_view replacement, Casing source);

std::string_view Trim(std::string_view s);

// Splits on `sep` outside double-quoted regions.
std::vector<std::string_view> SplitUnquoted(std::string_view s, char sep);

// Splits on runs of ASCII whitespace.
std::vector<std::string> SplitWhitespace(std::string_view s);

// Collapses whitespace runs to single spaces and trims.
std::string NormalizeSpace(std::string_view s);

bool IsVowel(char c);
bool IsAsciiAlpha(char c);

// 64-bit FNV-1a, used to fingerprint source documents.
uint64_t Fnv1a64(std::string_view s);
std::string Fnv1a64Hex(std::string_view s);

std::string ReadFile(const std::string &path);

}  // namespace earlymod

#endif  // EARLYMOD_TEXT_H_
