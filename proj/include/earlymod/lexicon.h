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

// Priority-layered dictionaries.
//
// Dictionary files hold one entry per line:
//
//   surface,POS(+ITEM)*
//   surface,lemma,POS(+ITEM)*
//   surface,<p1,l1,POS+...+Part1+EN=x> <p2,l2,POS+...+Part2+EN=y>(+ITEM)*
//
// An ITEM is a feature (`PR`, `Nb=s`, `Hum`) or a transcription attribute:
// FLX (paradigm), EN (contemporary lemma), REPLACE, NOTE, PREINSERT (alias
// PRE), POSTINSERT, PREFIX, UNAMB. Attribute values may be double-quoted.
// Lines starting with '#' are comments.
//
// Each file becomes one layer. A token is looked up in the highest-priority
// layer that contains it; lower layers are hidden for that token.

#ifndef EARLYMOD_LEXICON_H_
#define EARLYMOD_LEXICON_H_

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "earlymod/features.h"
#include "earlymod/inflection.h"

namespace earlymod {

class LexiconError : public std::runtime_error {
 public:
  LexiconError(std::string source, size_t line, const std::string &message);

  const std::string &source() const { return source_; }
  size_t line() const { return line_; }

 private:
  std::string source_;
  size_t line_;
};

// Transcription attributes of an entry.
struct Recipe {
  std::optional<std::string> en;
  std::optional<std::string> replace;
  std::optional<std::string> note;
  std::optional<std::string> preinsert;
  std::optional<std::string> postinsert;
  std::optional<std::string> prefix;

  bool empty() const {
    return !en && !replace && !note && !preinsert && !postinsert && !prefix;
  }
  friend bool operator==(const Recipe &, const Recipe &) = default;
};

// One component of a contraction ('tis = it + is).
struct Part {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::kN;
  FeatureSet features;
  std::optional<std::string> en;

  friend bool operator==(const Part &, const Part &) = default;
};

struct LexEntry {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::kN;
  FeatureSet features;
  std::optional<std::string> flx;
  Recipe recipe;
  std::vector<Part> parts;
  bool unamb = false;
  int priority = 0;

  friend bool operator==(const LexEntry &, const LexEntry &) = default;
};

// Throws LexiconError when the entry violates an attribute invariant.
void ValidateEntry(const LexEntry &entry, std::string_view source, size_t line);

// Parses one dictionary line. Returns nullopt for blank and comment lines.
// Throws LexiconError (unknown POS, duplicate attribute, unbalanced quotes).
std::optional<LexEntry> ParseEntry(std::string_view line, size_t line_no = 0,
                                   std::string_view source = "<input>");

std::string FormatEntry(const LexEntry &entry);

// One reading of a token or token span.
struct Analysis {
  std::string surface;  // as it appeared in the text
  std::string lemma;
  Pos pos = Pos::kN;
  FeatureSet features;
  std::string paradigm;
  Recipe recipe;
  std::vector<Part> parts;
  bool unamb = false;
  // Layer priority for dictionary hits, -1/-2/-3 for variant groups.
  int level = 0;
  // Layer name or variant rule id.
  std::string source;
  // For variant readings: the dictionary form that verified the rule.
  std::string stem;

  friend bool operator==(const Analysis &, const Analysis &) = default;
};

struct DictionarySource {
  std::string name;
  int priority = 0;
  std::string text;
  std::string path;  // informational
};

DictionarySource LoadDictionary(const std::string &path, int priority);

struct MultiwordMatch {
  size_t length = 0;  // tokens
  std::vector<Analysis> analyses;
};

class LexiconSet {
 public:
  struct Layer {
    int priority = 0;
    std::string name;
    std::vector<LexEntry> entries;
    std::unordered_map<std::string, std::vector<Analysis>> index;
    size_t expanded_forms = 0;
  };

  struct MultiwordEntry {
    std::vector<std::string> tokens;  // lookup keys
    Analysis analysis;
  };

  // A dictionary-side base for re-inflection.
  struct GenForm {
    std::string form;
    FeatureSet features;
    std::string paradigm;  // FLX of the entry, empty for full-form entries
    bool full_form = false;
    bool has_recipe = false;
  };

  LexiconSet() = default;

  // Throws LexiconError on parse errors, unknown paradigms and duplicate
  // layer priorities.
  static LexiconSet Compile(const std::vector<DictionarySource> &sources,
                            std::shared_ptr<const ParadigmTable> paradigms);

  // All analyses from the single highest layer containing `token`. Matching
  // is case-insensitive; each analysis records the token as given.
  std::vector<Analysis> Lookup(std::string_view token) const;

  // Priority of the layer that answers `token`, if any.
  std::optional<int> LookupLevel(std::string_view token) const;

  bool Contains(std::string_view token) const { return LookupLevel(token).has_value(); }

  // Multiword entries starting at `tokens[0]`, longest first.
  std::vector<MultiwordMatch> MatchMultiword(
      const std::vector<std::string> &tokens) const;

  // Contemporary surface for `lemma` with the inflection of `features`.
  // Tries full-form entries, the lemma's own paradigm, then `fallback`.
  std::optional<std::string> Generate(std::string_view lemma, Pos pos,
                                      const FeatureSet &features,
                                      std::string_view fallback_paradigm = {}) const;

  // Paradigm FLX recorded for (lemma, pos), preferring plain entries.
  std::optional<std::string> ParadigmOf(std::string_view lemma, Pos pos) const;

  const std::vector<Layer> &layers() const { return layers_; }
  const ParadigmTable &paradigms() const { return *paradigms_; }
  size_t multiword_count() const;

 private:
  static std::string GenKey(std::string_view lemma, Pos pos);

  std::vector<Layer> layers_;  // descending priority
  std::unordered_map<std::string, std::vector<MultiwordEntry>> multiword_;
  std::unordered_map<std::string, std::vector<GenForm>> generation_;
  std::shared_ptr<const ParadigmTable> paradigms_ =
      std::make_shared<const ParadigmTable>();
};

}  // namespace earlymod

#endif  // EARLYMOD_LEXICON_H_
