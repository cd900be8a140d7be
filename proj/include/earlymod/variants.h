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

// Single-token morphological recognition for words no dictionary knows.
//
// Three rule groups, searched in order: suffix rules (-eth, -est, -t/-d),
// medial spelling edits (silent e, doubled letters), prefix rules (be-).
// Every reading a rule proposes is verified against the lexicon; nothing is
// guessed. Callers decide when a token is eligible; see Recognize().

#ifndef EARLYMOD_VARIANTS_H_
#define EARLYMOD_VARIANTS_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "earlymod/features.h"
#include "earlymod/lexicon.h"

namespace earlymod {

enum class VariantGroup { kSuffix = -1, kMedial = -2, kPrefix = -3 };

class VariantConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VariantRule {
  enum class Kind {
    kStrip,         // suffix: strip `from`, emit `emit`
    kUndoubleStem,  // suffix stem repair
    kRestoreE,      // suffix stem repair
    kDoubleFinal,   // suffix stem repair
    kDropE,         // medial
    kUndouble,      // medial
    kReplace,       // medial: `from` -> `to`
    kPrefix,        // prefix: strip `from`
  };

  VariantGroup group = VariantGroup::kSuffix;
  Kind kind = Kind::kStrip;
  std::string from;
  std::string to;
  Pos verify_pos = Pos::kV;
  FeatureSet emit;
  bool enabled = true;
  bool prefix_only = false;

  std::string Id() const;
};

class VariantConfig {
 public:
  static VariantConfig Parse(std::string_view text);
  static VariantConfig Load(const std::string &path);

  const std::vector<VariantRule> &rules() const { return rules_; }
  std::vector<VariantRule> &mutable_rules() { return rules_; }

  // Enabled prefix strings in file order.
  std::vector<std::string> Prefixes() const;

 private:
  std::vector<VariantRule> rules_;
};

// Strips -eth/-th (3sg present), -est (2sg present) and -t/-d (past) and
// verifies the stem as a verb base form.
std::vector<Analysis> RecognizeSuffix(std::string_view token, const LexiconSet &lex,
                                      const VariantConfig &config);

// Composes the medial edits (at most one application of each rule) and keeps
// every edited form the lexicon knows. Ambiguity is preserved.
std::vector<Analysis> RecognizeSpelling(std::string_view token, const LexiconSet &lex,
                                        const VariantConfig &config);

// Strips a configured prefix and verifies the remainder as a verb, directly
// or through the prefix-only medial rules.
std::vector<Analysis> RecognizePrefix(std::string_view token, const LexiconSet &lex,
                                      const VariantConfig &config);

// The group cascade: the first group with a verified reading answers.
std::vector<Analysis> Recognize(std::string_view token, const LexiconSet &lex,
                                const VariantConfig &config);

}  // namespace earlymod

#endif  // EARLYMOD_VARIANTS_H_
