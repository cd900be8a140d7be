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

// From analyses to transcription candidates.
//
// Word-level operations (TranscribeWord, ConcatDisjoint, ResolveElision,
// SplitContraction) look at one token or one lexicalized unit. The Rewrite*
// functions look at a window of analyzed tokens and return a candidate whose
// span is relative to the window start.

#ifndef EARLYMOD_GRAMMAR_H_
#define EARLYMOD_GRAMMAR_H_

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "earlymod/lexicon.h"
#include "earlymod/variants.h"

namespace earlymod {

enum class CandidateKind { kWord, kConcat, kContraction, kExpression, kRewrite, kNote };

std::string_view CandidateKindName(CandidateKind kind);
std::optional<CandidateKind> ParseCandidateKind(std::string_view name);

struct Candidate {
  size_t token_begin = 0;  // [token_begin, token_end)
  size_t token_end = 1;
  std::string text;
  CandidateKind kind = CandidateKind::kWord;
  std::string source_rule;
  bool requires_validation = false;
  std::string gloss;  // note candidates only
  int level = 0;      // ranking key: lexicon layer or variant group

  friend bool operator==(const Candidate &, const Candidate &) = default;
};

class TriggerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Word lists for the sequence rewrites, `key = w1 w2 ...` per line.
class Triggers {
 public:
  static Triggers Parse(std::string_view text);
  static Triggers Load(const std::string &path);

  // Lower-cased words for `key`; empty when absent.
  const std::vector<std::string> &Words(std::string_view key) const;
  bool Contains(std::string_view key, std::string_view word) const;
  // The words for `key` joined by single spaces.
  std::string Phrase(std::string_view key) const;

  void Set(std::string key, std::vector<std::string> words);

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> words_;
};

// Class 1 and 4: one analysis carrying transcription attributes. Returns
// nullopt for plain analyses, and also when the target form cannot be
// generated (then `diagnostic`, if given, explains why).
std::optional<Candidate> TranscribeWord(const Analysis &analysis, const LexiconSet &lex,
                                        std::string *diagnostic = nullptr);

// Candidates for all readings of one unit, ranked and de-duplicated. When
// the answering layer also holds a plain reading next to attributed ones, an
// identity candidate ("keep") is added last. Candidates equal to `original`
// are dropped.
std::vector<Candidate> TranscribeAnalyses(const std::vector<Analysis> &analyses,
                                          std::string_view original,
                                          const LexiconSet &lex,
                                          std::vector<std::string> *diagnostics = nullptr);

// Class 2: multiword entries (space separated) matched longest first, and
// hyphenated entries. `tokens` are the window's word texts.
std::optional<Candidate> ConcatDisjoint(const std::vector<std::string> &tokens,
                                        const LexiconSet &lex);

// Class 2: stem + 'd / 't. Verb readings first, then adjective/noun
// readings. The candidates span two tokens.
std::vector<Candidate> ResolveElision(std::string_view stem, std::string_view suffix,
                                      const LexiconSet &lex, const VariantConfig &variants);

// Class 3: analysis with parts.
std::optional<Candidate> SplitContraction(const Analysis &analysis, const LexiconSet &lex);

// One token as seen by the sequence rewrites.
struct WindowToken {
  std::string text;
  bool is_word = true;
  // Whitespace (or nothing) separates this token from the previous one.
  bool spaced = true;
  std::vector<Analysis> analyses;
  // False when the token is held by another unit (ambiguous, multi-token
  // or already rewritten in this pass).
  bool eligible = true;
};

// Class 5 rewrites. `window` starts at the candidate trigger and runs to the
// end of the text; candidate spans are relative to window[0].
std::optional<Candidate> RewriteDo(std::span<const WindowToken> window,
                                   const LexiconSet &lex, const Triggers &triggers);
std::optional<Candidate> RewriteSoever(std::span<const WindowToken> window,
                                       const Triggers &triggers);
// `window[0]` is the antecedent noun.
std::optional<Candidate> RewriteWhichHuman(std::span<const WindowToken> window,
                                           const Triggers &triggers);

}  // namespace earlymod

#endif  // EARLYMOD_GRAMMAR_H_
