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

// Inflection paradigms: named tables from feature bundles to tail edit
// scripts.
//
// Paradigm file format, one rule per line, rules of a paradigm on
// consecutive lines:
//
//   # comment
//   Nsp: s = +
//   Nsp: p = +s
//   Nsp_y: p = -1+ies
//   DOUBLE: PT = *+ed
//   SMILE: alias LIVE
//
// A script `-n*+suffix` deletes n trailing characters, optionally repeats
// the (new) final character, then appends the suffix. `+` alone is the
// identity script.

#ifndef EARLYMOD_INFLECTION_H_
#define EARLYMOD_INFLECTION_H_

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "earlymod/features.h"

namespace earlymod {

class InflectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EditScript {
  int delete_count = 0;
  bool repeat_final = false;
  std::string append;

  static EditScript Parse(std::string_view text);
  std::string Format() const;
  // Throws InflectionError when `lemma` is too short for the deletion.
  std::string Apply(std::string_view lemma) const;

  friend bool operator==(const EditScript &, const EditScript &) = default;
};

struct ParadigmRule {
  FeatureSet bundle;
  EditScript script;

  friend bool operator==(const ParadigmRule &, const ParadigmRule &) = default;
};

struct Paradigm {
  std::string name;
  std::vector<ParadigmRule> rules;

  // The rule whose bundle equals `bundle`, else the most specific rule whose
  // bundle is a subset of it. nullptr when nothing covers the bundle.
  const ParadigmRule *Match(const FeatureSet &bundle) const;

  friend bool operator==(const Paradigm &, const Paradigm &) = default;
};

class ParadigmTable {
 public:
  // Throws InflectionError with a line number on malformed input.
  static ParadigmTable Parse(std::string_view text);
  static ParadigmTable Load(const std::string &path);

  std::string Format() const;

  // Resolves aliases. nullptr for unknown names.
  const Paradigm *Find(std::string_view name) const;
  bool Contains(std::string_view name) const { return Find(name) != nullptr; }

  void Add(Paradigm paradigm);
  void AddAlias(std::string alias, std::string target);

  const std::vector<Paradigm> &paradigms() const { return paradigms_; }
  const std::vector<std::pair<std::string, std::string>> &aliases() const {
    return aliases_;
  }

  friend bool operator==(const ParadigmTable &, const ParadigmTable &) = default;

 private:
  std::vector<Paradigm> paradigms_;
  std::vector<std::pair<std::string, std::string>> aliases_;
};

// Keeps only tense, person and number.
FeatureSet InflectionalAxes(const FeatureSet &features);

// Applies the paradigm rule covering `features` to `lemma`. An empty bundle
// not covered by any rule yields the lemma unchanged.
std::string Inflect(std::string_view lemma, const Paradigm &paradigm,
                    const FeatureSet &features);

// Re-inflects `target_lemma` with the inflectional features carried by an
// archaic form.
std::string Transfer(const FeatureSet &source_features,
                     std::string_view target_lemma,
                     const Paradigm &target_paradigm);

// One (form, bundle) pair per paradigm rule, without duplicates.
std::vector<std::pair<std::string, FeatureSet>> Expand(
    std::string_view lemma, const Paradigm &paradigm);

}  // namespace earlymod

#endif  // EARLYMOD_INFLECTION_H_
