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

// Parts of speech and morphosyntactic feature bundles.
//
// A bundle is written the way dictionary lines write it: `PR+3+s`,
// `Tense=PR+Person=3+Nb=s` and `PR+3+Nb=s` all denote the same bundle.
// Bare values are assigned to their axis (tense, person, number, gender);
// any other bare token is a trait such as `Hum`.

#ifndef EARLYMOD_FEATURES_H_
#define EARLYMOD_FEATURES_H_

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace earlymod {

enum class Pos { kN, kV, kA, kAdv, kPro, kConj, kPrep, kDet, kInterj };

std::string_view PosName(Pos pos);
std::optional<Pos> ParsePos(std::string_view tag);

// Only nouns, verbs and adjectives carry inflection paradigms.
bool IsInflectable(Pos pos);

class FeatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FeatureSet {
 public:
  static constexpr std::string_view kTense = "Tense";
  static constexpr std::string_view kPerson = "Person";
  static constexpr std::string_view kNumber = "Nb";
  static constexpr std::string_view kGender = "Gender";

  FeatureSet() = default;

  // Parses a '+'-separated bundle. Throws FeatureError when an axis is
  // given two values.
  static FeatureSet Parse(std::string_view text);

  // Adds one bundle item (`PR`, `Nb=s`, `Hum`). Returns false when the
  // axis already holds a different value.
  bool Add(std::string_view item);

  void Set(std::string_view key, std::string_view value);
  void AddTrait(std::string_view trait);
  void Erase(std::string_view key);

  std::optional<std::string> Get(std::string_view key) const;
  bool Has(std::string_view key, std::string_view value) const;
  bool HasTrait(std::string_view trait) const;

  bool empty() const { return values_.empty() && traits_.empty(); }
  size_t size() const { return values_.size() + traits_.size(); }
  const std::map<std::string, std::string> &values() const { return values_; }
  const std::set<std::string> &traits() const { return traits_; }

  // Union; values from `other` win on conflict.
  FeatureSet Merged(const FeatureSet &other) const;

  // True when every key/trait of this set is present with the same value
  // in `other`.
  bool SubsetOf(const FeatureSet &other) const;

  // True when no key present in both sets has different values.
  bool CompatibleWith(const FeatureSet &other) const;

  // Canonical text: axis values bare in tense/person/number/gender order,
  // then other key=value pairs, then traits. Empty set formats as "".
  std::string Format() const;

  friend bool operator==(const FeatureSet &, const FeatureSet &) = default;
  friend auto operator<=>(const FeatureSet &, const FeatureSet &) = default;

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> traits_;
};

// Restricts a bundle to the inflectional axes relevant for `pos`: tense,
// person and number for verbs; number for nouns; nothing otherwise.
FeatureSet InflectionalProjection(Pos pos, const FeatureSet &features);

// Base-form bundles: empty, {INF} or {s}.
bool IsBaseBundle(const FeatureSet &projected);

}  // namespace earlymod

#endif  // EARLYMOD_FEATURES_H_
