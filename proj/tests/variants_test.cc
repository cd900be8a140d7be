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

#include "earlymod/variants.h"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "test_support.h"

namespace earlymod {
namespace {

const VariantConfig &Rules() { return BundledEngine().variants; }

std::set<std::string> Lemmas(const std::vector<Analysis> &analyses) {
  std::set<std::string> out;
  for (const Analysis &a : analyses) out.insert(a.lemma);
  return out;
}

bool HasReading(const std::vector<Analysis> &analyses, std::string_view lemma,
                std::string_view bundle) {
  FeatureSet want = FeatureSet::Parse(bundle);
  return std::any_of(analyses.begin(), analyses.end(), [&](const Analysis &a) {
    return a.lemma == lemma && want.SubsetOf(a.features);
  });
}

TEST_CASE("rule file") {
  const auto &rules = Rules().rules();
  CHECK(rules.size() == 21);
  CHECK(rules.front().Id() == "suffix:-eth");
  CHECK(Rules().Prefixes() == std::vector<std::string>{"be", "a", "en"});
  auto off = std::count_if(rules.begin(), rules.end(),
                           [](const VariantRule &r) { return !r.enabled; });
  CHECK(off == 5);
}

TEST_CASE("rule file errors carry the line number") {
  auto message = [](std::string_view text) -> std::string {
    try {
      VariantConfig::Parse(text);
    } catch (const VariantConfigError &e) {
      return e.what();
    }
    return "";
  };
  CHECK(message("medial drop-e\nsuffix strip\n").starts_with("variants:2:"));
  CHECK(message("suffix strip eth V+PR+PT\n").starts_with("variants:1:"));
  CHECK(message("repair sideways\n").starts_with("variants:1:"));
  CHECK(message("suffix strip eth V+PR+3+s prefix-only\n").starts_with("variants:1:"));
  CHECK(message("bogus\n").starts_with("variants:1:"));
  CHECK(message("# fine\nmedial undouble off\n").empty());
}

TEST_CASE("suffix group") {
  const LexiconSet &lex = testing::BundledLexicon();
  auto liveth = RecognizeSuffix("liveth", lex, Rules());
  CHECK(HasReading(liveth, "live", "PR+3+s"));
  CHECK(liveth[0].level == -1);
  CHECK(liveth[0].stem == "live");
  CHECK(liveth[0].source == "suffix:-eth");

  CHECK(HasReading(RecognizeSuffix("dippeth", lex, Rules()), "dip", "PR+3+s"));
  CHECK(HasReading(RecognizeSuffix("livest", lex, Rules()), "live", "PR+2+s"));
  auto linkt = RecognizeSuffix("linkt", lex, Rules());
  CHECK(HasReading(linkt, "link", "PP"));
  CHECK(HasReading(linkt, "link", "PT"));
  CHECK(HasReading(RecognizeSuffix("cropt", lex, Rules()), "crop", "PP"));
  CHECK(RecognizeSuffix("fatned", lex, Rules()).empty());
}

TEST_CASE("medial group keeps every verified reading") {
  const LexiconSet &lex = testing::BundledLexicon();
  CHECK(Lemmas(RecognizeSpelling("poore", lex, Rules())) ==
        std::set<std::string>{"poor", "pore"});
  auto nunnes = RecognizeSpelling("nunnes", lex, Rules());
  CHECK(Lemmas(nunnes) == std::set<std::string>{"nun"});
  CHECK(HasReading(nunnes, "nun", "p"));
  auto sinne = Lemmas(RecognizeSpelling("sinne", lex, Rules()));
  CHECK(sinne.size() >= 2);
  CHECK(sinne.count("sin") == 1);
  CHECK(RecognizeSpelling("toung", lex, Rules()).empty());
  CHECK(Recognize("fatned", lex, Rules()).empty());
  for (const Analysis &a : RecognizeSpelling("poore", lex, Rules())) CHECK(a.level == -2);
}

TEST_CASE("prefix group") {
  const LexiconSet &lex = testing::BundledLexicon();
  auto bedim = RecognizePrefix("bedim", lex, Rules());
  REQUIRE_FALSE(bedim.empty());
  for (const Analysis &a : bedim) {
    CHECK(a.pos == Pos::kV);
    CHECK(a.recipe.prefix == "be");
    CHECK(a.recipe.en == "dim");
    CHECK(a.level == -3);
  }
  CHECK(HasReading(bedim, "dim", "INF"));
  CHECK(RecognizePrefix("be", lex, Rules()).empty());
  CHECK(RecognizePrefix("bex", lex, Rules()).empty());
}

TEST_CASE("disabled rules do not fire") {
  const LexiconSet &lex = testing::BundledLexicon();
  VariantConfig config = Rules();
  for (VariantRule &r : config.mutable_rules()) {
    if (r.Id() == "suffix:-eth") r.enabled = false;
  }
  // -th still covers liveth.
  CHECK(HasReading(RecognizeSuffix("liveth", lex, config), "live", "PR+3+s"));
  for (VariantRule &r : config.mutable_rules()) {
    if (r.Id() == "suffix:-th") r.enabled = false;
  }
  CHECK(RecognizeSuffix("liveth", lex, config).empty());
  VariantConfig uv = VariantConfig::Parse("medial replace u v\n");
  CHECK(Lemmas(RecognizeSpelling("giue", lex, uv)).count("give") == 1);
  CHECK(RecognizeSpelling("giue", lex, Rules()).empty());
}

// Tokens that look archaic: a known form with a random ending or spelling
// edit, or plain noise.
std::string ArchaicToken(testing::Gen &g, const std::vector<std::string> &forms) {
  static const std::vector<std::string> endings = {"eth", "th", "est", "t", "d", "e", "es"};
  std::string base = g.Pick(forms);
  switch (g.Below(5)) {
    case 0: return base + g.Pick(endings);
    case 1: return base + base.back() + g.Pick(endings);
    case 2: return g.Pick(std::vector<std::string>{"be", "a", "en"}) + base;
    case 3: return base + "e";
    default: return g.Word(2, 9);
  }
}

TEST_CASE("property: every reading is verified by a dictionary form") {
  const LexiconSet &lex = testing::BundledLexicon();
  auto forms = testing::BundledForms();
  testing::Gen g(31);
  for (int i = 0; i < 3000; ++i) {
    std::string token = ArchaicToken(g, forms);
    for (const Analysis &a : Recognize(token, lex, Rules())) {
      CAPTURE(token);
      CAPTURE(a.stem);
      REQUIRE_FALSE(a.stem.empty());
      CHECK(lex.Contains(a.stem));
      CHECK(a.surface == token);
      CHECK(a.level < 0);
    }
  }
}

TEST_CASE("property: the first group with a reading answers alone") {
  const LexiconSet &lex = testing::BundledLexicon();
  auto forms = testing::BundledForms();
  testing::Gen g(32);
  for (int i = 0; i < 3000; ++i) {
    std::string token = ArchaicToken(g, forms);
    auto s = RecognizeSuffix(token, lex, Rules());
    auto m = RecognizeSpelling(token, lex, Rules());
    auto p = RecognizePrefix(token, lex, Rules());
    auto expected = !s.empty() ? s : !m.empty() ? m : p;
    CAPTURE(token);
    CHECK(Recognize(token, lex, Rules()) == expected);
  }
}

}  // namespace
}  // namespace earlymod
