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

#include "earlymod/inflection.h"

#include <map>

#include "doctest.h"
#include "test_support.h"

namespace earlymod {
namespace {

TEST_CASE("edit scripts") {
  CHECK(EditScript::Parse("+").Apply("walk") == "walk");
  CHECK(EditScript::Parse("+ed").Apply("walk") == "walked");
  CHECK(EditScript::Parse("-1+ies").Apply("carry") == "carries");
  CHECK(EditScript::Parse("*+ed").Apply("crop") == "cropped");
  CHECK(EditScript::Parse("-1+ing").Apply("live") == "living");
  CHECK(EditScript::Parse("-2*+").Apply("abcd") == "abb");
  CHECK_THROWS_AS(EditScript::Parse("-3+x").Apply("ab"), InflectionError);
  CHECK_THROWS_AS(EditScript::Parse("ed"), InflectionError);
  CHECK_THROWS_AS(EditScript::Parse("-x+ed"), InflectionError);
}

TEST_CASE("property: edit script text round-trips") {
  testing::Gen g(21);
  for (int i = 0; i < 1000; ++i) {
    EditScript s;
    s.delete_count = static_cast<int>(g.Below(4));
    s.repeat_final = g.Coin(0.3);
    s.append = g.Word(0, 4);
    CAPTURE(s.Format());
    CHECK(EditScript::Parse(s.Format()) == s);
  }
}

TEST_CASE("paradigm file parses, formats and parses back") {
  ParadigmTable table = ParadigmTable::Load(DataPath("paradigms.txt"));
  CHECK(table.Contains("HELP"));
  CHECK(table.Find("SMILE") == table.Find("LIVE"));
  CHECK(ParadigmTable::Parse(table.Format()) == table);
}

TEST_CASE("paradigm errors carry the line number") {
  try {
    ParadigmTable::Parse("Nsp: s = +\nNsp s = +\n");
    FAIL("expected an error");
  } catch (const InflectionError &e) {
    CHECK(std::string(e.what()).find("paradigms:2:") != std::string::npos);
  }
  CHECK_THROWS_AS(ParadigmTable::Parse("X: alias NOPE\n"), InflectionError);
  CHECK_THROWS_AS(ParadigmTable::Parse("X: PR+PT = +\n"), InflectionError);
}

TEST_CASE("most specific covering rule wins") {
  const Paradigm *help = testing::BundledParadigms()->Find("HELP");
  REQUIRE(help != nullptr);
  CHECK(Inflect("walk", *help, FeatureSet::Parse("PR+3+s")) == "walks");
  CHECK(Inflect("walk", *help, FeatureSet::Parse("PR+1+s")) == "walk");
  CHECK(Inflect("walk", *help, FeatureSet::Parse("PR+3+p")) == "walk");
  CHECK(Inflect("walk", *help, FeatureSet::Parse("PT+2+s")) == "walked");
  CHECK(Inflect("walk", *help, FeatureSet()) == "walk");
}

// English inflection written out independently of the paradigm file.
std::string Oracle(const std::string &paradigm, const std::string &lemma,
                   const std::string &bundle) {
  std::string stem_y = lemma.substr(0, lemma.size() - 1);
  std::string doubled = lemma + lemma.back();
  static const std::map<std::string, std::map<std::string, std::string>> suffix = {
      {"HELP", {{"PR+3+s", "s"}, {"PT", "ed"}, {"PP", "ed"}, {"G", "ing"}}},
      {"Ves", {{"PR+3+s", "es"}, {"PT", "ed"}, {"PP", "ed"}, {"G", "ing"}}},
      {"LIVE", {{"PR+3+s", "s"}, {"PT", "d"}, {"PP", "d"}}},
      {"Nsp", {{"p", "s"}}},
      {"Nsp_es", {{"p", "es"}}},
  };
  if (bundle == "INF" || bundle == "PR" || bundle == "s" || (paradigm == "NINV")) return lemma;
  if (paradigm == "DOUBLE") {
    if (bundle == "PR+3+s") return lemma + "s";
    return doubled + (bundle == "G" ? "ing" : "ed");
  }
  if (paradigm == "Vy") {
    if (bundle == "G") return lemma + "ing";
    return stem_y + (bundle == "PR+3+s" ? "ies" : "ied");
  }
  if (paradigm == "Nsp_y") return stem_y + "ies";
  if (paradigm == "PUT") {
    if (bundle == "G") return doubled + "ing";
    return bundle == "PR+3+s" ? lemma + "s" : lemma;
  }
  if (paradigm == "LIVE" && bundle == "G") return stem_y + "ing";
  return lemma + suffix.at(paradigm).at(bundle);
}

TEST_CASE("bundled paradigms inflect as English does") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> lemmas = {
      {"HELP", {"walk", "help", "link"}}, {"LIVE", {"live", "smile", "love"}},
      {"DOUBLE", {"crop", "dip", "stop"}}, {"Vy", {"dry", "carry"}},
      {"Ves", {"dismiss", "wish"}},        {"PUT", {"put", "set", "cut"}},
      {"Nsp", {"book", "ship"}},           {"Nsp_es", {"box", "church"}},
      {"Nsp_y", {"city", "lady"}},         {"NINV", {"sheep", "fish"}},
  };
  auto table = testing::BundledParadigms();
  for (const auto &[name, words] : lemmas) {
    const Paradigm *p = table->Find(name);
    REQUIRE(p != nullptr);
    for (const ParadigmRule &rule : p->rules) {
      for (const std::string &w : words) {
        CAPTURE(name);
        CAPTURE(w);
        CAPTURE(rule.bundle.Format());
        CHECK(Inflect(w, *p, rule.bundle) == Oracle(name, w, rule.bundle.Format()));
      }
    }
  }
}

TEST_CASE("property: transfer equals inflection with the source's axes") {
  testing::Gen g(22);
  auto table = testing::BundledParadigms();
  static const std::vector<std::string> extras = {"Hum", "m", "f", "Case=gen", "1", "3"};
  for (const Paradigm &p : table->paradigms()) {
    for (const ParadigmRule &rule : p.rules) {
      for (int k = 0; k < 20; ++k) {
        std::string lemma = g.Word(3, 8);
        FeatureSet source = rule.bundle;
        if (g.Coin()) {
          FeatureSet extra = FeatureSet::Parse(g.Pick(extras));
          if (extra.CompatibleWith(source)) source = source.Merged(extra);
        }
        CAPTURE(p.name);
        CAPTURE(source.Format());
        CHECK(Transfer(source, lemma, p) ==
              Inflect(lemma, p, InflectionalAxes(source)));
      }
    }
  }
}

TEST_CASE("property: every expanded form is the inflection of its bundle") {
  testing::Gen g(23);
  auto table = testing::BundledParadigms();
  for (const Paradigm &p : table->paradigms()) {
    for (int k = 0; k < 50; ++k) {
      std::string lemma = g.Word(3, 9);
      auto forms = Expand(lemma, p);
      CHECK_FALSE(forms.empty());
      for (const auto &[form, bundle] : forms) CHECK(Inflect(lemma, p, bundle) == form);
      for (size_t i = 0; i < forms.size(); ++i) {
        for (size_t j = i + 1; j < forms.size(); ++j) CHECK_FALSE(forms[i] == forms[j]);
      }
    }
  }
}

}  // namespace
}  // namespace earlymod
