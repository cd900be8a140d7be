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

#include "earlymod/eval.h"

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "test_support.h"

namespace earlymod {
namespace {

TEST_CASE("f-measure from counts") {
  ScoreReport r = ReportFromCounts(10, 20, 5);
  CHECK(r.precision == doctest::Approx(0.5));
  CHECK(r.recall == doctest::Approx(0.25));
  CHECK(r.f_measure == doctest::Approx(1.0 / 3.0));
  CHECK(FMeasure(1, 1) == 1);
  CHECK(FMeasure(0, 0) == 0);
}

TEST_CASE("degenerate counts") {
  ScoreReport none = ReportFromCounts(0, 0, 0);
  CHECK(none.precision == 0);
  CHECK(none.recall == 0);
  CHECK(none.f_measure == 0);
  ScoreReport no_gold = ReportFromCounts(4, 0, 0);
  CHECK(no_gold.recall == 0);
  CHECK(no_gold.f_measure == 0);
  ScoreReport perfect = ReportFromCounts(7, 7, 7);
  CHECK(perfect.f_measure == 1);
}

TEST_CASE("counts behind P=96.85% and R=94.36% give F=95.58%") {
  // Smallest integer counts that round to the target precision and recall.
  bool found = false;
  for (size_t c = 1; c < 5000 && !found; ++c) {
    for (size_t a = c; a < 2 * c && !found; ++a) {
      if (std::lround(10000.0 * c / a) != 9685) continue;
      for (size_t g = c; g < 2 * c; ++g) {
        if (std::lround(10000.0 * c / g) != 9436) continue;
        ScoreReport r = ReportFromCounts(a, g, c);
        CHECK(r.f_measure == doctest::Approx(2.0 * c / (a + g)));
        CHECK(std::abs(r.f_measure - 0.9558) <= 0.0002);
        found = true;
        break;
      }
    }
  }
  CHECK(found);
}

TEST_CASE("matching normalizes whitespace only") {
  CHECK(Matches("from  whatever\nplace", "from whatever place"));
  CHECK_FALSE(Matches("Early", "early"));
  CHECK_FALSE(Matches("early.", "early"));
}

TEST_CASE("gold parsing") {
  std::string source = "We rose betimes and liveth.";
  GoldFile ok = ParseGold("# note\n20\t26\tliveth\tlives\n\n8\t15\tbetimes\tearly\n", source);
  REQUIRE(ok.entries.size() == 2);
  CHECK(ok.entries[0].gold == "early");
  CHECK(ok.entries[1].line == 2);
  CHECK(ParseGold(FormatGold(ok, source), source).entries.size() == 2);
  CHECK(ParseGold(FormatGold(ok, source), source).source_hash == Fnv1a64Hex(source));

  auto error = [&](std::string_view text) -> std::string {
    try {
      ParseGold(text, source);
    } catch (const EvalError &e) {
      return e.what();
    }
    return "";
  };
  CHECK(error("8\t15\tbetimes\n").starts_with("gold:1: expected 4"));
  CHECK(error("\n8\tx\tbetimes\tearly\n").starts_with("gold:2: bad end offset"));
  CHECK(error("8\t99\tbetimes\tearly\n").find("out of bounds") != std::string::npos);
  CHECK(error("8\t15\tbetime\tearly\n").find("does not match") != std::string::npos);
  CHECK(error("8\t15\tbetimes\t\n").find("empty gold") != std::string::npos);
  CHECK(error("8\t15\tbetimes\tearly\n3\t12\trose beti\tx\n") == "gold: lines 1 and 2 overlap");
  CHECK(error("# source-fnv1a64: 0000000000000000\n").find("different source") !=
        std::string::npos);
}

TEST_CASE("scoring a document") {
  std::string source = "the poore chirurgion liveth betimes toung";
  AnnotatedDocument doc = Transcribe(source, BundledEngine());
  GoldFile gold = ParseGold(
      "4\t9\tpoore\tpore\n10\t20\tchirurgion\tsurgeon\n21\t27\tliveth\tlives\n"
      "28\t35\tbetimes\tbetimes\n36\t41\ttoung\ttongue\n",
      source);
  ScoreReport automatic = Score(SystemEntries(doc), gold.entries);
  CHECK(automatic.n_auto == 4);
  CHECK(automatic.n_gold == 5);
  CHECK(automatic.n_correct == 2);
  ScoreReport oracle = Score(SystemEntries(doc), gold.entries, true);
  CHECK(oracle.n_correct == 3);
  CHECK(oracle.n_correct_ambiguous == 1);

  Select(doc, 0, 1);
  CHECK(Score(SystemEntries(doc), gold.entries).n_correct == 3);
}

TEST_CASE("bundled mini corpus") {
  std::string source = ReadFile(testing::CorpusPath("mini.txt"));
  GoldFile gold = LoadGold(testing::CorpusPath("mini.gold.tsv"), source);
  AnnotatedDocument doc = Transcribe(source, BundledEngine());
  ScoreReport r = Score(SystemEntries(doc), gold.entries);
  MESSAGE(FormatReport(r));
  CHECK(r.n_gold == gold.entries.size());
  CHECK(r.precision >= 0.95);
  CHECK(r.recall >= 0.9);
}

TEST_CASE("property: oracle never scores below automatic, F lies between P and R") {
  testing::Gen g(71);
  const std::vector<std::string> words = {"a", "b", "c", "d"};
  for (int i = 0; i < 2000; ++i) {
    std::vector<SystemEntry> system;
    std::vector<GoldEntry> gold;
    for (size_t pos = 0; pos < 40; pos += 2) {
      if (g.Coin(0.6)) {
        SystemEntry s{pos, pos + 1, {}};
        size_t n = 1 + g.Below(3);
        for (size_t k = 0; k < n; ++k) s.candidates.push_back(g.Pick(words));
        system.push_back(s);
      }
      if (g.Coin(0.6)) gold.push_back(GoldEntry{pos, pos + 1, "x", g.Pick(words), 0});
    }
    ScoreReport a = Score(system, gold);
    ScoreReport o = Score(system, gold, true);
    CHECK(o.n_correct >= a.n_correct);
    CHECK(a.n_correct <= std::min(a.n_auto, a.n_gold));
    for (const ScoreReport &r : {a, o}) {
      CHECK(r.f_measure <= std::max(r.precision, r.recall) + 1e-12);
      CHECK(r.f_measure + 1e-12 >= std::min(r.precision, r.recall));
      CHECK(r.f_measure == doctest::Approx(
                               r.n_auto + r.n_gold == 0
                                   ? 0.0
                                   : 2.0 * r.n_correct / (r.n_auto + r.n_gold)));
    }
  }
}

}  // namespace
}  // namespace earlymod
