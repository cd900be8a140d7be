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

#include "earlymod/grammar.h"

#include <algorithm>

#include "earlymod/text.h"

namespace earlymod {
namespace {

constexpr std::string_view kKindNames[] = {"word",    "concat",  "contraction",
                                           "expression", "rewrite", "note"};

std::string RuleFor(const Analysis &a) {
  if (a.level >= 0) return "lexicon:" + a.source;
  return a.source;
}

bool IsVerbBase(const Analysis &a) {
  if (a.pos != Pos::kV) return false;
  auto tense = a.features.Get(FeatureSet::kTense);
  return !tense || *tense == "INF";
}

// Regular -ed form for adjective and noun stems (long-hair'd).
std::string EdForm(std::string_view stem) {
  std::string s(stem);
  size_t n = s.size();
  if (n >= 2 && s[n - 1] == 'y' && !IsVowel(s[n - 2])) return s.substr(0, n - 1) + "ied";
  if (n >= 1 && s[n - 1] == 'e') return s + "d";
  return s + "ed";
}

bool HasPos(const std::vector<Analysis> &analyses, Pos pos) {
  return std::any_of(analyses.begin(), analyses.end(),
                     [pos](const Analysis &a) { return a.pos == pos; });
}

void SortAndDedup(std::vector<Candidate> &cands) {
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate &a, const Candidate &b) {
    if (a.level != b.level) return a.level > b.level;
    return a.text < b.text;
  });
  std::vector<Candidate> out;
  for (Candidate &c : cands) {
    bool seen = std::any_of(out.begin(), out.end(),
                            [&](const Candidate &o) { return o.text == c.text; });
    if (!seen) out.push_back(std::move(c));
  }
  cands = std::move(out);
}

std::string Key(const WindowToken &t) { return LookupKey(t.text); }

bool Usable(const WindowToken &t) { return t.is_word && t.eligible; }

}  // namespace

std::string_view CandidateKindName(CandidateKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

std::optional<CandidateKind> ParseCandidateKind(std::string_view name) {
  for (size_t i = 0; i < std::size(kKindNames); ++i) {
    if (kKindNames[i] == name) return static_cast<CandidateKind>(i);
  }
  return std::nullopt;
}

Triggers Triggers::Parse(std::string_view text) {
  Triggers t;
  size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw TriggerError("triggers:" + std::to_string(line_no) + ": missing '='");
    }
    std::string key(Trim(line.substr(0, eq)));
    if (key.empty()) {
      throw TriggerError("triggers:" + std::to_string(line_no) + ": empty key");
    }
    std::vector<std::string> words;
    for (const std::string &w : SplitWhitespace(line.substr(eq + 1))) {
      words.push_back(LookupKey(w));
    }
    t.words_[key] = std::move(words);
  }
  return t;
}

Triggers Triggers::Load(const std::string &path) {
  try {
    return Parse(ReadFile(path));
  } catch (const TriggerError &e) {
    throw TriggerError(path + ": " + e.what());
  }
}

const std::vector<std::string> &Triggers::Words(std::string_view key) const {
  static const std::vector<std::string> kEmpty;
  auto it = words_.find(key);
  return it == words_.end() ? kEmpty : it->second;
}

bool Triggers::Contains(std::string_view key, std::string_view word) const {
  const auto &words = Words(key);
  return std::find(words.begin(), words.end(), word) != words.end();
}

std::string Triggers::Phrase(std::string_view key) const {
  std::string out;
  for (const std::string &w : Words(key)) {
    if (!out.empty()) out += " ";
    out += w;
  }
  return out;
}

void Triggers::Set(std::string key, std::vector<std::string> words) {
  words_[std::move(key)] = std::move(words);
}

std::optional<Candidate> TranscribeWord(const Analysis &a, const LexiconSet &lex,
                                        std::string *diagnostic) {
  if (!a.parts.empty()) return SplitContraction(a, lex);
  const Recipe &r = a.recipe;
  if (r.empty()) return std::nullopt;

  Candidate c;
  c.level = a.level;
  c.source_rule = RuleFor(a);

  std::string text;
  if (r.replace) {
    text = *r.replace;
    c.kind = CandidateKind::kExpression;
  } else if (r.en || r.prefix || r.preinsert || r.postinsert) {
    std::string target = r.en.value_or(a.lemma);
    std::optional<std::string> form = lex.Generate(target, a.pos, a.features, a.paradigm);
    if (!form) {
      if (diagnostic != nullptr) {
        *diagnostic = "cannot generate " + target + "," + std::string(PosName(a.pos)) +
                      (a.features.empty() ? "" : "+" + a.features.Format()) + " for '" +
                      a.surface + "'";
      }
      return std::nullopt;
    }
    text = r.prefix.value_or("") + *form;
    c.kind = CandidateKind::kWord;
  } else {
    text = a.surface;
  }
  if (r.preinsert) {
    text = *r.preinsert + " " + text;
    c.kind = CandidateKind::kExpression;
  }
  if (r.postinsert) {
    text += " " + *r.postinsert;
    c.kind = CandidateKind::kExpression;
  }
  if (r.note) {
    text += " (" + *r.note + ")";
    c.kind = CandidateKind::kNote;
    c.gloss = *r.note;
  }
  c.text = std::move(text);
  return c;
}

std::vector<Candidate> TranscribeAnalyses(const std::vector<Analysis> &analyses,
                                          std::string_view original,
                                          const LexiconSet &lex,
                                          std::vector<std::string> *diagnostics) {
  std::vector<Candidate> out;
  bool plain = false;
  bool unamb = false;
  int lowest = 0;
  Casing casing = DetectCasing(original);
  for (const Analysis &a : analyses) {
    lowest = std::min(lowest, a.level);
    if (a.parts.empty() && a.recipe.empty()) {
      plain = true;
      continue;
    }
    std::string diag;
    std::optional<Candidate> c = TranscribeWord(a, lex, &diag);
    if (!c) {
      if (diagnostics != nullptr && !diag.empty()) diagnostics->push_back(diag);
      continue;
    }
    if (ApplyCasing(c->text, casing) == original) continue;
    unamb |= a.unamb;
    out.push_back(std::move(*c));
  }
  SortAndDedup(out);
  if (unamb && out.size() > 1) out.resize(1);
  if (plain && !out.empty() && !unamb) {
    Candidate keep;
    keep.text = std::string(original);
    keep.kind = CandidateKind::kWord;
    keep.source_rule = "keep";
    keep.level = lowest;
    out.push_back(std::move(keep));
  }
  return out;
}

std::optional<Candidate> ConcatDisjoint(const std::vector<std::string> &tokens,
                                        const LexiconSet &lex) {
  if (tokens.empty()) return std::nullopt;
  std::vector<std::pair<size_t, std::vector<Analysis>>> matches;
  for (MultiwordMatch &m : lex.MatchMultiword(tokens)) {
    matches.emplace_back(m.length, std::move(m.analyses));
  }
  if (tokens.front().find('-') != std::string::npos) {
    matches.emplace_back(1, lex.Lookup(tokens.front()));
  }
  for (const auto &[length, analyses] : matches) {
    for (const Analysis &a : analyses) {
      if (!a.recipe.en && !a.recipe.replace) continue;
      std::optional<Candidate> c = TranscribeWord(a, lex);
      if (!c) continue;
      c->token_begin = 0;
      c->token_end = length;
      c->kind = CandidateKind::kConcat;
      c->source_rule = "concat:" + a.source;
      return c;
    }
  }
  return std::nullopt;
}

std::vector<Candidate> ResolveElision(std::string_view stem, std::string_view suffix,
                                      const LexiconSet &lex,
                                      const VariantConfig &variants) {
  std::vector<Candidate> verbs, others;
  std::string rule = "elision:" + std::string(suffix);

  auto add_verb = [&](const Analysis &a) {
    Analysis pp = a;
    pp.features = FeatureSet();
    for (const std::string &t : a.features.traits()) pp.features.AddTrait(t);
    pp.features.Set(FeatureSet::kTense, "PP");
    if (!pp.recipe.en) pp.recipe.en = a.lemma;
    pp.recipe.note.reset();
    pp.recipe.replace.reset();
    std::optional<Candidate> c = TranscribeWord(pp, lex);
    if (!c) return;
    c->kind = CandidateKind::kConcat;
    c->source_rule = rule + "+V";
    verbs.push_back(std::move(*c));
  };
  auto add_other = [&](const Analysis &a, std::string_view base) {
    Candidate c;
    c.text = EdForm(a.recipe.en.value_or(std::string(base)));
    c.kind = CandidateKind::kConcat;
    c.source_rule = rule + "+" + std::string(PosName(a.pos));
    c.level = a.level;
    others.push_back(std::move(c));
  };

  std::vector<Analysis> readings = lex.Lookup(stem);
  bool polycategorial = false;
  for (const Analysis &a : readings) {
    if (IsVerbBase(a)) add_verb(a);
    if (a.pos == Pos::kA || a.pos == Pos::kN) add_other(a, stem);
  }
  if (readings.empty()) {
    size_t hyphen = stem.rfind('-');
    if (hyphen != std::string_view::npos && hyphen + 1 < stem.size()) {
      for (const Analysis &a : lex.Lookup(stem.substr(hyphen + 1))) {
        if (a.pos == Pos::kA || a.pos == Pos::kN) {
          Analysis whole = a;
          whole.recipe = Recipe();
          add_other(whole, stem);
          break;
        }
      }
    }
  }
  polycategorial = !verbs.empty() && !others.empty();

  if (verbs.empty() && others.empty()) {
    std::string key = LookupKey(stem);
    std::vector<std::string> repaired;
    size_t n = key.size();
    for (const VariantRule &r : variants.rules()) {
      if (!r.enabled) continue;
      if (r.kind == VariantRule::Kind::kUndoubleStem && n >= 2 && key[n - 1] == key[n - 2]) {
        repaired.push_back(key.substr(0, n - 1));
      } else if (r.kind == VariantRule::Kind::kRestoreE && n > 0 && key.back() != 'e') {
        repaired.push_back(key + "e");
      } else if (r.kind == VariantRule::Kind::kDoubleFinal && n > 0 &&
                 IsAsciiAlpha(key.back()) && !IsVowel(key.back())) {
        repaired.push_back(key + key.back());
      }
    }
    for (const std::string &form : repaired) {
      for (const Analysis &a : lex.Lookup(form)) {
        if (IsVerbBase(a)) add_verb(a);
      }
    }
  }
  if (verbs.empty() && others.empty()) {
    for (const Analysis &a : Recognize(stem, lex, variants)) {
      if (IsVerbBase(a)) add_verb(a);
    }
  }

  auto by_text = [](const Candidate &a, const Candidate &b) { return a.text < b.text; };
  std::stable_sort(verbs.begin(), verbs.end(), by_text);
  std::stable_sort(others.begin(), others.end(), by_text);
  std::vector<Candidate> out;
  for (auto *group : {&verbs, &others}) {
    for (Candidate &c : *group) {
      bool seen = std::any_of(out.begin(), out.end(),
                              [&](const Candidate &o) { return o.text == c.text; });
      if (seen) continue;
      c.token_begin = 0;
      c.token_end = 2;
      c.requires_validation = polycategorial;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::optional<Candidate> SplitContraction(const Analysis &a, const LexiconSet &lex) {
  if (a.parts.size() < 2) return std::nullopt;
  std::string text;
  for (const Part &part : a.parts) {
    std::string target = part.en.value_or(part.lemma);
    std::string form = lex.Generate(target, part.pos, part.features).value_or(part.surface);
    if (!text.empty()) text += " ";
    text += form;
  }
  Candidate c;
  c.text = std::move(text);
  c.kind = CandidateKind::kContraction;
  c.source_rule = "contraction:" + a.source;
  c.level = a.level;
  return c;
}

std::optional<Candidate> RewriteDo(std::span<const WindowToken> window,
                                   const LexiconSet &lex, const Triggers &triggers) {
  if (window.size() < 2) return std::nullopt;
  const WindowToken &aux = window[0];
  const WindowToken &verb = window[1];
  if (!Usable(aux) || !triggers.Contains("do-forms", Key(aux))) return std::nullopt;
  if (!verb.is_word || !verb.spaced) return std::nullopt;
  if (triggers.Contains("do-blockers", Key(verb)) || !verb.eligible) return std::nullopt;

  const Analysis *do_reading = nullptr;
  for (const Analysis &a : aux.analyses) {
    if (a.pos != Pos::kV || LookupKey(a.lemma) != "do") continue;
    auto tense = a.features.Get(FeatureSet::kTense);
    if (tense && (*tense == "PR" || *tense == "PT")) {
      do_reading = &a;
      break;
    }
  }
  if (do_reading == nullptr) return std::nullopt;

  const Analysis *main = nullptr;
  for (const Analysis &a : verb.analyses) {
    if (IsVerbBase(a) && LookupKey(a.lemma) != "do" && a.recipe.empty()) {
      main = &a;
      break;
    }
  }
  if (main == nullptr) return std::nullopt;

  FeatureSet features = InflectionalAxes(do_reading->features);
  std::optional<std::string> form =
      lex.Generate(main->lemma, Pos::kV, features, main->paradigm);
  if (!form) return std::nullopt;
  Candidate c;
  c.token_begin = 0;
  c.token_end = 2;
  c.text = *form;
  c.kind = CandidateKind::kRewrite;
  c.source_rule = "rewrite:do";
  c.requires_validation = true;
  return c;
}

std::optional<Candidate> RewriteSoever(std::span<const WindowToken> window,
                                       const Triggers &triggers) {
  const std::vector<std::string> &lead_a = triggers.Words("soever-a-lead");
  const std::vector<std::string> &lead_b = triggers.Words("soever-b-lead");
  auto is_soever = [&](size_t i) {
    return i < window.size() && Usable(window[i]) && window[i].spaced &&
           triggers.Contains("soever", Key(window[i]));
  };
  auto matches_lead = [&](const std::vector<std::string> &lead) {
    if (lead.empty() || window.size() < lead.size()) return false;
    for (size_t i = 0; i < lead.size(); ++i) {
      if (!Usable(window[i]) || Key(window[i]) != lead[i]) return false;
      if (i > 0 && !window[i].spaced) return false;
    }
    return true;
  };
  auto nominal = [](const WindowToken &t) {
    return HasPos(t.analyses, Pos::kN) || HasPos(t.analyses, Pos::kA);
  };

  if (matches_lead(lead_a)) {
    size_t start = lead_a.size();
    constexpr size_t kMaxPhrase = 6;
    for (size_t end = start + 1; end <= start + kMaxPhrase && end < window.size(); ++end) {
      const WindowToken &last = window[end - 1];
      if (!Usable(last) || !last.spaced) break;
      bool coordinator = triggers.Contains("coordinators", Key(last));
      if (!coordinator && !nominal(last)) break;
      if (coordinator && end - 1 == start) break;
      if (coordinator || !is_soever(end)) continue;
      std::string text = triggers.Phrase("soever-a-output");
      for (size_t i = start; i < end; ++i) text += " " + window[i].text;
      Candidate c;
      c.token_begin = 0;
      c.token_end = end + 1;
      c.text = std::move(text);
      c.kind = CandidateKind::kRewrite;
      c.source_rule = "rewrite:soever-a";
      return c;
    }
  }

  if (matches_lead(lead_b)) {
    size_t i = lead_b.size();
    if (i + 1 < window.size() && Usable(window[i]) && window[i].spaced && is_soever(i + 1)) {
      bool adjectival = false;
      for (const Analysis &a : window[i].analyses) {
        if (a.pos == Pos::kA || (a.pos == Pos::kV && a.features.Has("Tense", "PP"))) {
          adjectival = true;
        }
      }
      if (adjectival) {
        Candidate c;
        c.token_begin = 0;
        c.token_end = i + 2;
        c.text = triggers.Phrase("soever-b-output") + " " + window[i].text;
        c.kind = CandidateKind::kRewrite;
        c.source_rule = "rewrite:soever-b";
        return c;
      }
    }
  }
  return std::nullopt;
}

std::optional<Candidate> RewriteWhichHuman(std::span<const WindowToken> window,
                                           const Triggers &triggers) {
  if (window.size() < 2) return std::nullopt;
  const WindowToken &noun = window[0];
  if (!noun.is_word) return std::nullopt;
  bool human = std::any_of(noun.analyses.begin(), noun.analyses.end(), [](const Analysis &a) {
    return a.pos == Pos::kN && a.features.HasTrait("Hum");
  });
  if (!human) return std::nullopt;
  size_t i = 1;
  if (!window[i].is_word && window[i].text == ",") ++i;
  if (i >= window.size() || !Usable(window[i]) || !window[i].spaced) return std::nullopt;
  if (!triggers.Contains("relative-which", Key(window[i]))) return std::nullopt;
  const std::vector<std::string> &who = triggers.Words("relative-who");
  if (who.empty()) return std::nullopt;
  Candidate c;
  c.token_begin = i;
  c.token_end = i + 1;
  c.text = who.front();
  c.kind = CandidateKind::kRewrite;
  c.source_rule = "rewrite:which-human";
  c.requires_validation = true;
  return c;
}

}  // namespace earlymod
