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

#include "earlymod/text.h"

namespace earlymod {
namespace {

using Kind = VariantRule::Kind;

bool IsLetter(char c) { return IsAsciiAlpha(c); }

// Stem repairs for the suffix group; the bare stem is always tried first.
std::vector<std::string> RepairStem(const std::string &stem,
                                    const std::vector<const VariantRule *> &repairs) {
  bool undouble = false, restore_e = false, double_final = false;
  for (const VariantRule *r : repairs) {
    undouble |= r->kind == Kind::kUndoubleStem;
    restore_e |= r->kind == Kind::kRestoreE;
    double_final |= r->kind == Kind::kDoubleFinal;
  }
  std::vector<std::string> out;
  size_t n = stem.size();
  bool doubled = n >= 2 && stem[n - 1] == stem[n - 2] && IsLetter(stem[n - 1]);
  if (undouble && doubled) out.push_back(stem.substr(0, n - 1));
  if (restore_e && n > 0 && stem.back() != 'e') out.push_back(stem + "e");
  if (undouble && restore_e && doubled) out.push_back(stem.substr(0, n - 1) + "e");
  if (double_final && n > 0 && IsLetter(stem.back()) && !IsVowel(stem.back())) {
    out.push_back(stem + stem.back());
  }
  return out;
}

bool IsVerbBase(const Analysis &a) {
  if (a.pos != Pos::kV) return false;
  auto tense = a.features.Get(FeatureSet::kTense);
  return !tense || *tense == "INF";
}

Recipe CarryRecipe(const Analysis &stem) {
  Recipe r = stem.recipe;
  if (!r.en && !r.replace && !r.note) r.en = stem.lemma;
  return r;
}

void AddUnique(std::vector<Analysis> &out, Analysis a) {
  for (const Analysis &b : out) {
    if (b.lemma == a.lemma && b.pos == a.pos && b.features == a.features &&
        b.recipe == a.recipe && b.parts == a.parts) {
      return;
    }
  }
  out.push_back(std::move(a));
}

// Every position where `rule` applies to `s`.
std::vector<std::string> ApplyMedial(const VariantRule &rule, const std::string &s) {
  std::vector<std::string> out;
  switch (rule.kind) {
    case Kind::kDropE:
      if (s.size() > 2 && s.back() == 'e') {
        out.push_back(s.substr(0, s.size() - 1));
      } else if (s.size() > 3 && s.ends_with("es")) {
        out.push_back(s.substr(0, s.size() - 2) + "s");
      }
      break;
    case Kind::kUndouble:
      for (size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == s[i + 1] && IsLetter(s[i])) {
          out.push_back(s.substr(0, i) + s.substr(i + 1));
        }
      }
      break;
    case Kind::kReplace: {
      std::string from = rule.from;
      bool at_end = !from.empty() && from.back() == '$';
      bool at_start = !from.empty() && from.front() == '^';
      if (at_end) from.pop_back();
      if (at_start) from.erase(0, 1);
      if (from.empty()) break;
      for (size_t pos = s.find(from); pos != std::string::npos;
           pos = s.find(from, pos + 1)) {
        if (at_end && pos + from.size() != s.size()) continue;
        if (at_start && pos != 0) continue;
        out.push_back(s.substr(0, pos) + rule.to + s.substr(pos + from.size()));
      }
      break;
    }
    default:
      break;
  }
  return out;
}

// Closure of `word` under at most one application of each rule.
std::vector<std::string> MedialForms(const std::string &word,
                                     const std::vector<const VariantRule *> &rules) {
  std::vector<std::string> forms = {word};
  for (const VariantRule *rule : rules) {
    size_t n = forms.size();
    for (size_t i = 0; i < n; ++i) {
      for (std::string &edited : ApplyMedial(*rule, forms[i])) {
        if (std::find(forms.begin(), forms.end(), edited) == forms.end()) {
          forms.push_back(std::move(edited));
        }
      }
    }
  }
  forms.erase(forms.begin());
  return forms;
}

std::vector<const VariantRule *> Select(const VariantConfig &config,
                                        std::initializer_list<Kind> kinds,
                                        bool prefix_only) {
  std::vector<const VariantRule *> out;
  for (const VariantRule &r : config.rules()) {
    if (!r.enabled || r.prefix_only != prefix_only) continue;
    if (std::find(kinds.begin(), kinds.end(), r.kind) != kinds.end()) out.push_back(&r);
  }
  return out;
}

}  // namespace

std::string VariantRule::Id() const {
  switch (kind) {
    case Kind::kStrip: return "suffix:-" + from;
    case Kind::kUndoubleStem: return "repair:undouble";
    case Kind::kRestoreE: return "repair:restore-e";
    case Kind::kDoubleFinal: return "repair:double-final";
    case Kind::kDropE: return "medial:drop-e";
    case Kind::kUndouble: return "medial:undouble";
    case Kind::kReplace: return "medial:" + from + ">" + to;
    case Kind::kPrefix: return "prefix:" + from + "-";
  }
  return "?";
}

VariantConfig VariantConfig::Parse(std::string_view text) {
  VariantConfig config;
  size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string> f = SplitWhitespace(line);
    auto fail = [&](const std::string &msg) {
      throw VariantConfigError("variants:" + std::to_string(line_no) + ": " + msg);
    };
    VariantRule rule;
    // Trailing flags.
    while (f.size() > 1 && (f.back() == "off" || f.back() == "prefix-only")) {
      if (f.back() == "off") rule.enabled = false;
      if (f.back() == "prefix-only") rule.prefix_only = true;
      f.pop_back();
    }
    const std::string &group = f[0];
    if (group == "suffix") {
      if (f.size() != 4 || f[1] != "strip") fail("expected: suffix strip <ending> <bundle>");
      rule.group = VariantGroup::kSuffix;
      rule.kind = Kind::kStrip;
      rule.from = ToLower(f[2]);
      std::vector<std::string_view> items = SplitUnquoted(f[3], '+');
      auto verify = ParsePos(items[0]);
      if (!verify) fail("unknown POS tag '" + std::string(items[0]) + "'");
      rule.verify_pos = *verify;
      try {
        rule.emit = FeatureSet::Parse(f[3].substr(items[0].size()));
      } catch (const FeatureError &e) {
        fail(e.what());
      }
    } else if (group == "repair") {
      if (f.size() != 2) fail("expected: repair <edit>");
      rule.group = VariantGroup::kSuffix;
      if (f[1] == "undouble") rule.kind = Kind::kUndoubleStem;
      else if (f[1] == "restore-e") rule.kind = Kind::kRestoreE;
      else if (f[1] == "double-final") rule.kind = Kind::kDoubleFinal;
      else fail("unknown repair '" + f[1] + "'");
    } else if (group == "medial") {
      rule.group = VariantGroup::kMedial;
      if (f.size() == 2 && f[1] == "drop-e") {
        rule.kind = Kind::kDropE;
      } else if (f.size() == 2 && f[1] == "undouble") {
        rule.kind = Kind::kUndouble;
      } else if (f.size() == 4 && f[1] == "replace") {
        rule.kind = Kind::kReplace;
        rule.from = ToLower(f[2]);
        rule.to = ToLower(f[3]);
      } else {
        fail("expected: medial drop-e | undouble | replace <from> <to>");
      }
    } else if (group == "prefix") {
      if (f.size() != 2) fail("expected: prefix <prefix>");
      rule.group = VariantGroup::kPrefix;
      rule.kind = Kind::kPrefix;
      rule.from = ToLower(f[1]);
    } else {
      fail("unknown rule group '" + group + "'");
    }
    if (rule.prefix_only && rule.group != VariantGroup::kMedial) {
      fail("prefix-only applies to medial rules");
    }
    config.rules_.push_back(std::move(rule));
  }
  return config;
}

VariantConfig VariantConfig::Load(const std::string &path) {
  try {
    return Parse(ReadFile(path));
  } catch (const VariantConfigError &e) {
    throw VariantConfigError(path + ": " + e.what());
  }
}

std::vector<std::string> VariantConfig::Prefixes() const {
  std::vector<std::string> out;
  for (const VariantRule &r : rules_) {
    if (r.enabled && r.kind == Kind::kPrefix) out.push_back(r.from);
  }
  return out;
}

std::vector<Analysis> RecognizeSuffix(std::string_view token, const LexiconSet &lex,
                                      const VariantConfig &config) {
  std::vector<Analysis> out;
  std::string key = LookupKey(token);
  std::vector<const VariantRule *> repairs = Select(
      config, {Kind::kUndoubleStem, Kind::kRestoreE, Kind::kDoubleFinal}, false);

  for (const VariantRule &rule : config.rules()) {
    if (!rule.enabled || rule.kind != Kind::kStrip) continue;
    if (!key.ends_with(rule.from) || key.size() < rule.from.size() + 2) continue;
    std::string stem = key.substr(0, key.size() - rule.from.size());

    auto verify = [&](const std::string &candidate) {
      bool found = false;
      for (const Analysis &a : lex.Lookup(candidate)) {
        if (a.pos != rule.verify_pos || !IsVerbBase(a)) continue;
        Analysis r;
        r.surface = std::string(token);
        r.lemma = a.lemma;
        r.pos = a.pos;
        r.features = rule.emit;
        for (const std::string &t : a.features.traits()) r.features.AddTrait(t);
        r.paradigm = a.paradigm;
        r.recipe = CarryRecipe(a);
        r.level = static_cast<int>(VariantGroup::kSuffix);
        r.source = rule.Id();
        r.stem = candidate;
        AddUnique(out, std::move(r));
        found = true;
      }
      return found;
    };

    if (verify(stem)) continue;
    for (const std::string &repaired : RepairStem(stem, repairs)) verify(repaired);
  }
  return out;
}

std::vector<Analysis> RecognizeSpelling(std::string_view token, const LexiconSet &lex,
                                        const VariantConfig &config) {
  std::vector<Analysis> out;
  std::string key = LookupKey(token);
  std::vector<const VariantRule *> rules =
      Select(config, {Kind::kDropE, Kind::kUndouble, Kind::kReplace}, false);
  for (const std::string &form : MedialForms(key, rules)) {
    for (const Analysis &a : lex.Lookup(form)) {
      Analysis r = a;
      r.surface = std::string(token);
      r.recipe = CarryRecipe(a);
      r.level = static_cast<int>(VariantGroup::kMedial);
      r.source = "medial";
      r.stem = form;
      AddUnique(out, std::move(r));
    }
  }
  return out;
}

std::vector<Analysis> RecognizePrefix(std::string_view token, const LexiconSet &lex,
                                      const VariantConfig &config) {
  std::vector<Analysis> out;
  std::string key = LookupKey(token);
  std::vector<const VariantRule *> scoped =
      Select(config, {Kind::kDropE, Kind::kUndouble, Kind::kReplace}, true);

  for (const VariantRule &rule : config.rules()) {
    if (!rule.enabled || rule.kind != Kind::kPrefix) continue;
    if (!key.starts_with(rule.from) || key.size() < rule.from.size() + 2) continue;
    std::string rest = key.substr(rule.from.size());

    auto verify = [&](const std::string &candidate) {
      bool found = false;
      for (const Analysis &a : lex.Lookup(candidate)) {
        if (a.pos != Pos::kV || a.recipe.prefix) continue;
        Analysis r = a;
        r.surface = std::string(token);
        r.recipe = CarryRecipe(a);
        r.recipe.prefix = rule.from;
        r.level = static_cast<int>(VariantGroup::kPrefix);
        r.source = rule.Id();
        r.stem = candidate;
        AddUnique(out, std::move(r));
        found = true;
      }
      return found;
    };

    if (verify(rest)) continue;
    for (const std::string &form : MedialForms(rest, scoped)) verify(form);
  }
  return out;
}

std::vector<Analysis> Recognize(std::string_view token, const LexiconSet &lex,
                                const VariantConfig &config) {
  std::vector<Analysis> found = RecognizeSuffix(token, lex, config);
  if (!found.empty()) return found;
  found = RecognizeSpelling(token, lex, config);
  if (!found.empty()) return found;
  return RecognizePrefix(token, lex, config);
}

}  // namespace earlymod
