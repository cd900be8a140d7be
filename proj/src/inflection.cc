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

#include <algorithm>
#include <charconv>
#include <set>

#include "earlymod/text.h"

namespace earlymod {

EditScript EditScript::Parse(std::string_view text) {
  text = Trim(text);
  EditScript script;
  size_t i = 0;
  if (i < text.size() && text[i] == '-') {
    ++i;
    size_t b = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == b) throw InflectionError("bad edit script '" + std::string(text) + "'");
    std::from_chars(text.data() + b, text.data() + i, script.delete_count);
  }
  if (i < text.size() && text[i] == '*') {
    script.repeat_final = true;
    ++i;
  }
  if (i >= text.size() || text[i] != '+') {
    throw InflectionError("bad edit script '" + std::string(text) +
                          "': expected '+'");
  }
  script.append = std::string(text.substr(i + 1));
  return script;
}

std::string EditScript::Format() const {
  std::string out;
  if (delete_count > 0) out += "-" + std::to_string(delete_count);
  if (repeat_final) out += "*";
  out += "+" + append;
  return out;
}

std::string EditScript::Apply(std::string_view lemma) const {
  if (static_cast<size_t>(delete_count) >= lemma.size() && delete_count > 0) {
    throw InflectionError("lemma '" + std::string(lemma) + "' too short for " +
                          Format());
  }
  std::string out(lemma.substr(0, lemma.size() - delete_count));
  if (repeat_final) {
    if (out.empty()) {
      throw InflectionError("cannot repeat final letter of empty stem");
    }
    out.push_back(out.back());
  }
  out += append;
  return out;
}

const ParadigmRule *Paradigm::Match(const FeatureSet &bundle) const {
  const ParadigmRule *best = nullptr;
  for (const ParadigmRule &rule : rules) {
    if (rule.bundle == bundle) return &rule;
    if (!rule.bundle.SubsetOf(bundle)) continue;
    if (rule.bundle.empty() && !bundle.empty()) continue;
    if (best == nullptr || rule.bundle.size() > best->bundle.size()) best = &rule;
  }
  return best;
}

ParadigmTable ParadigmTable::Parse(std::string_view text) {
  ParadigmTable table;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;

    auto fail = [line_no](const std::string &msg) {
      throw InflectionError("paradigms:" + std::to_string(line_no) + ": " + msg);
    };
    size_t colon = line.find(':');
    if (colon == std::string_view::npos) fail("missing ':'");
    std::string name(Trim(line.substr(0, colon)));
    std::string_view body = Trim(line.substr(colon + 1));
    if (name.empty()) fail("empty paradigm name");

    if (body.starts_with("alias ")) {
      table.AddAlias(name, std::string(Trim(body.substr(6))));
      continue;
    }
    size_t eq = body.find('=');
    if (eq == std::string_view::npos) fail("missing '='");
    ParadigmRule rule;
    try {
      rule.bundle = FeatureSet::Parse(body.substr(0, eq));
      rule.script = EditScript::Parse(body.substr(eq + 1));
    } catch (const std::runtime_error &e) {
      fail(e.what());
    }
    if (table.paradigms_.empty() || table.paradigms_.back().name != name) {
      for (const Paradigm &p : table.paradigms_) {
        if (p.name == name) fail("paradigm '" + name + "' is split into two blocks");
      }
      table.paradigms_.push_back(Paradigm{name, {}});
    }
    for (const ParadigmRule &r : table.paradigms_.back().rules) {
      if (r.bundle == rule.bundle) {
        fail("duplicate bundle '" + rule.bundle.Format() + "' in " + name);
      }
    }
    table.paradigms_.back().rules.push_back(std::move(rule));
  }
  for (const auto &[alias, target] : table.aliases_) {
    if (table.Find(target) == nullptr) {
      throw InflectionError("alias " + alias + " targets unknown paradigm " + target);
    }
  }
  return table;
}

ParadigmTable ParadigmTable::Load(const std::string &path) {
  try {
    return Parse(ReadFile(path));
  } catch (const InflectionError &e) {
    throw InflectionError(path + ": " + e.what());
  }
}

std::string ParadigmTable::Format() const {
  std::string out;
  for (const Paradigm &p : paradigms_) {
    for (const ParadigmRule &r : p.rules) {
      out += p.name + ": " + r.bundle.Format() + " = " + r.script.Format() + "\n";
    }
  }
  for (const auto &[alias, target] : aliases_) {
    out += alias + ": alias " + target + "\n";
  }
  return out;
}

const Paradigm *ParadigmTable::Find(std::string_view name) const {
  for (const auto &[alias, target] : aliases_) {
    if (alias == name) {
      name = target;
      break;
    }
  }
  for (const Paradigm &p : paradigms_) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

void ParadigmTable::Add(Paradigm paradigm) {
  paradigms_.push_back(std::move(paradigm));
}

void ParadigmTable::AddAlias(std::string alias, std::string target) {
  aliases_.emplace_back(std::move(alias), std::move(target));
}

FeatureSet InflectionalAxes(const FeatureSet &features) {
  FeatureSet out;
  for (std::string_view key :
       {FeatureSet::kTense, FeatureSet::kPerson, FeatureSet::kNumber}) {
    if (auto v = features.Get(key)) out.Set(key, *v);
  }
  return out;
}

std::string Inflect(std::string_view lemma, const Paradigm &paradigm,
                    const FeatureSet &features) {
  const ParadigmRule *rule = paradigm.Match(features);
  if (rule == nullptr) {
    if (features.empty()) return std::string(lemma);
    throw InflectionError("paradigm " + paradigm.name + " has no rule for '" +
                          features.Format() + "'");
  }
  return rule->script.Apply(lemma);
}

std::string Transfer(const FeatureSet &source_features,
                     std::string_view target_lemma,
                     const Paradigm &target_paradigm) {
  return Inflect(target_lemma, target_paradigm, InflectionalAxes(source_features));
}

std::vector<std::pair<std::string, FeatureSet>> Expand(
    std::string_view lemma, const Paradigm &paradigm) {
  std::vector<std::pair<std::string, FeatureSet>> out;
  std::set<std::pair<std::string, FeatureSet>> seen;
  for (const ParadigmRule &rule : paradigm.rules) {
    std::pair<std::string, FeatureSet> item{rule.script.Apply(lemma), rule.bundle};
    if (seen.insert(item).second) out.push_back(std::move(item));
  }
  return out;
}

}  // namespace earlymod
