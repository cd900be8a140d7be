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

#include "earlymod/lexicon.h"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>

#include "earlymod/text.h"

namespace earlymod {
namespace {

std::string Unquote(std::string_view value, std::string_view source, size_t line) {
  value = Trim(value);
  if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
    value = value.substr(1, value.size() - 2);
  }
  if (value.find('"') != std::string_view::npos) {
    throw LexiconError(std::string(source), line,
                       "stray quote in value '" + std::string(value) + "'");
  }
  return std::string(Trim(value));
}

std::string Quote(std::string_view value) { return "\"" + std::string(value) + "\""; }

// Attribute slots of a Recipe, keyed by their dictionary names.
std::optional<std::string> *RecipeSlot(Recipe &recipe, std::string_view key) {
  if (key == "EN") return &recipe.en;
  if (key == "REPLACE") return &recipe.replace;
  if (key == "NOTE") return &recipe.note;
  if (key == "PREINSERT" || key == "PRE") return &recipe.preinsert;
  if (key == "POSTINSERT") return &recipe.postinsert;
  if (key == "PREFIX") return &recipe.prefix;
  return nullptr;
}

bool IsRecipeKey(std::string_view key) {
  Recipe probe;
  return RecipeSlot(probe, key) != nullptr;
}

struct ItemSink {
  FeatureSet *features;
  Recipe *recipe;          // null inside contraction parts
  std::optional<std::string> *part_en;  // set inside parts
  std::optional<std::string> *flx;
  bool *unamb;
  int *part_marker;        // 1 or 2 inside parts
};

void ApplyItems(const std::vector<std::string_view> &items, size_t first,
                const ItemSink &sink, std::string_view source, size_t line) {
  std::set<std::string> seen_keys;
  for (size_t i = first; i < items.size(); ++i) {
    std::string_view item = Trim(items[i]);
    if (item.empty()) continue;
    size_t eq = item.find('=');
    std::string key(Trim(eq == std::string_view::npos ? item : item.substr(0, eq)));
    auto duplicate = [&]() {
      throw LexiconError(std::string(source), line, "duplicate attribute " + key);
    };
    if (eq != std::string_view::npos) {
      std::string value = Unquote(item.substr(eq + 1), source, line);
      std::string slot_key = key == "PRE" ? "PREINSERT" : key;
      if (key == "FLX" && sink.flx != nullptr) {
        if (!seen_keys.insert(slot_key).second) duplicate();
        *sink.flx = value;
        continue;
      }
      if (key == "EN" && sink.part_en != nullptr) {
        if (!seen_keys.insert(slot_key).second) duplicate();
        *sink.part_en = value;
        continue;
      }
      if (sink.recipe != nullptr) {
        if (auto *slot = RecipeSlot(*sink.recipe, key)) {
          if (!seen_keys.insert(slot_key).second) duplicate();
          *slot = value;
          continue;
        }
      } else if (IsRecipeKey(key) || key == "FLX") {
        throw LexiconError(std::string(source), line,
                           "attribute " + key + " is not allowed inside a contraction part");
      }
      if (!seen_keys.insert(key).second) duplicate();
      if (!sink.features->Add(std::string(key) + "=" + value)) duplicate();
      continue;
    }
    if (key == "UNAMB" && sink.unamb != nullptr) {
      if (*sink.unamb) duplicate();
      *sink.unamb = true;
      continue;
    }
    if ((key == "Part1" || key == "Part2") && sink.part_marker != nullptr) {
      if (*sink.part_marker != 0) duplicate();
      *sink.part_marker = key == "Part1" ? 1 : 2;
      continue;
    }
    if (sink.features->HasTrait(key)) duplicate();
    if (!sink.features->Add(key)) {
      throw LexiconError(std::string(source), line,
                         "conflicting feature " + key + " (axis already set)");
    }
  }
}

Pos ParsePosOrThrow(std::string_view tag, std::string_view source, size_t line) {
  tag = Trim(tag);
  auto pos = ParsePos(tag);
  if (!pos) {
    throw LexiconError(std::string(source), line,
                       "unknown POS tag '" + std::string(tag) + "'");
  }
  return *pos;
}

Part ParsePart(std::string_view inner, int expected, std::string_view source,
               size_t line) {
  std::vector<std::string_view> fields = SplitUnquoted(inner, ',');
  if (fields.size() < 2 || fields.size() > 3) {
    throw LexiconError(std::string(source), line,
                       "contraction part needs surface,lemma,POS: <" +
                           std::string(inner) + ">");
  }
  Part part;
  part.surface = std::string(Trim(fields[0]));
  part.lemma = fields.size() == 3 ? std::string(Trim(fields[1])) : part.surface;
  std::vector<std::string_view> items = SplitUnquoted(fields.back(), '+');
  part.pos = ParsePosOrThrow(items[0], source, line);
  int marker = 0;
  ItemSink sink{&part.features, nullptr, &part.en, nullptr, nullptr, &marker};
  ApplyItems(items, 1, sink, source, line);
  if (marker != 0 && marker != expected) {
    throw LexiconError(std::string(source), line,
                       "contraction part " + std::to_string(expected) +
                           " is marked Part" + std::to_string(marker));
  }
  return part;
}

std::string FormatPart(const Part &part, int index) {
  std::string out = "<" + part.surface + "," + part.lemma + "," +
                    std::string(PosName(part.pos));
  std::string feats = part.features.Format();
  if (!feats.empty()) out += "+" + feats;
  out += "+Part" + std::to_string(index);
  if (part.en) out += "+EN=" + Quote(*part.en);
  return out + ">";
}

}  // namespace

LexiconError::LexiconError(std::string source, size_t line,
                           const std::string &message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
      source_(std::move(source)),
      line_(line) {}

void ValidateEntry(const LexEntry &e, std::string_view source, size_t line) {
  auto fail = [&](const std::string &msg) {
    throw LexiconError(std::string(source), line, msg);
  };
  if (e.surface.empty()) fail("empty surface");
  if (e.recipe.en && e.recipe.replace) fail("EN and REPLACE are mutually exclusive");
  if (!e.parts.empty()) {
    const Recipe &r = e.recipe;
    if (r.en || r.replace || r.preinsert || r.postinsert || r.prefix) {
      fail("contraction entries transcribe through their parts only");
    }
    if (e.flx) fail("contraction entries cannot carry FLX");
  }
  if (e.flx) {
    if (!IsInflectable(e.pos)) {
      fail("FLX on non-inflectable category " + std::string(PosName(e.pos)));
    }
    if (e.lemma != e.surface) fail("FLX entries must list the lemma as surface");
  }
  if (e.recipe.prefix && !e.recipe.en) fail("PREFIX requires EN");
}

std::optional<LexEntry> ParseEntry(std::string_view line, size_t line_no,
                                   std::string_view source) {
  line = Trim(line);
  if (line.empty() || line.front() == '#') return std::nullopt;
  if (std::count(line.begin(), line.end(), '"') % 2 != 0) {
    throw LexiconError(std::string(source), line_no, "unbalanced quotes");
  }
  size_t comma = line.find(',');
  if (comma == std::string_view::npos) {
    throw LexiconError(std::string(source), line_no, "missing ',' after surface");
  }
  LexEntry entry;
  entry.surface = std::string(Trim(line.substr(0, comma)));
  entry.lemma = entry.surface;
  std::string_view rest = Trim(line.substr(comma + 1));

  if (!rest.empty() && rest.front() == '<') {
    size_t i = 0;
    while (i < rest.size() && rest[i] == '<') {
      bool quoted = false;
      size_t j = i + 1;
      for (; j < rest.size(); ++j) {
        if (rest[j] == '"') quoted = !quoted;
        if (rest[j] == '>' && !quoted) break;
      }
      if (j >= rest.size()) {
        throw LexiconError(std::string(source), line_no, "unterminated contraction part");
      }
      entry.parts.push_back(ParsePart(rest.substr(i + 1, j - i - 1),
                                      static_cast<int>(entry.parts.size()) + 1,
                                      source, line_no));
      i = j + 1;
      while (i < rest.size() && (rest[i] == ' ' || rest[i] == '\t')) ++i;
    }
    std::string_view tail = Trim(rest.substr(i));
    if (!tail.empty()) {
      if (tail.front() != '+') {
        throw LexiconError(std::string(source), line_no,
                           "unexpected text after contraction parts");
      }
      std::vector<std::string_view> items = SplitUnquoted(tail.substr(1), '+');
      ItemSink sink{&entry.features, &entry.recipe, nullptr, &entry.flx,
                    &entry.unamb, nullptr};
      ApplyItems(items, 0, sink, source, line_no);
    }
    entry.pos = entry.parts.front().pos;
  } else {
    std::vector<std::string_view> fields = SplitUnquoted(rest, ',');
    if (fields.size() > 2) {
      throw LexiconError(std::string(source), line_no, "too many ',' fields");
    }
    if (fields.size() == 2) entry.lemma = std::string(Trim(fields[0]));
    std::vector<std::string_view> items = SplitUnquoted(fields.back(), '+');
    entry.pos = ParsePosOrThrow(items[0], source, line_no);
    ItemSink sink{&entry.features, &entry.recipe, nullptr, &entry.flx,
                  &entry.unamb, nullptr};
    ApplyItems(items, 1, sink, source, line_no);
  }
  ValidateEntry(entry, source, line_no);
  return entry;
}

std::string FormatEntry(const LexEntry &e) {
  std::string out = e.surface + ",";
  if (!e.parts.empty()) {
    for (size_t i = 0; i < e.parts.size(); ++i) {
      if (i > 0) out += " ";
      out += FormatPart(e.parts[i], static_cast<int>(i) + 1);
    }
  } else {
    if (e.lemma != e.surface) out += e.lemma + ",";
    out += std::string(PosName(e.pos));
  }
  std::string feats = e.features.Format();
  if (!feats.empty()) out += "+" + feats;
  if (e.flx) out += "+FLX=" + *e.flx;
  const Recipe &r = e.recipe;
  if (r.preinsert) out += "+PREINSERT=" + Quote(*r.preinsert);
  if (r.prefix) out += "+PREFIX=" + Quote(*r.prefix);
  if (r.en) out += "+EN=" + Quote(*r.en);
  if (r.replace) out += "+REPLACE=" + Quote(*r.replace);
  if (r.postinsert) out += "+POSTINSERT=" + Quote(*r.postinsert);
  if (r.note) out += "+NOTE=" + Quote(*r.note);
  if (e.unamb) out += "+UNAMB";
  return out;
}

DictionarySource LoadDictionary(const std::string &path, int priority) {
  DictionarySource src;
  src.path = path;
  src.name = std::filesystem::path(path).stem().string();
  src.priority = priority;
  src.text = ReadFile(path);
  return src;
}

LexiconSet LexiconSet::Compile(const std::vector<DictionarySource> &sources,
                               std::shared_ptr<const ParadigmTable> paradigms) {
  LexiconSet set;
  if (paradigms) set.paradigms_ = std::move(paradigms);

  std::map<int, std::string> priorities;
  for (const DictionarySource &src : sources) {
    auto [it, inserted] = priorities.emplace(src.priority, src.name);
    if (!inserted) {
      throw LexiconError(src.name, 0,
                         "layer priority " + std::to_string(src.priority) +
                             " already used by " + it->second);
    }
  }

  std::vector<const DictionarySource *> ordered;
  for (const DictionarySource &src : sources) ordered.push_back(&src);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto *a, const auto *b) { return a->priority > b->priority; });

  for (const DictionarySource *src : ordered) {
    Layer layer;
    layer.priority = src->priority;
    layer.name = src->name;
    std::string_view text = src->text;
    size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
      size_t nl = text.find('\n', pos);
      std::string_view line = text.substr(
          pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
      ++line_no;
      std::optional<LexEntry> parsed = ParseEntry(line, line_no, src->name);
      if (!parsed) continue;
      LexEntry &entry = *parsed;
      entry.priority = src->priority;

      Analysis base;
      base.lemma = entry.lemma;
      base.pos = entry.pos;
      base.features = entry.features;
      base.paradigm = entry.flx.value_or("");
      base.recipe = entry.recipe;
      base.parts = entry.parts;
      base.unamb = entry.unamb;
      base.level = src->priority;
      base.source = src->name;

      std::vector<std::pair<std::string, FeatureSet>> forms;
      if (entry.flx) {
        const Paradigm *paradigm = set.paradigms_->Find(*entry.flx);
        if (paradigm == nullptr) {
          throw LexiconError(src->name, line_no, "unknown paradigm " + *entry.flx);
        }
        try {
          forms = Expand(entry.surface, *paradigm);
        } catch (const InflectionError &e) {
          throw LexiconError(src->name, line_no, e.what());
        }
      } else {
        forms.emplace_back(entry.surface, FeatureSet());
      }

      for (auto &[form, bundle] : forms) {
        Analysis a = base;
        a.surface = form;
        a.features = entry.features.Merged(bundle);
        std::string key = LookupKey(form);
        if (key.find(' ') != std::string::npos) {
          MultiwordEntry mw{SplitWhitespace(key), a};
          set.multiword_[mw.tokens.front()].push_back(std::move(mw));
        } else {
          layer.index[key].push_back(std::move(a));
        }
        ++layer.expanded_forms;
      }

      if (entry.parts.empty()) {
        GenForm gen;
        gen.form = entry.surface;
        gen.features = entry.features;
        gen.paradigm = entry.flx.value_or("");
        gen.full_form = !entry.flx.has_value();
        gen.has_recipe = !entry.recipe.empty();
        set.generation_[GenKey(entry.lemma, entry.pos)].push_back(std::move(gen));
      }
      layer.entries.push_back(std::move(entry));
    }
    set.layers_.push_back(std::move(layer));
  }

  for (auto &[first, entries] : set.multiword_) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const MultiwordEntry &a, const MultiwordEntry &b) {
                       if (a.tokens.size() != b.tokens.size()) {
                         return a.tokens.size() > b.tokens.size();
                       }
                       return a.analysis.level > b.analysis.level;
                     });
  }
  return set;
}

std::vector<Analysis> LexiconSet::Lookup(std::string_view token) const {
  if (token.empty()) return {};
  std::string key = LookupKey(token);
  for (const Layer &layer : layers_) {
    auto it = layer.index.find(key);
    if (it == layer.index.end()) continue;
    std::vector<Analysis> out = it->second;
    for (Analysis &a : out) a.surface = std::string(token);
    return out;
  }
  return {};
}

std::optional<int> LexiconSet::LookupLevel(std::string_view token) const {
  std::string key = LookupKey(token);
  for (const Layer &layer : layers_) {
    if (layer.index.count(key)) return layer.priority;
  }
  return std::nullopt;
}

std::vector<MultiwordMatch> LexiconSet::MatchMultiword(
    const std::vector<std::string> &tokens) const {
  std::vector<MultiwordMatch> out;
  if (tokens.empty()) return out;
  auto it = multiword_.find(LookupKey(tokens.front()));
  if (it == multiword_.end()) return out;
  for (const MultiwordEntry &mw : it->second) {
    if (mw.tokens.size() > tokens.size()) continue;
    bool match = true;
    for (size_t i = 0; i < mw.tokens.size() && match; ++i) {
      match = LookupKey(tokens[i]) == mw.tokens[i];
    }
    if (!match) continue;
    if (!out.empty() && out.back().length == mw.tokens.size()) {
      // Same length: only the highest level answers.
      if (out.back().analyses.front().level == mw.analysis.level) {
        out.back().analyses.push_back(mw.analysis);
      }
      continue;
    }
    out.push_back(MultiwordMatch{mw.tokens.size(), {mw.analysis}});
  }
  for (MultiwordMatch &m : out) {
    std::string surface;
    for (size_t i = 0; i < m.length; ++i) {
      if (i > 0) surface += " ";
      surface += tokens[i];
    }
    for (Analysis &a : m.analyses) a.surface = surface;
  }
  return out;
}

std::string LexiconSet::GenKey(std::string_view lemma, Pos pos) {
  return LookupKey(lemma) + "\t" + std::string(PosName(pos));
}

std::optional<std::string> LexiconSet::ParadigmOf(std::string_view lemma,
                                                  Pos pos) const {
  auto it = generation_.find(GenKey(lemma, pos));
  if (it == generation_.end()) return std::nullopt;
  const GenForm *fallback = nullptr;
  for (const GenForm &g : it->second) {
    if (g.paradigm.empty()) continue;
    if (!g.has_recipe) return g.paradigm;
    if (fallback == nullptr) fallback = &g;
  }
  if (fallback != nullptr) return fallback->paradigm;
  return std::nullopt;
}

std::optional<std::string> LexiconSet::Generate(
    std::string_view lemma, Pos pos, const FeatureSet &features,
    std::string_view fallback_paradigm) const {
  FeatureSet wanted = InflectionalProjection(pos, features);

  std::vector<const GenForm *> forms;
  if (auto it = generation_.find(GenKey(lemma, pos)); it != generation_.end()) {
    for (const GenForm &g : it->second) {
      if (!g.has_recipe) forms.push_back(&g);
    }
    if (forms.empty()) {
      for (const GenForm &g : it->second) forms.push_back(&g);
    }
  }

  for (const GenForm *g : forms) {
    if (g->full_form && InflectionalProjection(pos, g->features) == wanted) {
      return g->form;
    }
  }
  for (const GenForm *g : forms) {
    if (g->paradigm.empty()) continue;
    const Paradigm *p = paradigms_->Find(g->paradigm);
    if (p == nullptr) continue;
    try {
      return Transfer(wanted, g->form, *p);
    } catch (const InflectionError &) {
    }
  }
  const GenForm *best = nullptr;
  size_t best_score = 0;
  for (const GenForm *g : forms) {
    if (!g->full_form) continue;
    FeatureSet have = InflectionalProjection(pos, g->features);
    if (!have.CompatibleWith(wanted)) continue;
    size_t score = 0;
    for (const auto &[k, v] : wanted.values()) score += have.Has(k, v) ? 1 : 0;
    if (score > best_score) {
      best = g;
      best_score = score;
    }
  }
  if (best != nullptr) return best->form;

  if (!fallback_paradigm.empty()) {
    if (const Paradigm *p = paradigms_->Find(fallback_paradigm)) {
      try {
        return Transfer(wanted, lemma, *p);
      } catch (const InflectionError &) {
      }
    }
  }
  if (IsBaseBundle(wanted)) return std::string(lemma);
  return std::nullopt;
}

size_t LexiconSet::multiword_count() const {
  size_t n = 0;
  for (const auto &[k, v] : multiword_) n += v.size();
  return n;
}

}  // namespace earlymod
