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

#include "earlymod/pipeline.h"

#include <algorithm>
#include <cctype>

#include "earlymod/text.h"

namespace earlymod {
namespace {

constexpr std::string_view kStatusNames[] = {"transcribed", "ambiguous", "unknown"};
constexpr size_t kMaxMultiword = 4;
constexpr int kManualLevel = -100;

// A unit found in one pass: a token range of the pass text and its
// candidates (none for unknown words).
struct Unit {
  size_t tb = 0;
  size_t te = 0;
  std::vector<Analysis> analyses;
  std::vector<Candidate> candidates;
};

struct PassAnalysis {
  std::vector<Token> tokens;
  std::vector<Unit> units;
  std::vector<std::vector<Analysis>> readings;  // per token
};

// A stretch of the provisional text. Identity segments are verbatim source
// text; the others hold the current text of one span.
struct Seg {
  size_t pb = 0, pe = 0;  // provisional
  size_t sb = 0, se = 0;  // source
  int span = -1;
};

struct State {
  std::string_view source;
  std::string prov;
  std::vector<Seg> segs;
  std::vector<Span> spans;
  std::vector<bool> alive;
  std::vector<ProvenanceEntry> provenance;
  std::vector<std::string> diagnostics;
};

bool OnlySpaceBetween(std::string_view text, const Token &a, const Token &b) {
  if (a.end >= b.begin) return false;
  for (size_t i = a.end; i < b.begin; ++i) {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

std::string NormalizeApostrophe(std::string_view s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s.substr(i, 3) == "\xE2\x80\x99") {
      out += '\'';
      i += 2;
    } else {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
    }
  }
  return out;
}

// Applies the source casing and drops candidates that would not change
// anything (the identity "keep" candidate excepted).
void Recase(std::vector<Candidate> &cands, Casing casing, std::string_view original) {
  std::vector<Candidate> out;
  for (Candidate &c : cands) {
    if (c.source_rule != "keep") {
      c.text = ApplyCasing(c.text, casing);
      if (c.text == original) continue;
    }
    bool seen = std::any_of(out.begin(), out.end(),
                            [&](const Candidate &o) { return o.text == c.text; });
    if (!seen) out.push_back(std::move(c));
  }
  if (out.size() == 1 && out.front().source_rule == "keep") out.clear();
  cands = std::move(out);
}

bool IsHeld(const Span &span) {
  if (span.candidates.size() != 1) return true;
  return span.candidates.front().kind == CandidateKind::kNote;
}

// Hyphenated compounds whose parts are all known words are left alone.
bool KnownCompound(std::string_view word, const LexiconSet &lex) {
  if (word.find('-') == std::string_view::npos) return false;
  size_t b = 0;
  while (b <= word.size()) {
    size_t e = word.find('-', b);
    if (e == std::string_view::npos) e = word.size();
    if (e == b || !lex.Contains(word.substr(b, e - b))) return false;
    b = e + 1;
  }
  return true;
}

// True when `text` continues at `pos` with " (gloss)", i.e. the note was
// already applied.
bool GlossFollows(std::string_view text, size_t pos, std::string_view gloss) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  std::string want = "(" + std::string(gloss) + ")";
  return text.substr(pos).starts_with(want);
}

PassAnalysis AnalyzeText(std::string_view text, const Engine &engine,
                         std::vector<std::string> *diagnostics) {
  const LexiconSet &lex = *engine.lexicon;
  PassAnalysis pa;
  pa.tokens = Tokenize(text);
  const std::vector<Token> &toks = pa.tokens;
  pa.readings.resize(toks.size());

  auto slice = [&](size_t tb, size_t te) {
    return std::string(text.substr(toks[tb].begin, toks[te - 1].end - toks[tb].begin));
  };

  size_t i = 0;
  while (i < toks.size()) {
    const Token &t = toks[i];
    if (t.kind != TokenKind::kWord) {
      ++i;
      continue;
    }

    std::vector<std::string> words = {t.text};
    for (size_t j = i + 1; j < toks.size() && words.size() < kMaxMultiword; ++j) {
      if (toks[j].kind != TokenKind::kWord || !OnlySpaceBetween(text, toks[j - 1], toks[j])) {
        break;
      }
      words.push_back(toks[j].text);
    }
    if (std::optional<Candidate> c = ConcatDisjoint(words, lex)) {
      size_t te = i + c->token_end;
      bool clipped = te < toks.size() && toks[te].kind == TokenKind::kApostropheSuffix &&
                     Adjacent(toks[te - 1], toks[te]);
      std::string original = slice(i, te);
      std::vector<Candidate> cands = {*c};
      Recase(cands, t.casing, original);
      if (!clipped && !cands.empty()) {
        Unit u{i, te, {}, std::move(cands)};
        if (c->token_end > 1) {
          std::vector<MultiwordMatch> m = lex.MatchMultiword(words);
          if (!m.empty()) u.analyses = m.front().analyses;
        } else {
          u.analyses = lex.Lookup(t.text);
        }
        for (size_t k = i; k < te; ++k) pa.readings[k] = lex.Lookup(toks[k].text);
        pa.units.push_back(std::move(u));
        i = te;
        continue;
      }
    }

    if (i + 1 < toks.size() && toks[i + 1].kind == TokenKind::kApostropheSuffix &&
        Adjacent(t, toks[i + 1])) {
      std::string suffix = NormalizeApostrophe(toks[i + 1].text);
      if (suffix == "'d" || suffix == "'t") {
        std::vector<Candidate> cands = ResolveElision(t.text, suffix, lex, engine.variants);
        std::string original = slice(i, i + 2);
        Recase(cands, t.casing, original);
        if (!cands.empty()) {
          pa.readings[i] = lex.Lookup(t.text);
          pa.units.push_back(Unit{i, i + 2, pa.readings[i], std::move(cands)});
          i += 2;
          continue;
        }
      }
    }

    std::vector<Analysis> analyses = lex.Lookup(t.text);
    if (analyses.empty()) analyses = Recognize(t.text, lex, engine.variants);
    pa.readings[i] = analyses;
    if (analyses.empty()) {
      if (!KnownCompound(t.text, lex)) pa.units.push_back(Unit{i, i + 1, {}, {}});
    } else {
      std::vector<Candidate> cands = TranscribeAnalyses(analyses, t.text, lex, diagnostics);
      std::erase_if(cands, [&](const Candidate &c) {
        return c.kind == CandidateKind::kNote && GlossFollows(text, t.end, c.gloss);
      });
      Recase(cands, t.casing, t.text);
      if (!cands.empty()) pa.units.push_back(Unit{i, i + 1, analyses, std::move(cands)});
    }
    ++i;
  }
  return pa;
}

// Index of the first segment whose provisional range ends after `pos`.
size_t SegAt(const std::vector<Seg> &segs, size_t pos) {
  auto it = std::upper_bound(segs.begin(), segs.end(), pos,
                             [](size_t p, const Seg &s) { return p < s.pe; });
  return static_cast<size_t>(it - segs.begin());
}

// Runs one pass. Returns true when the provisional text changed (or, for a
// dry run, would change).
bool RunPass(State &st, const Engine &engine, int pass, bool rewrites, bool dry_run) {
  std::vector<std::string> diags;
  PassAnalysis pa = AnalyzeText(st.prov, engine, &diags);
  if (!dry_run) {
    for (std::string &d : diags) {
      if (std::find(st.diagnostics.begin(), st.diagnostics.end(), d) == st.diagnostics.end()) {
        st.diagnostics.push_back(std::move(d));
      }
    }
  }
  const std::vector<Token> &toks = pa.tokens;
  const size_t n = toks.size();

  std::vector<bool> blocked(n, false);
  for (size_t k = 0; k < n; ++k) {
    if (toks[k].kind == TokenKind::kApostropheSuffix) blocked[k] = true;
    size_t s = SegAt(st.segs, toks[k].begin);
    if (s < st.segs.size() && st.segs[s].span >= 0 && IsHeld(st.spans[st.segs[s].span])) {
      blocked[k] = true;
    }
  }

  auto touched = [&](size_t pb, size_t pe) {
    std::pair<size_t, size_t> r{SegAt(st.segs, pb), SegAt(st.segs, pe - 1) + 1};
    return r;
  };

  std::vector<Unit> accepted;
  for (Unit &u : pa.units) {
    for (size_t k = u.tb; k < u.te; ++k) blocked[k] = true;
    auto [a, b] = touched(toks[u.tb].begin, toks[u.te - 1].end);
    bool identity = true, held = false;
    for (size_t s = a; s < b; ++s) {
      if (st.segs[s].span < 0) continue;
      identity = false;
      held |= IsHeld(st.spans[st.segs[s].span]);
    }
    bool chain = !held && u.candidates.size() == 1 &&
                 u.candidates.front().kind != CandidateKind::kNote;
    if (identity || chain) accepted.push_back(std::move(u));
  }

  if (rewrites) {
    std::vector<WindowToken> window(n);
    for (size_t k = 0; k < n; ++k) {
      window[k].text = toks[k].text;
      window[k].is_word = toks[k].kind == TokenKind::kWord;
      window[k].spaced = k == 0 || toks[k - 1].end != toks[k].begin;
      window[k].analyses = pa.readings[k];
      if (window[k].is_word && window[k].analyses.empty()) {
        window[k].analyses = engine.lexicon->Lookup(toks[k].text);
      }
      window[k].eligible = !blocked[k];
    }
    for (size_t k = 0; k < n;) {
      std::span<const WindowToken> w(window.data() + k, n - k);
      std::optional<Candidate> c = RewriteSoever(w, engine.triggers);
      if (!c) c = RewriteDo(w, *engine.lexicon, engine.triggers);
      if (!c) c = RewriteWhichHuman(w, engine.triggers);
      if (!c) {
        ++k;
        continue;
      }
      Unit u;
      u.tb = k + c->token_begin;
      u.te = k + c->token_end;
      for (size_t j = u.tb; j < u.te; ++j) {
        for (const Analysis &an : window[j].analyses) u.analyses.push_back(an);
      }
      c->text = ApplyCasing(c->text, toks[u.tb].casing);
      u.candidates.push_back(*c);
      for (size_t j = k; j < k + c->token_end; ++j) window[j].eligible = false;
      accepted.push_back(std::move(u));
      k += c->token_end;
    }
    std::sort(accepted.begin(), accepted.end(),
              [](const Unit &x, const Unit &y) { return x.tb < y.tb; });
  }

  std::string new_prov;
  std::vector<Seg> new_segs;
  bool changed = false;
  size_t cur = 0;

  auto emit_range = [&](size_t from, size_t to) {
    for (size_t s = SegAt(st.segs, from); s < st.segs.size() && st.segs[s].pb < to; ++s) {
      const Seg &seg = st.segs[s];
      size_t pb = std::max(from, seg.pb), pe = std::min(to, seg.pe);
      if (pb >= pe) continue;
      Seg out;
      out.pb = new_prov.size();
      out.pe = out.pb + (pe - pb);
      out.span = seg.span;
      if (seg.span < 0) {
        out.sb = seg.sb + (pb - seg.pb);
        out.se = out.sb + (pe - pb);
      } else {
        out.sb = seg.sb;
        out.se = seg.se;
      }
      new_prov += st.prov.substr(pb, pe - pb);
      new_segs.push_back(out);
    }
  };

  for (Unit &u : accepted) {
    size_t upb = toks[u.tb].begin, upe = toks[u.te - 1].end;
    auto [a, b] = touched(upb, upe);
    const Seg &first = st.segs[a];
    const Seg &last = st.segs[b - 1];
    size_t union_pb = first.span >= 0 ? first.pb : upb;
    size_t union_pe = last.span >= 0 ? last.pe : upe;
    if (union_pb < cur) continue;
    size_t sb = first.span >= 0 ? first.sb : first.sb + (union_pb - first.pb);
    size_t se = last.span >= 0 ? last.se : last.sb + (union_pe - last.pb);

    std::string before = st.prov.substr(union_pb, upb - union_pb);
    std::string after = st.prov.substr(upe, union_pe - upe);
    std::string current = st.prov.substr(union_pb, union_pe - union_pb);

    Span span;
    span.begin = sb;
    span.end = se;
    span.original = std::string(st.source.substr(sb, se - sb));
    span.analyses = std::move(u.analyses);
    span.pass = pass;
    for (Candidate &c : u.candidates) {
      c.text = before + c.text + after;
      span.candidates.push_back(std::move(c));
    }
    if (span.candidates.empty()) {
      span.status = SpanStatus::kUnknown;
    } else if (span.candidates.size() == 1) {
      span.status = SpanStatus::kTranscribed;
      span.selected = 0;
    } else {
      span.status = SpanStatus::kAmbiguous;
    }
    std::string replacement = IsHeld(span) ? current : span.candidates.front().text;
    if (replacement != current) changed = true;
    if (dry_run) continue;

    emit_range(cur, union_pb);
    for (size_t s = a; s < b; ++s) {
      if (st.segs[s].span >= 0) st.alive[st.segs[s].span] = false;
    }
    ProvenanceEntry prov;
    prov.pass = pass;
    prov.begin = sb;
    prov.end = se;
    prov.rule = span.candidates.empty() ? "unknown" : span.candidates.front().source_rule;
    prov.from = current;
    prov.to = replacement;
    st.provenance.push_back(std::move(prov));

    int index = static_cast<int>(st.spans.size());
    st.spans.push_back(std::move(span));
    st.alive.push_back(true);
    new_segs.push_back(Seg{new_prov.size(), new_prov.size() + replacement.size(), sb, se, index});
    new_prov += replacement;
    cur = union_pe;
  }
  if (dry_run) return changed;

  emit_range(cur, st.prov.size());
  st.prov = std::move(new_prov);
  st.segs = std::move(new_segs);
  return changed;
}

State Start(std::string_view text) {
  State st;
  st.source = text;
  st.prov = std::string(text);
  if (!text.empty()) st.segs.push_back(Seg{0, text.size(), 0, text.size(), -1});
  return st;
}

AnnotatedDocument Finish(State &st) {
  AnnotatedDocument doc;
  doc.source = std::string(st.source);
  doc.tokens = Tokenize(st.source);
  for (size_t i = 0; i < st.spans.size(); ++i) {
    if (st.alive[i]) doc.spans.push_back(std::move(st.spans[i]));
  }
  std::sort(doc.spans.begin(), doc.spans.end(),
            [](const Span &a, const Span &b) { return a.begin < b.begin; });
  for (Span &span : doc.spans) {
    auto first = std::lower_bound(doc.tokens.begin(), doc.tokens.end(), span.begin,
                                  [](const Token &t, size_t p) { return t.begin < p; });
    auto last = std::lower_bound(first, doc.tokens.end(), span.end,
                                 [](const Token &t, size_t p) { return t.begin < p; });
    span.token_begin = static_cast<size_t>(first - doc.tokens.begin());
    span.token_end = static_cast<size_t>(last - doc.tokens.begin());
    for (Candidate &c : span.candidates) {
      c.token_begin = span.token_begin;
      c.token_end = span.token_end;
    }
  }
  doc.provenance = std::move(st.provenance);
  doc.diagnostics = std::move(st.diagnostics);
  return doc;
}

void CheckSpan(const AnnotatedDocument &doc, size_t span) {
  if (span >= doc.spans.size()) {
    throw SelectionError("span " + std::to_string(span) + " does not exist (" +
                         std::to_string(doc.spans.size()) + " spans)");
  }
}

void CheckIndex(const AnnotatedDocument &doc, size_t span, size_t index) {
  CheckSpan(doc, span);
  const Span &s = doc.spans[span];
  if (index >= s.candidates.size()) {
    throw SelectionError("span " + std::to_string(span) + " ('" + s.original +
                         "'): candidate index " + std::to_string(index) +
                         " out of range (" + std::to_string(s.candidates.size()) +
                         " candidates)");
  }
}

}  // namespace

std::string_view SpanStatusName(SpanStatus status) {
  return kStatusNames[static_cast<int>(status)];
}

std::optional<SpanStatus> ParseSpanStatus(std::string_view name) {
  for (size_t i = 0; i < std::size(kStatusNames); ++i) {
    if (kStatusNames[i] == name) return static_cast<SpanStatus>(i);
  }
  return std::nullopt;
}

AnnotatedDocument Analyze(std::string_view text, const Engine &engine) {
  State st = Start(text);
  RunPass(st, engine, 1, /*rewrites=*/false, /*dry_run=*/false);
  AnnotatedDocument doc = Finish(st);
  doc.pass_count = 0;
  return doc;
}

AnnotatedDocument Transcribe(std::string_view text, const Engine &engine, int max_passes) {
  if (max_passes < 1) throw std::invalid_argument("max_passes must be at least 1");
  State st = Start(text);
  int changing = 0;
  bool fixpoint = false;
  for (int pass = 1; pass <= max_passes; ++pass) {
    if (RunPass(st, engine, pass, true, false)) {
      ++changing;
    } else {
      fixpoint = true;
      break;
    }
  }
  if (!fixpoint && RunPass(st, engine, max_passes + 1, true, true)) {
    st.diagnostics.push_back("no fixpoint after " + std::to_string(max_passes) +
                             " passes; further rewrites pending");
  }
  AnnotatedDocument doc = Finish(st);
  doc.pass_count = std::max(1, changing);
  return doc;
}

std::string ApplySelections(const AnnotatedDocument &doc,
                            const std::map<size_t, size_t> &choices,
                            std::vector<std::string> *warnings) {
  for (const auto &[span, index] : choices) CheckIndex(doc, span, index);
  std::string out;
  size_t pos = 0;
  for (size_t i = 0; i < doc.spans.size(); ++i) {
    const Span &span = doc.spans[i];
    out.append(doc.source, pos, span.begin - pos);
    pos = span.end;
    if (auto it = choices.find(i); it != choices.end()) {
      out += span.candidates[it->second].text;
    } else if (span.selected && *span.selected < span.candidates.size()) {
      out += span.candidates[*span.selected].text;
    } else if (span.candidates.empty()) {
      out += span.original;
    } else {
      out += span.candidates.front().text;
      if (warnings != nullptr && span.candidates.size() > 1) {
        warnings->push_back("span " + std::to_string(i) + " ('" + span.original +
                            "'): no selection, using '" + span.candidates.front().text + "'");
      }
    }
  }
  out.append(doc.source, pos);
  return out;
}

void Select(AnnotatedDocument &doc, size_t span, size_t index) {
  CheckIndex(doc, span, index);
  doc.spans[span].selected = index;
}

void Override(AnnotatedDocument &doc, size_t span, std::string text) {
  CheckSpan(doc, span);
  if (text.empty()) throw SelectionError("override text is empty");
  Span &s = doc.spans[span];
  for (size_t i = 0; i < s.candidates.size(); ++i) {
    if (s.candidates[i].text == text) {
      s.selected = i;
      return;
    }
  }
  Candidate c;
  c.token_begin = s.token_begin;
  c.token_end = s.token_end;
  c.text = std::move(text);
  c.kind = CandidateKind::kWord;
  c.source_rule = "manual";
  c.level = kManualLevel;
  s.candidates.push_back(std::move(c));
  s.selected = s.candidates.size() - 1;
}

SpanCounts CountSpans(const AnnotatedDocument &doc) {
  SpanCounts counts;
  for (const Span &s : doc.spans) {
    switch (s.status) {
      case SpanStatus::kTranscribed: ++counts.transcribed; break;
      case SpanStatus::kAmbiguous: ++counts.ambiguous; break;
      case SpanStatus::kUnknown: ++counts.unknown; break;
    }
    if (!s.candidates.empty() && s.candidates.front().kind == CandidateKind::kNote) {
      ++counts.notes;
    }
  }
  return counts;
}

}  // namespace earlymod
