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
#include <charconv>
#include <cstdio>
#include <map>

#include "earlymod/text.h"

namespace earlymod {
namespace {

constexpr std::string_view kHashHeader = "# source-fnv1a64:";

size_t ParseOffset(std::string_view field, size_t line, std::string_view what) {
  size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw EvalError("gold:" + std::to_string(line) + ": bad " + std::string(what) +
                    " offset '" + std::string(field) + "'");
  }
  return value;
}

std::string Percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", v * 100.0);
  return buf;
}

}  // namespace

GoldFile ParseGold(std::string_view text, std::string_view source) {
  GoldFile gold;
  size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.starts_with(kHashHeader)) {
      gold.source_hash = std::string(Trim(line.substr(kHashHeader.size())));
      continue;
    }
    if (Trim(line).empty() || line.front() == '#') continue;

    std::vector<std::string_view> f;
    size_t b = 0;
    while (true) {
      size_t tab = line.find('\t', b);
      f.push_back(line.substr(b, tab == std::string_view::npos ? std::string_view::npos
                                                               : tab - b));
      if (tab == std::string_view::npos) break;
      b = tab + 1;
    }
    std::string where = "gold:" + std::to_string(line_no) + ": ";
    if (f.size() != 4) {
      throw EvalError(where + "expected 4 tab-separated fields, got " +
                      std::to_string(f.size()));
    }
    GoldEntry e;
    e.line = line_no;
    e.begin = ParseOffset(f[0], line_no, "begin");
    e.end = ParseOffset(f[1], line_no, "end");
    e.original = std::string(f[2]);
    e.gold = std::string(f[3]);
    if (e.begin >= e.end || e.end > source.size()) {
      throw EvalError(where + "span " + std::to_string(e.begin) + "-" + std::to_string(e.end) +
                      " out of bounds (source has " + std::to_string(source.size()) +
                      " bytes)");
    }
    if (source.substr(e.begin, e.end - e.begin) != e.original) {
      throw EvalError(where + "original '" + e.original + "' does not match source text '" +
                      std::string(source.substr(e.begin, e.end - e.begin)) + "'");
    }
    if (e.gold.empty()) throw EvalError(where + "empty gold transcription");
    gold.entries.push_back(std::move(e));
  }

  if (gold.source_hash && *gold.source_hash != Fnv1a64Hex(source)) {
    throw EvalError("gold file was made for a different source text (hash " +
                    *gold.source_hash + ", source " + Fnv1a64Hex(source) + ")");
  }
  std::stable_sort(gold.entries.begin(), gold.entries.end(),
                   [](const GoldEntry &a, const GoldEntry &b) { return a.begin < b.begin; });
  for (size_t i = 1; i < gold.entries.size(); ++i) {
    const GoldEntry &a = gold.entries[i - 1];
    const GoldEntry &b = gold.entries[i];
    if (b.begin < a.end) {
      throw EvalError("gold: lines " + std::to_string(std::min(a.line, b.line)) + " and " +
                      std::to_string(std::max(a.line, b.line)) + " overlap");
    }
  }
  return gold;
}

GoldFile LoadGold(const std::string &path, std::string_view source) {
  try {
    return ParseGold(ReadFile(path), source);
  } catch (const EvalError &e) {
    throw EvalError(path + ": " + e.what());
  }
}

std::string FormatGold(const GoldFile &gold, std::string_view source) {
  std::string out = std::string(kHashHeader) + " " + Fnv1a64Hex(source) + "\n";
  for (const GoldEntry &e : gold.entries) {
    out += std::to_string(e.begin) + "\t" + std::to_string(e.end) + "\t" + e.original + "\t" +
           e.gold + "\n";
  }
  return out;
}

std::vector<SystemEntry> SystemEntries(const AnnotatedDocument &doc) {
  std::vector<SystemEntry> out;
  for (const Span &s : doc.spans) {
    if (s.candidates.empty()) continue;
    SystemEntry e;
    e.begin = s.begin;
    e.end = s.end;
    if (s.selected) e.candidates.push_back(s.candidates[*s.selected].text);
    for (size_t i = 0; i < s.candidates.size(); ++i) {
      if (s.selected && i == *s.selected) continue;
      e.candidates.push_back(s.candidates[i].text);
    }
    out.push_back(std::move(e));
  }
  return out;
}

double FMeasure(double precision, double recall) {
  if (precision + recall <= 0) return 0;
  return 2 * precision * recall / (precision + recall);
}

ScoreReport ReportFromCounts(size_t n_auto, size_t n_gold, size_t n_correct) {
  ScoreReport r;
  r.n_auto = n_auto;
  r.n_gold = n_gold;
  r.n_correct = n_correct;
  r.precision = n_auto == 0 ? 0 : static_cast<double>(n_correct) / n_auto;
  r.recall = n_gold == 0 ? 0 : static_cast<double>(n_correct) / n_gold;
  r.f_measure = FMeasure(r.precision, r.recall);
  return r;
}

bool Matches(std::string_view system, std::string_view gold) {
  return NormalizeSpace(system) == NormalizeSpace(gold);
}

ScoreReport Score(const std::vector<SystemEntry> &system, const std::vector<GoldEntry> &gold,
                  bool oracle) {
  std::map<std::pair<size_t, size_t>, const GoldEntry *> by_span;
  for (const GoldEntry &g : gold) by_span[{g.begin, g.end}] = &g;

  size_t correct = 0, correct_ambiguous = 0;
  for (const SystemEntry &s : system) {
    if (s.candidates.empty()) continue;
    auto it = by_span.find({s.begin, s.end});
    if (it == by_span.end()) continue;
    bool ok = false;
    if (oracle) {
      for (const std::string &c : s.candidates) ok = ok || Matches(c, it->second->gold);
    } else {
      ok = Matches(s.candidates.front(), it->second->gold);
    }
    if (ok) {
      ++correct;
      if (s.candidates.size() > 1) ++correct_ambiguous;
    }
  }
  size_t n_auto = std::count_if(system.begin(), system.end(),
                                [](const SystemEntry &s) { return !s.candidates.empty(); });
  ScoreReport r = ReportFromCounts(n_auto, gold.size(), correct);
  r.oracle = oracle;
  r.n_correct_ambiguous = correct_ambiguous;
  r.ambiguity_rate = correct == 0 ? 0 : static_cast<double>(correct_ambiguous) / correct;
  return r;
}

std::string FormatReport(const ScoreReport &r) {
  std::string out;
  out += std::string("mode            ") + (r.oracle ? "oracle" : "auto") + "\n";
  out += "transcribed     " + std::to_string(r.n_auto) + "\n";
  out += "gold entities   " + std::to_string(r.n_gold) + "\n";
  out += "correct         " + std::to_string(r.n_correct) + "\n";
  out += "precision       " + Percent(r.precision) + "\n";
  out += "recall          " + Percent(r.recall) + "\n";
  out += "f-measure       " + Percent(r.f_measure) + "\n";
  out += "ambiguous/ok    " + std::to_string(r.n_correct_ambiguous) + " (" +
         Percent(r.ambiguity_rate) + ")\n";
  return out;
}

nlohmann::ordered_json ReportJson(const ScoreReport &r) {
  nlohmann::ordered_json j;
  j["mode"] = r.oracle ? "oracle" : "auto";
  j["n_auto"] = r.n_auto;
  j["n_gold"] = r.n_gold;
  j["n_correct"] = r.n_correct;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["f_measure"] = r.f_measure;
  j["n_correct_ambiguous"] = r.n_correct_ambiguous;
  j["ambiguity_rate"] = r.ambiguity_rate;
  return j;
}

}  // namespace earlymod
