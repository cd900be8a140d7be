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

// Precision, recall and F-measure against a gold transcription.
//
// Gold files are TSV, one entity per line:
//
//   begin<TAB>end<TAB>original<TAB>gold
//
// with byte offsets into the source text. Blank lines and lines starting
// with '#' are ignored, except an optional `# source-fnv1a64: <hex>` header
// that pins the source text.

#ifndef EARLYMOD_EVAL_H_
#define EARLYMOD_EVAL_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "earlymod/pipeline.h"

namespace earlymod {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GoldEntry {
  size_t begin = 0;
  size_t end = 0;
  std::string original;
  std::string gold;
  size_t line = 0;
};

struct GoldFile {
  std::optional<std::string> source_hash;
  std::vector<GoldEntry> entries;  // sorted by begin
};

// Parses and validates against `source`: malformed lines, offsets out of
// bounds, original text that differs from the source slice, overlapping
// entries and a hash header that does not match all raise EvalError.
GoldFile ParseGold(std::string_view text, std::string_view source);
GoldFile LoadGold(const std::string &path, std::string_view source);

std::string FormatGold(const GoldFile &gold, std::string_view source);

// One system answer: a source span and its ranked candidates. The first
// candidate is the automatic answer.
struct SystemEntry {
  size_t begin = 0;
  size_t end = 0;
  std::vector<std::string> candidates;
};

// Spans with at least one candidate; a stored selection moves to the front.
std::vector<SystemEntry> SystemEntries(const AnnotatedDocument &doc);

struct ScoreReport {
  size_t n_auto = 0;
  size_t n_gold = 0;
  size_t n_correct = 0;
  double precision = 0;
  double recall = 0;
  double f_measure = 0;
  bool oracle = false;
  // Correct entries whose span offered two or more candidates.
  size_t n_correct_ambiguous = 0;
  double ambiguity_rate = 0;
};

// 2PR / (P + R), 0 when P + R == 0.
double FMeasure(double precision, double recall);

// Report from raw counts. P is 0 when n_auto is 0, R is 0 when n_gold is 0.
ScoreReport ReportFromCounts(size_t n_auto, size_t n_gold, size_t n_correct);

// Exact match after whitespace normalization, case-sensitive. In oracle
// mode a span counts as correct when any candidate matches.
bool Matches(std::string_view system, std::string_view gold);
ScoreReport Score(const std::vector<SystemEntry> &system, const std::vector<GoldEntry> &gold,
                  bool oracle = false);

std::string FormatReport(const ScoreReport &report);
nlohmann::ordered_json ReportJson(const ScoreReport &report);

}  // namespace earlymod

#endif  // EARLYMOD_EVAL_H_
