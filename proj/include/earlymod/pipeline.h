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

// Document-level orchestration: tokenize, analyze, build candidates, run
// rewrite passes until the text stops changing, apply user selections.
//
// Spans always refer to byte ranges of the original source. Later passes
// work on a provisional text (earlier sole candidates substituted, ambiguous
// spans left as they were) and map their findings back to source ranges;
// a rewrite that covers an earlier span absorbs it.

#ifndef EARLYMOD_PIPELINE_H_
#define EARLYMOD_PIPELINE_H_

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "earlymod/grammar.h"
#include "earlymod/lexicon.h"
#include "earlymod/tokenizer.h"
#include "earlymod/variants.h"

namespace earlymod {

// Everything a pipeline run needs. Immutable once built; share freely.
struct Engine {
  std::shared_ptr<const LexiconSet> lexicon;
  VariantConfig variants;
  Triggers triggers;
};

enum class SpanStatus { kTranscribed, kAmbiguous, kUnknown };

std::string_view SpanStatusName(SpanStatus status);
std::optional<SpanStatus> ParseSpanStatus(std::string_view name);

struct Span {
  size_t token_begin = 0;  // source tokens [token_begin, token_end)
  size_t token_end = 0;
  size_t begin = 0;  // source bytes [begin, end)
  size_t end = 0;
  std::string original;
  std::vector<Analysis> analyses;
  std::vector<Candidate> candidates;
  std::optional<size_t> selected;
  SpanStatus status = SpanStatus::kUnknown;
  int pass = 1;

  friend bool operator==(const Span &, const Span &) = default;
};

struct ProvenanceEntry {
  int pass = 1;
  size_t begin = 0;  // source bytes
  size_t end = 0;
  std::string rule;
  std::string from;
  std::string to;

  friend bool operator==(const ProvenanceEntry &, const ProvenanceEntry &) = default;
};

struct AnnotatedDocument {
  std::string source;
  std::vector<Token> tokens;
  std::vector<Span> spans;  // sorted, non-overlapping
  int pass_count = 0;
  std::vector<ProvenanceEntry> provenance;
  std::vector<std::string> diagnostics;

  friend bool operator==(const AnnotatedDocument &, const AnnotatedDocument &) = default;
};

class SelectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxPasses = 4;

// Lexical analysis of `text` without sequence rewrites: one span per
// unit that has candidates or is unknown.
AnnotatedDocument Analyze(std::string_view text, const Engine &engine);

// Full transcription. `max_passes` must be >= 1.
AnnotatedDocument Transcribe(std::string_view text, const Engine &engine,
                             int max_passes = kDefaultMaxPasses);

// Final text. `choices` maps span index to candidate index. Ambiguous spans
// without a choice or a stored selection take their first candidate and add
// a line to `warnings`. Throws SelectionError for an unknown span or an
// out-of-range candidate index.
std::string ApplySelections(const AnnotatedDocument &doc,
                            const std::map<size_t, size_t> &choices = {},
                            std::vector<std::string> *warnings = nullptr);

// Sets doc.spans[span].selected. Throws SelectionError when invalid.
void Select(AnnotatedDocument &doc, size_t span, size_t index);

// Adds a manual candidate holding `text` to a span and selects it.
void Override(AnnotatedDocument &doc, size_t span, std::string text);

// Counts of spans by status.
struct SpanCounts {
  size_t transcribed = 0;
  size_t ambiguous = 0;
  size_t unknown = 0;
  size_t notes = 0;
};
SpanCounts CountSpans(const AnnotatedDocument &doc);

}  // namespace earlymod

#endif  // EARLYMOD_PIPELINE_H_
