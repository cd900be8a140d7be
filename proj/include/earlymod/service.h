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

// Local JSON-over-HTTP service for reviewing transcriptions.
//
//   GET  /api/documents                    list with progress counters
//   POST /api/documents                    {"name", "text"} -> {"id", ...}
//   GET  /api/documents/{id}               document JSON (same as ExportJson)
//   POST /api/documents/{id}/selections    {"span", "index"} or {"span", "text"}
//   GET  /api/documents/{id}/export        final text (?format=json|xml for
//                                          the annotated document)
//
// docs/http-api.md has the full contract.

#ifndef EARLYMOD_SERVICE_H_
#define EARLYMOD_SERVICE_H_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "earlymod/pipeline.h"

namespace httplib {
class Server;
}

namespace earlymod {

class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One entry of a selection sidecar file.
struct SelectionRecord {
  size_t span = 0;
  std::optional<size_t> index;
  std::optional<std::string> text;  // free-text override
  std::string timestamp;
};

nlohmann::ordered_json SidecarJson(const std::vector<SelectionRecord> &records);
std::vector<SelectionRecord> ParseSidecar(std::string_view text);

struct DocumentSummary {
  std::string id;
  std::string name;
  size_t spans = 0;
  SpanCounts counts;
  size_t unresolved = 0;  // ambiguous spans without a selection
};

// Transcribed documents held in memory. Thread-safe; writes to one document
// are serialized.
class DocumentStore {
 public:
  // With a non-empty `sidecar_dir`, every selection is appended to
  // <sidecar_dir>/<id>.selections.json and replayed when a document with
  // that id is added again.
  DocumentStore(const Engine &engine, int max_passes, std::string sidecar_dir = "");

  // Transcribes `text` and returns the new document id.
  std::string Add(std::string_view name, std::string_view text);

  std::vector<DocumentSummary> List() const;
  AnnotatedDocument Get(const std::string &id) const;
  std::string Name(const std::string &id) const;

  // Throw NotFoundError or SelectionError.
  void Select(const std::string &id, size_t span, size_t index);
  void Override(const std::string &id, size_t span, const std::string &text);

  std::string FinalText(const std::string &id, std::vector<std::string> *warnings = nullptr) const;
  std::string SidecarPath(const std::string &id) const;

 private:
  struct Entry {
    std::string name;
    AnnotatedDocument doc;
    std::vector<SelectionRecord> log;
    mutable std::mutex mu;
  };

  std::shared_ptr<Entry> Find(const std::string &id) const;
  void Record(const std::string &id, Entry &entry, SelectionRecord record);
  static void Apply(AnnotatedDocument &doc, const SelectionRecord &record);

  const Engine &engine_;
  int max_passes_;
  std::string sidecar_dir_;
  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Entry>> docs_;
  std::vector<std::string> order_;
};

struct ServiceOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string static_dir;
};

class Service {
 public:
  Service(DocumentStore &store, ServiceOptions options);
  ~Service();

  // Binds the socket; returns the bound port. Throws std::runtime_error
  // when the port is unavailable.
  int Bind();
  // Serves until Stop(). Call Bind() first.
  void Run();
  void Stop();
  void WaitUntilReady() const;

  DocumentStore &store() { return store_; }

 private:
  void Routes();

  DocumentStore &store_;
  ServiceOptions options_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace earlymod

#endif  // EARLYMOD_SERVICE_H_
