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

#include "earlymod/service.h"

#include <cctype>
#include <ctime>
#include <filesystem>
#include <fstream>

#include "httplib.h"

#include "earlymod/export.h"
#include "earlymod/text.h"

namespace earlymod {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string Now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string Slug(std::string_view name) {
  std::string out;
  for (char c : name) {
    unsigned char u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) {
      out += static_cast<char>(std::tolower(u));
    } else if (!out.empty() && out.back() != '-') {
      out += '-';
    }
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out.empty() ? "doc" : out;
}

void Reply(httplib::Response &res, int status, const ordered_json &body) {
  res.status = status;
  res.set_content(body.dump(2) + "\n", "application/json");
}

void Error(httplib::Response &res, int status, const std::string &message) {
  ordered_json body;
  body["error"] = message;
  Reply(res, status, body);
}

ordered_json SummaryJson(const DocumentSummary &s) {
  ordered_json j;
  j["id"] = s.id;
  j["name"] = s.name;
  j["spans"] = s.spans;
  j["transcribed"] = s.counts.transcribed;
  j["ambiguous"] = s.counts.ambiguous;
  j["unknown"] = s.counts.unknown;
  j["notes"] = s.counts.notes;
  j["unresolved"] = s.unresolved;
  return j;
}

}  // namespace

ordered_json SidecarJson(const std::vector<SelectionRecord> &records) {
  ordered_json out = ordered_json::array();
  for (const SelectionRecord &r : records) {
    ordered_json j;
    j["span"] = r.span;
    if (r.index) j["index"] = *r.index;
    if (r.text) {
      j["text"] = *r.text;
      j["override"] = true;
    }
    j["timestamp"] = r.timestamp;
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<SelectionRecord> ParseSidecar(std::string_view text) {
  std::vector<SelectionRecord> out;
  try {
    json j = json::parse(text);
    if (!j.is_array()) throw std::runtime_error("selection sidecar must be a JSON list");
    for (const json &item : j) {
      SelectionRecord r;
      r.span = item.at("span").get<size_t>();
      if (item.contains("index")) r.index = item.at("index").get<size_t>();
      if (item.contains("text")) r.text = item.at("text").get<std::string>();
      r.timestamp = item.value("timestamp", "");
      if (r.index.has_value() == r.text.has_value()) {
        throw std::runtime_error("selection needs exactly one of index and text");
      }
      out.push_back(std::move(r));
    }
  } catch (const json::exception &e) {
    throw std::runtime_error(std::string("malformed selection sidecar: ") + e.what());
  }
  return out;
}

DocumentStore::DocumentStore(const Engine &engine, int max_passes, std::string sidecar_dir)
    : engine_(engine), max_passes_(max_passes), sidecar_dir_(std::move(sidecar_dir)) {}

std::string DocumentStore::Add(std::string_view name, std::string_view text) {
  auto entry = std::make_shared<Entry>();
  entry->name = std::string(name);
  entry->doc = Transcribe(text, engine_, max_passes_);

  std::string id;
  {
    std::unique_lock lock(mu_);
    std::string base = Slug(name);
    id = base;
    for (int n = 2; docs_.count(id); ++n) id = base + "-" + std::to_string(n);
    docs_[id] = entry;
    order_.push_back(id);
  }

  std::string sidecar = SidecarPath(id);
  if (!sidecar.empty() && std::filesystem::exists(sidecar)) {
    std::lock_guard lock(entry->mu);
    for (SelectionRecord &r : ParseSidecar(ReadFile(sidecar))) {
      try {
        Apply(entry->doc, r);
        entry->log.push_back(std::move(r));
      } catch (const SelectionError &) {
        // Stale record for a document whose text changed; drop it.
      }
    }
  }
  return id;
}

std::shared_ptr<DocumentStore::Entry> DocumentStore::Find(const std::string &id) const {
  std::shared_lock lock(mu_);
  auto it = docs_.find(id);
  if (it == docs_.end()) throw NotFoundError("no document '" + id + "'");
  return it->second;
}

std::vector<DocumentSummary> DocumentStore::List() const {
  std::vector<std::pair<std::string, std::shared_ptr<Entry>>> entries;
  {
    std::shared_lock lock(mu_);
    for (const std::string &id : order_) entries.emplace_back(id, docs_.at(id));
  }
  std::vector<DocumentSummary> out;
  for (const auto &[id, entry] : entries) {
    std::lock_guard lock(entry->mu);
    DocumentSummary s;
    s.id = id;
    s.name = entry->name;
    s.spans = entry->doc.spans.size();
    s.counts = CountSpans(entry->doc);
    for (const Span &span : entry->doc.spans) {
      if (span.status == SpanStatus::kAmbiguous && !span.selected) ++s.unresolved;
    }
    out.push_back(std::move(s));
  }
  return out;
}

AnnotatedDocument DocumentStore::Get(const std::string &id) const {
  std::shared_ptr<Entry> entry = Find(id);
  std::lock_guard lock(entry->mu);
  return entry->doc;
}

std::string DocumentStore::Name(const std::string &id) const {
  std::shared_ptr<Entry> entry = Find(id);
  std::lock_guard lock(entry->mu);
  return entry->name;
}

void DocumentStore::Apply(AnnotatedDocument &doc, const SelectionRecord &record) {
  if (record.text) {
    earlymod::Override(doc, record.span, *record.text);
  } else {
    earlymod::Select(doc, record.span, record.index.value_or(0));
  }
}

void DocumentStore::Record(const std::string &id, Entry &entry, SelectionRecord record) {
  Apply(entry.doc, record);
  entry.log.push_back(std::move(record));
  std::string path = SidecarPath(id);
  if (path.empty()) return;
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << SidecarJson(entry.log).dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

void DocumentStore::Select(const std::string &id, size_t span, size_t index) {
  std::shared_ptr<Entry> entry = Find(id);
  std::lock_guard lock(entry->mu);
  Record(id, *entry, SelectionRecord{span, index, std::nullopt, Now()});
}

void DocumentStore::Override(const std::string &id, size_t span, const std::string &text) {
  std::shared_ptr<Entry> entry = Find(id);
  std::lock_guard lock(entry->mu);
  Record(id, *entry, SelectionRecord{span, std::nullopt, text, Now()});
}

std::string DocumentStore::FinalText(const std::string &id,
                                     std::vector<std::string> *warnings) const {
  std::shared_ptr<Entry> entry = Find(id);
  std::lock_guard lock(entry->mu);
  return ApplySelections(entry->doc, {}, warnings);
}

std::string DocumentStore::SidecarPath(const std::string &id) const {
  if (sidecar_dir_.empty()) return "";
  return (std::filesystem::path(sidecar_dir_) / (id + ".selections.json")).string();
}

Service::Service(DocumentStore &store, ServiceOptions options)
    : store_(store), options_(std::move(options)), server_(std::make_unique<httplib::Server>()) {
  Routes();
}

Service::~Service() { Stop(); }

void Service::Routes() {
  httplib::Server &srv = *server_;

  srv.Get("/api/health", [](const httplib::Request &, httplib::Response &res) {
    ordered_json body;
    body["status"] = "ok";
    body["schema"] = kDocumentSchema;
    Reply(res, 200, body);
  });

  srv.Get("/api/documents", [this](const httplib::Request &, httplib::Response &res) {
    ordered_json docs = ordered_json::array();
    for (const DocumentSummary &s : store_.List()) docs.push_back(SummaryJson(s));
    ordered_json body;
    body["documents"] = std::move(docs);
    Reply(res, 200, body);
  });

  srv.Post("/api/documents", [this](const httplib::Request &req, httplib::Response &res) {
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.is_object() || !body.contains("text") ||
        !body["text"].is_string()) {
      Error(res, 400, "expected a JSON object with a string field 'text'");
      return;
    }
    std::string name = body.value("name", "document");
    std::string id = store_.Add(name, body["text"].get<std::string>());
    for (const DocumentSummary &s : store_.List()) {
      if (s.id == id) Reply(res, 201, SummaryJson(s));
    }
  });

  srv.Get(R"(/api/documents/([^/]+))",
          [this](const httplib::Request &req, httplib::Response &res) {
            try {
              res.set_content(ExportJson(store_.Get(req.matches[1])), "application/json");
            } catch (const NotFoundError &e) {
              Error(res, 404, e.what());
            }
          });

  srv.Post(R"(/api/documents/([^/]+)/selections)",
           [this](const httplib::Request &req, httplib::Response &res) {
             std::string id = req.matches[1];
             json body = json::parse(req.body, nullptr, false);
             bool has_index = body.is_object() && body.contains("index");
             bool has_text = body.is_object() && body.contains("text");
             if (body.is_discarded() || !body.is_object() || !body.contains("span") ||
                 !body["span"].is_number_unsigned() || has_index == has_text ||
                 (has_index && !body["index"].is_number_integer()) ||
                 (has_text && !body["text"].is_string())) {
               Error(res, 400,
                     "expected {\"span\": n, \"index\": k} or {\"span\": n, \"text\": s}");
               return;
             }
             size_t span = body["span"].get<size_t>();
             try {
               if (has_index) {
                 long long index = body["index"].get<long long>();
                 if (index < 0) throw SelectionError("candidate index must not be negative");
                 store_.Select(id, span, static_cast<size_t>(index));
               } else {
                 store_.Override(id, span, body["text"].get<std::string>());
               }
               AnnotatedDocument doc = store_.Get(id);
               const Span &s = doc.spans[span];
               ordered_json out;
               out["span"] = span;
               out["selected"] = *s.selected;
               out["text"] = s.candidates[*s.selected].text;
               out["status"] = SpanStatusName(s.status);
               Reply(res, 200, out);
             } catch (const NotFoundError &e) {
               Error(res, 404, e.what());
             } catch (const SelectionError &e) {
               Error(res, 422, e.what());
             }
           });

  srv.Get(R"(/api/documents/([^/]+)/export)",
          [this](const httplib::Request &req, httplib::Response &res) {
            try {
              std::string format =
                  req.has_param("format") ? req.get_param_value("format") : "text";
              if (format == "json") {
                res.set_content(ExportJson(store_.Get(req.matches[1])), "application/json");
              } else if (format == "xml") {
                res.set_content(ExportXml(store_.Get(req.matches[1])), "application/xml");
              } else if (format == "text") {
                std::vector<std::string> warnings;
                std::string text = store_.FinalText(req.matches[1], &warnings);
                res.set_header("X-Earlymod-Unresolved", std::to_string(warnings.size()));
                res.set_content(text, "text/plain; charset=utf-8");
              } else {
                Error(res, 400, "unknown format '" + format + "'");
              }
            } catch (const NotFoundError &e) {
              Error(res, 404, e.what());
            }
          });

  if (!options_.static_dir.empty()) srv.set_mount_point("/", options_.static_dir);
}

int Service::Bind() {
  int port = options_.port;
  if (port == 0) {
    port = server_->bind_to_any_port(options_.host);
    if (port < 0) throw std::runtime_error("cannot bind " + options_.host);
  } else if (!server_->bind_to_port(options_.host, port)) {
    throw std::runtime_error("cannot bind " + options_.host + ":" + std::to_string(port) +
                             " (port in use?)");
  }
  return port;
}

void Service::Run() { server_->listen_after_bind(); }

void Service::Stop() {
  if (server_) server_->stop();
}

void Service::WaitUntilReady() const { server_->wait_until_ready(); }

}  // namespace earlymod
