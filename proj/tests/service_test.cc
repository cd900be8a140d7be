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

#include <filesystem>
#include <thread>

#include <unistd.h>

#include "doctest.h"
#include "earlymod/export.h"
#include "httplib.h"
#include "test_support.h"

namespace earlymod {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// A service on a free port, served from a background thread.
class Running {
 public:
  explicit Running(DocumentStore &store) : service_(store, ServiceOptions{"127.0.0.1", 0, ""}) {
    port_ = service_.Bind();
    thread_ = std::thread([this] { service_.Run(); });
    service_.WaitUntilReady();
  }
  ~Running() {
    service_.Stop();
    thread_.join();
  }
  httplib::Client Client() const { return httplib::Client("127.0.0.1", port_); }

 private:
  Service service_;
  int port_ = 0;
  std::thread thread_;
};

fs::path TempDir(const std::string &name) {
  fs::path dir = fs::temp_directory_path() / ("earlymod-" + name + "-" +
                                             std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST_CASE("documents, selections and export over HTTP") {
  fs::path dir = TempDir("service");
  DocumentStore store(BundledEngine(), kDefaultMaxPasses, dir.string());
  std::string id = store.Add("Sermon 1", "the sinne of the poore chirurgion");
  CHECK(id == "sermon-1");
  CHECK(store.Add("Sermon 1", "betimes") == "sermon-1-2");

  Running running(store);
  httplib::Client cli = running.Client();

  auto health = cli.Get("/api/health");
  REQUIRE(health);
  CHECK(health->status == 200);

  auto list = cli.Get("/api/documents");
  REQUIRE(list);
  json docs = json::parse(list->body)["documents"];
  REQUIRE(docs.size() == 2);
  CHECK(docs[0]["id"] == "sermon-1");
  CHECK(docs[0]["unresolved"] == 2);

  auto doc = cli.Get("/api/documents/sermon-1");
  REQUIRE(doc);
  CHECK(doc->status == 200);
  CHECK(doc->body == ExportJson(store.Get("sermon-1")));
  json j = json::parse(doc->body);
  REQUIRE(j["spans"][0]["original"] == "sinne");
  size_t sin = 0;
  for (size_t k = 0; k < j["spans"][0]["candidates"].size(); ++k) {
    if (j["spans"][0]["candidates"][k]["text"] == "sin") sin = k;
  }

  auto sel = cli.Post("/api/documents/sermon-1/selections",
                      json{{"span", 0}, {"index", sin}}.dump(), "application/json");
  REQUIRE(sel);
  CHECK(sel->status == 200);
  CHECK(json::parse(sel->body)["text"] == "sin");

  auto over = cli.Post("/api/documents/sermon-1/selections",
                       json{{"span", 1}, {"text", "pore"}}.dump(), "application/json");
  REQUIRE(over);
  CHECK(over->status == 200);

  auto text = cli.Get("/api/documents/sermon-1/export?format=text");
  REQUIRE(text);
  CHECK(text->body == "the sin of the pore surgeon");
  CHECK(text->get_header_value("X-Earlymod-Unresolved") == "0");

  auto xml = cli.Get("/api/documents/sermon-1/export?format=xml");
  REQUIRE(xml);
  CHECK(ImportXml(xml->body) == store.Get("sermon-1"));

  auto bad_index = cli.Post("/api/documents/sermon-1/selections",
                            json{{"span", 0}, {"index", 42}}.dump(), "application/json");
  REQUIRE(bad_index);
  CHECK(bad_index->status == 422);
  auto bad_span = cli.Post("/api/documents/sermon-1/selections",
                           json{{"span", 99}, {"index", 0}}.dump(), "application/json");
  REQUIRE(bad_span);
  CHECK(bad_span->status == 422);
  auto malformed = cli.Post("/api/documents/sermon-1/selections", "{span:", "application/json");
  REQUIRE(malformed);
  CHECK(malformed->status == 400);
  auto missing = cli.Get("/api/documents/nope");
  REQUIRE(missing);
  CHECK(missing->status == 404);
  auto missing_sel = cli.Post("/api/documents/nope/selections",
                              json{{"span", 0}, {"index", 0}}.dump(), "application/json");
  REQUIRE(missing_sel);
  CHECK(missing_sel->status == 404);
  auto bad_format = cli.Get("/api/documents/sermon-1/export?format=pdf");
  REQUIRE(bad_format);
  CHECK(bad_format->status == 400);

  auto created = cli.Post("/api/documents", json{{"name", "New"}, {"text", "liveth"}}.dump(),
                          "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  CHECK(json::parse(created->body)["id"] == "new");
  auto bad_create = cli.Post("/api/documents", json{{"name", "x"}}.dump(), "application/json");
  REQUIRE(bad_create);
  CHECK(bad_create->status == 400);

  CHECK(fs::exists(store.SidecarPath("sermon-1")));
  fs::remove_all(dir);
}

TEST_CASE("sidecar selections are replayed on reload") {
  fs::path dir = TempDir("sidecar");
  std::string text = "the sinne of the poore toung";
  std::string exported;
  {
    DocumentStore store(BundledEngine(), kDefaultMaxPasses, dir.string());
    std::string id = store.Add("doc", text);
    store.Select(id, 0, 0);
    store.Select(id, 1, 1);
    store.Override(id, 2, "tongue");
    exported = ExportJson(store.Get(id));
    CHECK_THROWS_AS(store.Select(id, 0, 9), SelectionError);
    CHECK_THROWS_AS(store.Select("missing", 0, 0), NotFoundError);
  }
  DocumentStore reloaded(BundledEngine(), kDefaultMaxPasses, dir.string());
  std::string id = reloaded.Add("doc", text);
  CHECK(ExportJson(reloaded.Get(id)) == exported);
  CHECK(reloaded.FinalText(id) == "the " + reloaded.Get(id).spans[0].candidates[0].text +
                                      " of the " +
                                      reloaded.Get(id).spans[1].candidates[1].text + " tongue");
  fs::remove_all(dir);
}

TEST_CASE("sidecar format") {
  std::vector<SelectionRecord> records = {{3, 1, std::nullopt, "2026-01-01T00:00:00Z"},
                                          {4, std::nullopt, "x", "2026-01-01T00:00:01Z"}};
  auto back = ParseSidecar(SidecarJson(records).dump());
  REQUIRE(back.size() == 2);
  CHECK(back[0].index == 1);
  CHECK(back[1].text == "x");
  CHECK(back[1].span == 4);
  CHECK_THROWS(ParseSidecar("[{\"index\": 1}]"));
}

}  // namespace
}  // namespace earlymod
