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

#include "earlymod/export.h"

#include "doctest.h"
#include "test_support.h"

namespace earlymod {
namespace {

AnnotatedDocument Sample() {
  AnnotatedDocument doc = Transcribe(
      "'Tis said the poore chirurgion liveth <here> & \"there\",\n\tdoes believe toung pix "
      "and how dismay'd soever she is.",
      BundledEngine());
  Select(doc, 1, 1);
  Override(doc, 5, "tongue & co");
  return doc;
}

TEST_CASE("json round trip") {
  AnnotatedDocument doc = Sample();
  std::string json = ExportJson(doc);
  CHECK(json.back() == '\n');
  AnnotatedDocument back = ImportJson(json);
  CHECK(back == doc);
  CHECK(ExportJson(back) == json);
  auto j = nlohmann::json::parse(json);
  CHECK(j["schema"] == std::string(kDocumentSchema));
  CHECK(j["source_hash"] == Fnv1a64Hex(doc.source));
  CHECK(j["spans"][1]["selected"] == 1);
}

TEST_CASE("xml round trip") {
  AnnotatedDocument doc = Sample();
  std::string xml = ExportXml(doc);
  AnnotatedDocument back = ImportXml(xml);
  CHECK(back == doc);
  CHECK(ExportXml(back) == xml);
  CHECK(ExportJson(ImportXml(xml)) == ExportJson(doc));
}

TEST_CASE("import rejects foreign or tampered documents") {
  AnnotatedDocument doc = Sample();
  auto j = nlohmann::json::parse(ExportJson(doc));
  auto wrong_schema = j;
  wrong_schema["schema"] = "other/1";
  CHECK_THROWS_AS(ImportJson(wrong_schema.dump()), FormatError);
  auto tampered = j;
  tampered["source"] = "changed";
  CHECK_THROWS_AS(ImportJson(tampered.dump()), FormatError);
  auto bad_index = j;
  bad_index["spans"][0]["selected"] = 99;
  CHECK_THROWS_AS(ImportJson(bad_index.dump()), FormatError);
  CHECK_THROWS_AS(ImportJson("{not json"), FormatError);
  CHECK_THROWS_AS(ImportXml("<document>"), FormatError);
  CHECK_THROWS_AS(ImportXml("<other/>"), FormatError);
}

TEST_CASE("property: any source text survives both formats") {
  testing::Gen g(61);
  const std::vector<std::string> pieces = {
      "poore", "liveth", "the", " ", "\n", "\t", "\r\n", "<", ">", "&", "\"", "'", "]]>",
      "\xE2\x80\x99", "t'other", "&amp;", "sinne", "does believe", ",", "\xC3\xA9", "toung"};
  for (int i = 0; i < 300; ++i) {
    std::string text;
    size_t n = g.Below(12);
    for (size_t k = 0; k < n; ++k) text += g.Pick(pieces);
    AnnotatedDocument doc = Transcribe(text, BundledEngine());
    CAPTURE(text);
    CHECK(ImportJson(ExportJson(doc)) == doc);
    CHECK(ImportXml(ExportXml(doc)) == doc);
  }
}

}  // namespace
}  // namespace earlymod
