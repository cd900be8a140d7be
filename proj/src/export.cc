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

#include <charconv>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "earlymod/text.h"

namespace earlymod {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using boost::property_tree::ptree;

constexpr std::pair<const char *, std::optional<std::string> Recipe::*> kRecipeFields[] = {
    {"en", &Recipe::en},
    {"replace", &Recipe::replace},
    {"note", &Recipe::note},
    {"preinsert", &Recipe::preinsert},
    {"postinsert", &Recipe::postinsert},
    {"prefix", &Recipe::prefix},
};

Pos PosFrom(std::string_view tag) {
  std::optional<Pos> pos = ParsePos(tag);
  if (!pos) throw FormatError("unknown POS tag '" + std::string(tag) + "'");
  return *pos;
}

FeatureSet FeaturesFrom(std::string_view text) {
  try {
    return FeatureSet::Parse(text);
  } catch (const FeatureError &e) {
    throw FormatError(std::string("bad feature bundle: ") + e.what());
  }
}

template <typename Enum>
Enum EnumFrom(std::optional<Enum> value, std::string_view what, std::string_view name) {
  if (!value) throw FormatError("unknown " + std::string(what) + " '" + std::string(name) + "'");
  return *value;
}

// JSON ---------------------------------------------------------------------

ordered_json AnalysisJson(const Analysis &a) {
  ordered_json j;
  j["surface"] = a.surface;
  j["lemma"] = a.lemma;
  j["pos"] = PosName(a.pos);
  j["features"] = a.features.Format();
  j["paradigm"] = a.paradigm;
  j["level"] = a.level;
  j["source"] = a.source;
  j["stem"] = a.stem;
  j["unamb"] = a.unamb;
  ordered_json recipe = ordered_json::object();
  for (const auto &[key, field] : kRecipeFields) {
    if (a.recipe.*field) recipe[key] = *(a.recipe.*field);
  }
  j["recipe"] = std::move(recipe);
  ordered_json parts = ordered_json::array();
  for (const Part &p : a.parts) {
    ordered_json pj;
    pj["surface"] = p.surface;
    pj["lemma"] = p.lemma;
    pj["pos"] = PosName(p.pos);
    pj["features"] = p.features.Format();
    if (p.en) pj["en"] = *p.en;
    parts.push_back(std::move(pj));
  }
  j["parts"] = std::move(parts);
  return j;
}

Analysis AnalysisFrom(const json &j) {
  Analysis a;
  a.surface = j.at("surface").get<std::string>();
  a.lemma = j.at("lemma").get<std::string>();
  a.pos = PosFrom(j.at("pos").get<std::string>());
  a.features = FeaturesFrom(j.at("features").get<std::string>());
  a.paradigm = j.at("paradigm").get<std::string>();
  a.level = j.at("level").get<int>();
  a.source = j.at("source").get<std::string>();
  a.stem = j.at("stem").get<std::string>();
  a.unamb = j.at("unamb").get<bool>();
  const json &recipe = j.at("recipe");
  for (const auto &[key, field] : kRecipeFields) {
    if (recipe.contains(key)) a.recipe.*field = recipe.at(key).get<std::string>();
  }
  for (const json &pj : j.at("parts")) {
    Part p;
    p.surface = pj.at("surface").get<std::string>();
    p.lemma = pj.at("lemma").get<std::string>();
    p.pos = PosFrom(pj.at("pos").get<std::string>());
    p.features = FeaturesFrom(pj.at("features").get<std::string>());
    if (pj.contains("en")) p.en = pj.at("en").get<std::string>();
    a.parts.push_back(std::move(p));
  }
  return a;
}

ordered_json CandidateJson(const Candidate &c) {
  ordered_json j;
  j["text"] = c.text;
  j["kind"] = CandidateKindName(c.kind);
  j["source_rule"] = c.source_rule;
  j["requires_validation"] = c.requires_validation;
  j["level"] = c.level;
  j["gloss"] = c.gloss;
  return j;
}

Candidate CandidateFrom(const json &j, const Span &span) {
  Candidate c;
  c.token_begin = span.token_begin;
  c.token_end = span.token_end;
  c.text = j.at("text").get<std::string>();
  std::string kind = j.at("kind").get<std::string>();
  c.kind = EnumFrom(ParseCandidateKind(kind), "candidate kind", kind);
  c.source_rule = j.at("source_rule").get<std::string>();
  c.requires_validation = j.at("requires_validation").get<bool>();
  c.level = j.at("level").get<int>();
  c.gloss = j.at("gloss").get<std::string>();
  return c;
}

// XML ----------------------------------------------------------------------

std::string Escape(std::string_view s, bool attribute) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += attribute ? "&quot;" : "\""; break;
      case '\r': out += "&#13;"; break;
      case '\n': out += attribute ? "&#10;" : "\n"; break;
      case '\t': out += attribute ? "&#9;" : "\t"; break;
      default: out += c;
    }
  }
  return out;
}

class XmlWriter {
 public:
  void Open(std::string_view name, int depth) {
    Indent(depth);
    out_ += "<" + std::string(name);
  }
  void Attr(std::string_view name, std::string_view value) {
    out_ += " " + std::string(name) + "=\"" + Escape(value, true) + "\"";
  }
  void Attr(std::string_view name, long long value) { Attr(name, std::to_string(value)); }
  void CloseEmpty() { out_ += "/>\n"; }
  void CloseOpen() { out_ += ">\n"; }
  void Text(std::string_view name, std::string_view text) {
    out_ += ">" + Escape(text, false) + "</" + std::string(name) + ">\n";
  }
  void End(std::string_view name, int depth) {
    Indent(depth);
    out_ += "</" + std::string(name) + ">\n";
  }
  std::string &str() { return out_; }

 private:
  void Indent(int depth) { out_.append(static_cast<size_t>(depth) * 2, ' '); }
  std::string out_;
};

std::string Attr(const ptree &node, const std::string &name) {
  auto v = node.get_optional<std::string>("<xmlattr>." + name);
  if (!v) throw FormatError("missing attribute '" + name + "'");
  return *v;
}

std::optional<std::string> OptAttr(const ptree &node, const std::string &name) {
  auto v = node.get_optional<std::string>("<xmlattr>." + name);
  if (!v) return std::nullopt;
  return *v;
}

long long IntAttr(const ptree &node, const std::string &name) {
  std::string s = Attr(node, name);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError("attribute '" + name + "' is not an integer: '" + s + "'");
  }
  return value;
}

size_t SizeAttr(const ptree &node, const std::string &name) {
  long long v = IntAttr(node, name);
  if (v < 0) throw FormatError("attribute '" + name + "' is negative");
  return static_cast<size_t>(v);
}

bool BoolAttr(const ptree &node, const std::string &name) {
  std::string s = Attr(node, name);
  if (s == "true") return true;
  if (s == "false") return false;
  throw FormatError("attribute '" + name + "' is not a boolean: '" + s + "'");
}

const ptree &Child(const ptree &node, const std::string &name) {
  static const ptree kEmpty;
  auto c = node.get_child_optional(name);
  return c ? *c : kEmpty;
}

void CheckHash(const AnnotatedDocument &doc, std::string_view hash) {
  if (hash != Fnv1a64Hex(doc.source)) {
    throw FormatError("source_hash does not match the source text");
  }
}

}  // namespace

ordered_json ToJson(const AnnotatedDocument &doc) {
  ordered_json j;
  j["schema"] = kDocumentSchema;
  j["source"] = doc.source;
  j["source_hash"] = Fnv1a64Hex(doc.source);
  j["pass_count"] = doc.pass_count;

  ordered_json tokens = ordered_json::array();
  for (const Token &t : doc.tokens) {
    ordered_json tj;
    tj["text"] = t.text;
    tj["begin"] = t.begin;
    tj["end"] = t.end;
    tj["casing"] = CasingName(t.casing);
    tj["kind"] = TokenKindName(t.kind);
    tokens.push_back(std::move(tj));
  }
  j["tokens"] = std::move(tokens);

  ordered_json spans = ordered_json::array();
  for (size_t i = 0; i < doc.spans.size(); ++i) {
    const Span &s = doc.spans[i];
    ordered_json sj;
    sj["index"] = i;
    sj["begin"] = s.begin;
    sj["end"] = s.end;
    sj["token_begin"] = s.token_begin;
    sj["token_end"] = s.token_end;
    sj["original"] = s.original;
    sj["status"] = SpanStatusName(s.status);
    sj["pass"] = s.pass;
    sj["selected"] = s.selected ? ordered_json(*s.selected) : ordered_json(nullptr);
    ordered_json analyses = ordered_json::array();
    for (const Analysis &a : s.analyses) analyses.push_back(AnalysisJson(a));
    sj["analyses"] = std::move(analyses);
    ordered_json cands = ordered_json::array();
    for (const Candidate &c : s.candidates) cands.push_back(CandidateJson(c));
    sj["candidates"] = std::move(cands);
    spans.push_back(std::move(sj));
  }
  j["spans"] = std::move(spans);

  ordered_json prov = ordered_json::array();
  for (const ProvenanceEntry &p : doc.provenance) {
    ordered_json pj;
    pj["pass"] = p.pass;
    pj["begin"] = p.begin;
    pj["end"] = p.end;
    pj["rule"] = p.rule;
    pj["from"] = p.from;
    pj["to"] = p.to;
    prov.push_back(std::move(pj));
  }
  j["provenance"] = std::move(prov);
  j["diagnostics"] = doc.diagnostics;
  return j;
}

AnnotatedDocument FromJson(const json &j) {
  try {
    if (j.at("schema").get<std::string>() != kDocumentSchema) {
      throw FormatError("unsupported schema '" + j.at("schema").get<std::string>() + "'");
    }
    AnnotatedDocument doc;
    doc.source = j.at("source").get<std::string>();
    CheckHash(doc, j.at("source_hash").get<std::string>());
    doc.pass_count = j.at("pass_count").get<int>();
    for (const json &tj : j.at("tokens")) {
      Token t;
      t.text = tj.at("text").get<std::string>();
      t.begin = tj.at("begin").get<size_t>();
      t.end = tj.at("end").get<size_t>();
      t.casing = ParseCasing(tj.at("casing").get<std::string>());
      std::string kind = tj.at("kind").get<std::string>();
      t.kind = EnumFrom(ParseTokenKind(kind), "token kind", kind);
      doc.tokens.push_back(std::move(t));
    }
    for (const json &sj : j.at("spans")) {
      Span s;
      s.begin = sj.at("begin").get<size_t>();
      s.end = sj.at("end").get<size_t>();
      s.token_begin = sj.at("token_begin").get<size_t>();
      s.token_end = sj.at("token_end").get<size_t>();
      s.original = sj.at("original").get<std::string>();
      std::string status = sj.at("status").get<std::string>();
      s.status = EnumFrom(ParseSpanStatus(status), "span status", status);
      s.pass = sj.at("pass").get<int>();
      if (!sj.at("selected").is_null()) s.selected = sj.at("selected").get<size_t>();
      for (const json &aj : sj.at("analyses")) s.analyses.push_back(AnalysisFrom(aj));
      for (const json &cj : sj.at("candidates")) s.candidates.push_back(CandidateFrom(cj, s));
      if (s.end < s.begin || s.end > doc.source.size()) {
        throw FormatError("span out of bounds");
      }
      if (s.selected && *s.selected >= s.candidates.size()) {
        throw FormatError("selected index out of range");
      }
      doc.spans.push_back(std::move(s));
    }
    for (const json &pj : j.at("provenance")) {
      ProvenanceEntry p;
      p.pass = pj.at("pass").get<int>();
      p.begin = pj.at("begin").get<size_t>();
      p.end = pj.at("end").get<size_t>();
      p.rule = pj.at("rule").get<std::string>();
      p.from = pj.at("from").get<std::string>();
      p.to = pj.at("to").get<std::string>();
      doc.provenance.push_back(std::move(p));
    }
    doc.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    return doc;
  } catch (const json::exception &e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  }
}

std::string ExportJson(const AnnotatedDocument &doc) { return ToJson(doc).dump(2) + "\n"; }

AnnotatedDocument ImportJson(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception &e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return FromJson(j);
}

std::string ExportXml(const AnnotatedDocument &doc) {
  XmlWriter w;
  w.str() = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  w.Open("document", 0);
  w.Attr("schema", kDocumentSchema);
  w.Attr("source_hash", Fnv1a64Hex(doc.source));
  w.Attr("pass_count", doc.pass_count);
  w.CloseOpen();

  w.Open("source", 1);
  w.Text("source", doc.source);

  w.Open("tokens", 1);
  w.CloseOpen();
  for (const Token &t : doc.tokens) {
    w.Open("token", 2);
    w.Attr("begin", static_cast<long long>(t.begin));
    w.Attr("end", static_cast<long long>(t.end));
    w.Attr("casing", CasingName(t.casing));
    w.Attr("kind", TokenKindName(t.kind));
    w.Text("token", t.text);
  }
  w.End("tokens", 1);

  w.Open("spans", 1);
  w.CloseOpen();
  for (size_t i = 0; i < doc.spans.size(); ++i) {
    const Span &s = doc.spans[i];
    w.Open("span", 2);
    w.Attr("index", static_cast<long long>(i));
    w.Attr("begin", static_cast<long long>(s.begin));
    w.Attr("end", static_cast<long long>(s.end));
    w.Attr("token_begin", static_cast<long long>(s.token_begin));
    w.Attr("token_end", static_cast<long long>(s.token_end));
    w.Attr("status", SpanStatusName(s.status));
    w.Attr("pass", s.pass);
    if (s.selected) w.Attr("selected", static_cast<long long>(*s.selected));
    w.CloseOpen();
    w.Open("original", 3);
    w.Text("original", s.original);
    for (const Analysis &a : s.analyses) {
      w.Open("analysis", 3);
      w.Attr("surface", a.surface);
      w.Attr("lemma", a.lemma);
      w.Attr("pos", PosName(a.pos));
      w.Attr("features", a.features.Format());
      w.Attr("paradigm", a.paradigm);
      w.Attr("level", a.level);
      w.Attr("source", a.source);
      w.Attr("stem", a.stem);
      w.Attr("unamb", a.unamb ? "true" : "false");
      if (a.recipe.empty() && a.parts.empty()) {
        w.CloseEmpty();
        continue;
      }
      w.CloseOpen();
      if (!a.recipe.empty()) {
        w.Open("recipe", 4);
        for (const auto &[key, field] : kRecipeFields) {
          if (a.recipe.*field) w.Attr(key, *(a.recipe.*field));
        }
        w.CloseEmpty();
      }
      for (const Part &p : a.parts) {
        w.Open("part", 4);
        w.Attr("surface", p.surface);
        w.Attr("lemma", p.lemma);
        w.Attr("pos", PosName(p.pos));
        w.Attr("features", p.features.Format());
        if (p.en) w.Attr("en", *p.en);
        w.CloseEmpty();
      }
      w.End("analysis", 3);
    }
    for (const Candidate &c : s.candidates) {
      w.Open("candidate", 3);
      w.Attr("kind", CandidateKindName(c.kind));
      w.Attr("source_rule", c.source_rule);
      w.Attr("requires_validation", c.requires_validation ? "true" : "false");
      w.Attr("level", c.level);
      if (!c.gloss.empty()) w.Attr("gloss", c.gloss);
      w.Text("candidate", c.text);
    }
    w.End("span", 2);
  }
  w.End("spans", 1);

  w.Open("provenance", 1);
  w.CloseOpen();
  for (const ProvenanceEntry &p : doc.provenance) {
    w.Open("step", 2);
    w.Attr("pass", p.pass);
    w.Attr("begin", static_cast<long long>(p.begin));
    w.Attr("end", static_cast<long long>(p.end));
    w.Attr("rule", p.rule);
    w.Attr("from", p.from);
    w.Attr("to", p.to);
    w.CloseEmpty();
  }
  w.End("provenance", 1);

  w.Open("diagnostics", 1);
  w.CloseOpen();
  for (const std::string &d : doc.diagnostics) {
    w.Open("diagnostic", 2);
    w.Text("diagnostic", d);
  }
  w.End("diagnostics", 1);
  w.End("document", 0);
  return std::move(w.str());
}

AnnotatedDocument ImportXml(std::string_view text) {
  ptree tree;
  try {
    std::istringstream in{std::string(text)};
    boost::property_tree::read_xml(in, tree);
  } catch (const boost::property_tree::xml_parser_error &e) {
    throw FormatError(std::string("invalid XML: ") + e.what());
  }
  auto root = tree.get_child_optional("document");
  if (!root) throw FormatError("missing <document> element");
  const ptree &d = *root;
  if (Attr(d, "schema") != kDocumentSchema) {
    throw FormatError("unsupported schema '" + Attr(d, "schema") + "'");
  }

  AnnotatedDocument doc;
  doc.source = d.get<std::string>("source", "");
  CheckHash(doc, Attr(d, "source_hash"));
  doc.pass_count = static_cast<int>(IntAttr(d, "pass_count"));

  for (const auto &[name, node] : Child(d, "tokens")) {
    if (name != "token") continue;
    Token t;
    t.text = node.data();
    t.begin = SizeAttr(node, "begin");
    t.end = SizeAttr(node, "end");
    t.casing = ParseCasing(Attr(node, "casing"));
    std::string kind = Attr(node, "kind");
    t.kind = EnumFrom(ParseTokenKind(kind), "token kind", kind);
    doc.tokens.push_back(std::move(t));
  }

  for (const auto &[name, node] : Child(d, "spans")) {
    if (name != "span") continue;
    Span s;
    s.begin = SizeAttr(node, "begin");
    s.end = SizeAttr(node, "end");
    s.token_begin = SizeAttr(node, "token_begin");
    s.token_end = SizeAttr(node, "token_end");
    std::string status = Attr(node, "status");
    s.status = EnumFrom(ParseSpanStatus(status), "span status", status);
    s.pass = static_cast<int>(IntAttr(node, "pass"));
    if (OptAttr(node, "selected")) s.selected = SizeAttr(node, "selected");
    for (const auto &[child_name, child] : node) {
      if (child_name == "original") {
        s.original = child.data();
      } else if (child_name == "analysis") {
        Analysis a;
        a.surface = Attr(child, "surface");
        a.lemma = Attr(child, "lemma");
        a.pos = PosFrom(Attr(child, "pos"));
        a.features = FeaturesFrom(Attr(child, "features"));
        a.paradigm = Attr(child, "paradigm");
        a.level = static_cast<int>(IntAttr(child, "level"));
        a.source = Attr(child, "source");
        a.stem = Attr(child, "stem");
        a.unamb = BoolAttr(child, "unamb");
        for (const auto &[sub_name, sub] : child) {
          if (sub_name == "recipe") {
            for (const auto &[key, field] : kRecipeFields) {
              if (auto v = OptAttr(sub, key)) a.recipe.*field = *v;
            }
          } else if (sub_name == "part") {
            Part p;
            p.surface = Attr(sub, "surface");
            p.lemma = Attr(sub, "lemma");
            p.pos = PosFrom(Attr(sub, "pos"));
            p.features = FeaturesFrom(Attr(sub, "features"));
            p.en = OptAttr(sub, "en");
            a.parts.push_back(std::move(p));
          }
        }
        s.analyses.push_back(std::move(a));
      } else if (child_name == "candidate") {
        Candidate c;
        c.token_begin = s.token_begin;
        c.token_end = s.token_end;
        c.text = child.data();
        std::string kind = Attr(child, "kind");
        c.kind = EnumFrom(ParseCandidateKind(kind), "candidate kind", kind);
        c.source_rule = Attr(child, "source_rule");
        c.requires_validation = BoolAttr(child, "requires_validation");
        c.level = static_cast<int>(IntAttr(child, "level"));
        c.gloss = OptAttr(child, "gloss").value_or("");
        s.candidates.push_back(std::move(c));
      }
    }
    if (s.selected && *s.selected >= s.candidates.size()) {
      throw FormatError("selected index out of range");
    }
    doc.spans.push_back(std::move(s));
  }

  for (const auto &[name, node] : Child(d, "provenance")) {
    if (name != "step") continue;
    ProvenanceEntry p;
    p.pass = static_cast<int>(IntAttr(node, "pass"));
    p.begin = SizeAttr(node, "begin");
    p.end = SizeAttr(node, "end");
    p.rule = Attr(node, "rule");
    p.from = Attr(node, "from");
    p.to = Attr(node, "to");
    doc.provenance.push_back(std::move(p));
  }
  for (const auto &[name, node] : Child(d, "diagnostics")) {
    if (name == "diagnostic") doc.diagnostics.push_back(node.data());
  }
  return doc;
}

}  // namespace earlymod
