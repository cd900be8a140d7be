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

#include "earlymod/cli.h"

#include <charconv>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "earlymod/eval.h"
#include "earlymod/export.h"
#include "earlymod/resources.h"
#include "earlymod/service.h"
#include "earlymod/text.h"

namespace earlymod {
namespace {

struct Options {
  std::vector<std::string> dicts;
  std::string paradigms;
  std::string rules;
  std::string triggers;
  int max_passes = kDefaultMaxPasses;

  bool json = false;

  std::string input;
  std::string output;
  std::string format = "xml";
  bool auto_select = false;

  std::string system;
  std::string gold;
  bool oracle = false;

  std::vector<std::string> files;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
  std::string sidecar_dir;
};

// Failures that map to an exit code.
struct Failure {
  int code;
  std::string message;
};

EngineConfig ConfigFrom(const Options &o) {
  EngineConfig config = EngineConfig::Bundled();
  if (!o.dicts.empty()) {
    config.dictionaries.clear();
    for (const std::string &spec : o.dicts) {
      size_t colon = spec.rfind(':');
      int priority = 0;
      std::string path = spec;
      if (colon != std::string::npos) {
        std::string_view p(spec.data() + colon + 1, spec.size() - colon - 1);
        auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), priority);
        if (ec != std::errc() || ptr != p.data() + p.size() || p.empty()) {
          throw Failure{kExitConfig, "bad --dict '" + spec + "': expected PATH:PRIORITY"};
        }
        path = spec.substr(0, colon);
      }
      config.dictionaries.push_back({path, priority});
    }
  }
  if (!o.paradigms.empty()) config.paradigms = o.paradigms;
  if (!o.rules.empty()) config.variants = o.rules;
  if (!o.triggers.empty()) config.triggers = o.triggers;
  return config;
}

Engine LoadEngine(const Options &o) {
  EngineConfig config = ConfigFrom(o);
  if (config.dictionaries.empty()) throw Failure{kExitConfig, "no dictionaries configured"};
  try {
    return BuildEngine(config);
  } catch (const Failure &) {
    throw;
  } catch (const std::exception &e) {
    throw Failure{kExitConfig, e.what()};
  }
}

std::string ReadInput(const std::string &path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  try {
    return ReadFile(path);
  } catch (const std::exception &e) {
    throw Failure{kExitRuntime, e.what()};
  }
}

void WriteOutput(const Options &o, std::ostream &out, const std::string &text) {
  if (o.output.empty() || o.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
  file << text;
  if (!file) throw Failure{kExitRuntime, "cannot write " + o.output};
}

int Compile(const Options &o, std::ostream &out) {
  Engine engine = LoadEngine(o);
  const LexiconSet &lex = *engine.lexicon;
  std::vector<std::string> warnings;
  for (const LexiconSet::Layer &layer : lex.layers()) {
    for (const LexEntry &e : layer.entries) {
      if (e.recipe.en && !lex.Contains(*e.recipe.en)) {
        warnings.push_back(layer.name + ": EN target '" + *e.recipe.en + "' of '" + e.surface +
                           "' is not in any dictionary");
      }
    }
  }

  if (o.json) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json layers = nlohmann::ordered_json::array();
    for (const LexiconSet::Layer &layer : lex.layers()) {
      nlohmann::ordered_json lj;
      lj["name"] = layer.name;
      lj["priority"] = layer.priority;
      lj["entries"] = layer.entries.size();
      lj["forms"] = layer.expanded_forms;
      layers.push_back(std::move(lj));
    }
    j["layers"] = std::move(layers);
    j["multiword_entries"] = lex.multiword_count();
    j["paradigms"] = lex.paradigms().paradigms().size();
    j["variant_rules"] = engine.variants.rules().size();
    j["warnings"] = warnings;
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "layers: " << lex.layers().size() << "\n";
  char line[160];
  std::snprintf(line, sizeof line, "  %-12s %8s %8s %8s\n", "name", "priority", "entries",
                "forms");
  out << line;
  for (const LexiconSet::Layer &layer : lex.layers()) {
    std::snprintf(line, sizeof line, "  %-12s %8d %8zu %8zu\n", layer.name.c_str(),
                  layer.priority, layer.entries.size(), layer.expanded_forms);
    out << line;
  }
  out << "multiword entries: " << lex.multiword_count() << "\n";
  out << "paradigms: " << lex.paradigms().paradigms().size() << "\n";
  out << "variant rules: " << engine.variants.rules().size() << "\n";
  out << "warnings: " << warnings.size() << "\n";
  for (const std::string &w : warnings) out << "  " << w << "\n";
  return kExitOk;
}

int TranscribeCmd(const Options &o, std::ostream &out, std::ostream &err) {
  Engine engine = LoadEngine(o);
  std::string text = ReadInput(o.input);
  AnnotatedDocument doc = Transcribe(text, engine, o.max_passes);
  for (const std::string &d : doc.diagnostics) err << "warning: " << d << "\n";
  if (o.auto_select) {
    for (Span &s : doc.spans) {
      if (!s.selected && !s.candidates.empty()) s.selected = 0;
    }
  }
  if (o.format == "text") {
    std::vector<std::string> warnings;
    std::string final_text = ApplySelections(doc, {}, &warnings);
    for (const std::string &w : warnings) err << "warning: " << w << "\n";
    WriteOutput(o, out, final_text);
  } else if (o.format == "json") {
    WriteOutput(o, out, ExportJson(doc));
  } else {
    WriteOutput(o, out, ExportXml(doc));
  }
  return kExitOk;
}

AnnotatedDocument LoadSystem(const Options &o) {
  std::string text = ReadInput(o.system);
  std::string ext = std::filesystem::path(o.system).extension().string();
  try {
    if (ext == ".json") return ImportJson(text);
    if (ext == ".xml") return ImportXml(text);
  } catch (const FormatError &e) {
    throw Failure{kExitRuntime, o.system + ": " + e.what()};
  }
  return Transcribe(text, LoadEngine(o), o.max_passes);
}

int Evaluate(const Options &o, std::ostream &out) {
  AnnotatedDocument doc = LoadSystem(o);
  GoldFile gold;
  try {
    gold = LoadGold(o.gold, doc.source);
  } catch (const EvalError &e) {
    throw Failure{kExitRuntime, e.what()};
  } catch (const std::exception &e) {
    throw Failure{kExitRuntime, e.what()};
  }
  ScoreReport report = Score(SystemEntries(doc), gold.entries, o.oracle);
  if (o.json) {
    out << ReportJson(report).dump(2) << "\n";
  } else {
    out << FormatReport(report);
  }
  return kExitOk;
}

Service *g_running = nullptr;

void OnSignal(int) {
  if (g_running != nullptr) g_running->Stop();
}

int Serve(const Options &o, std::ostream &out) {
  Engine engine = LoadEngine(o);
  DocumentStore store(engine, o.max_passes, o.sidecar_dir);
  for (const std::string &path : o.files) {
    std::string text = ReadInput(path);
    std::string id = store.Add(std::filesystem::path(path).stem().string(), text);
    out << "loaded " << path << " as " << id << "\n";
  }
  ServiceOptions options;
  options.host = o.host;
  options.port = o.port;
  options.static_dir = o.static_dir;
  Service service(store, options);
  int port = 0;
  try {
    port = service.Bind();
  } catch (const std::exception &e) {
    throw Failure{kExitRuntime, e.what()};
  }
  out << "listening on http://" << o.host << ":" << port << "\n" << std::flush;
  g_running = &service;
  std::signal(SIGINT, OnSignal);
  std::signal(SIGTERM, OnSignal);
  service.Run();
  g_running = nullptr;
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Transcribe seventeenth-century English into contemporary English."};
  app.name("earlymod");
  app.require_subcommand(1);
  app.add_option("--dict", o.dicts,
                 "Dictionary as PATH:PRIORITY (repeatable; replaces the bundled set)");
  app.add_option("--paradigms", o.paradigms, "Paradigm file");
  app.add_option("--rules", o.rules, "Variant rule file");
  app.add_option("--triggers", o.triggers, "Rewrite trigger file");

  CLI::App *compile = app.add_subcommand("compile", "Compile the dictionaries and report");
  compile->add_flag("--json", o.json, "JSON report");

  CLI::App *transcribe = app.add_subcommand("transcribe", "Transcribe a text file");
  transcribe->add_option("input", o.input, "Input text ('-' for stdin)")->required();
  transcribe->add_option("-o,--output", o.output, "Output file (default stdout)");
  transcribe->add_option("--format", o.format, "xml, json or text")
      ->check(CLI::IsMember({"xml", "json", "text"}));
  transcribe->add_flag("--auto-select", o.auto_select,
                       "Select the first candidate of every unresolved span");
  transcribe->add_option("--max-passes", o.max_passes, "Rewrite pass budget")
      ->check(CLI::PositiveNumber);

  CLI::App *evaluate = app.add_subcommand("evaluate", "Score a transcription against gold");
  evaluate->add_option("system", o.system,
                       "Annotated document (.json, .xml) or plain text to transcribe")
      ->required();
  evaluate->add_option("gold", o.gold, "Gold TSV file")->required();
  evaluate->add_flag("--oracle", o.oracle, "Count a span correct if any candidate matches");
  evaluate->add_flag("--json", o.json, "JSON report");
  evaluate->add_option("--max-passes", o.max_passes, "Rewrite pass budget")
      ->check(CLI::PositiveNumber);

  CLI::App *serve = app.add_subcommand("serve", "Run the local review service");
  serve->add_option("files", o.files, "Text files to load");
  serve->add_option("--host", o.host, "Bind address");
  serve->add_option("--port", o.port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve->add_option("--static", o.static_dir, "Directory of UI assets to serve at /");
  serve->add_option("--sidecar-dir", o.sidecar_dir, "Directory for selection sidecars");
  serve->add_option("--max-passes", o.max_passes, "Rewrite pass budget")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*compile) return Compile(o, out);
    if (*transcribe) return TranscribeCmd(o, out, err);
    if (*evaluate) return Evaluate(o, out);
    if (*serve) return Serve(o, out);
  } catch (const Failure &f) {
    err << "earlymod: " << f.message << "\n";
    return f.code;
  } catch (const std::exception &e) {
    err << "earlymod: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitConfig;
}

int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  std::vector<const char *> argv = {"earlymod"};
  for (const std::string &a : args) argv.push_back(a.c_str());
  return RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace earlymod
