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

#include "earlymod/resources.h"

#include <cstdlib>
#include <memory>

namespace earlymod {

#ifndef EARLYMOD_DATA_DIR
#define EARLYMOD_DATA_DIR "data"
#endif

std::string DataDir() {
  if (const char *env = std::getenv("EARLYMOD_DATA"); env != nullptr && *env != '\0') {
    return env;
  }
  return EARLYMOD_DATA_DIR;
}

std::string DataPath(std::string_view name) { return DataDir() + "/" + std::string(name); }

EngineConfig EngineConfig::Bundled() {
  EngineConfig config;
  config.dictionaries = {{DataPath("priority.dic"), 2},
                         {DataPath("s17.dic"), 1},
                         {DataPath("modern.dic"), 0}};
  config.paradigms = DataPath("paradigms.txt");
  config.variants = DataPath("variants.rules");
  config.triggers = DataPath("triggers.conf");
  return config;
}

Engine BuildEngine(const EngineConfig &config) {
  auto paradigms = std::make_shared<const ParadigmTable>(ParadigmTable::Load(config.paradigms));
  std::vector<DictionarySource> sources;
  for (const DictionarySpec &d : config.dictionaries) {
    sources.push_back(LoadDictionary(d.path, d.priority));
  }
  Engine engine;
  engine.lexicon = std::make_shared<const LexiconSet>(LexiconSet::Compile(sources, paradigms));
  engine.variants = VariantConfig::Load(config.variants);
  engine.triggers = Triggers::Load(config.triggers);
  return engine;
}

const Engine &BundledEngine() {
  static const Engine engine = BuildEngine(EngineConfig::Bundled());
  return engine;
}

}  // namespace earlymod
