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

#ifndef EARLYMOD_RESOURCES_H_
#define EARLYMOD_RESOURCES_H_

#include <string>
#include <string_view>
#include <vector>

#include "earlymod/pipeline.h"

namespace earlymod {

struct DictionarySpec {
  std::string path;
  int priority = 0;
};

struct EngineConfig {
  std::vector<DictionarySpec> dictionaries;
  std::string paradigms;
  std::string variants;
  std::string triggers;

  // The files shipped in the data directory.
  static EngineConfig Bundled();
};

// Data directory: $EARLYMOD_DATA if set, else the build-time default.
std::string DataDir();
std::string DataPath(std::string_view name);

// Loads and compiles every configured file. Errors propagate from the
// respective parsers.
Engine BuildEngine(const EngineConfig &config);

// The bundled engine, built once.
const Engine &BundledEngine();

}  // namespace earlymod

#endif  // EARLYMOD_RESOURCES_H_
