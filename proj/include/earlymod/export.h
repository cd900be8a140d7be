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

// JSON and XML serialization of annotated documents. Both carry the full
// model and import back to an equal document. docs/document-format.md
// describes the layout.

#ifndef EARLYMOD_EXPORT_H_
#define EARLYMOD_EXPORT_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "earlymod/pipeline.h"

namespace earlymod {

inline constexpr std::string_view kDocumentSchema = "earlymod.document/1";

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json ToJson(const AnnotatedDocument &doc);
AnnotatedDocument FromJson(const nlohmann::json &json);

// Two-space indented JSON with a trailing newline.
std::string ExportJson(const AnnotatedDocument &doc);
AnnotatedDocument ImportJson(std::string_view text);

std::string ExportXml(const AnnotatedDocument &doc);
AnnotatedDocument ImportXml(std::string_view text);

}  // namespace earlymod

#endif  // EARLYMOD_EXPORT_H_
