// Copyright 2026 The homog Authors
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

#ifndef HOMOG_STRUCTURE_IO_H_
#define HOMOG_STRUCTURE_IO_H_

#include <filesystem>
#include <string>

#include "homog/structure.h"
#include "json.hpp"

namespace homog {

// Structure files:
//   {"signature": [{"name": "E", "arity": 2}], "size": n,
//    "relations": {"E": [[i, j], ...]}}
// Tuples are written sorted lexicographically. Relations missing from
// "relations" are empty. Schema violations raise InputError whose message
// names the offending JSON path, e.g. "relations.E[3][1]".
FinStructure StructureFromJson(const nlohmann::json& doc);
nlohmann::json StructureToJson(const FinStructure& s);

// Parse errors report line and column.
FinStructure ParseStructure(const std::string& text);
FinStructure LoadStructure(const std::filesystem::path& path);
void SaveStructure(const FinStructure& s, const std::filesystem::path& path);

}  // namespace homog

#endif  // HOMOG_STRUCTURE_IO_H_
