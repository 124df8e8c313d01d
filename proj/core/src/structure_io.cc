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

#include "homog/structure_io.h"

#include <fstream>
#include <sstream>

#include "homog/errors.h"

namespace homog {

using nlohmann::json;

namespace {

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

int RequireInt(const json& v, const std::string& where) {
  if (!v.is_number_integer()) Fail(where, "expected an integer");
  const auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    Fail(where, "integer out of range");
  }
  return static_cast<int>(x);
}

std::pair<int, int> LineColumn(const std::string& text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

FinStructure StructureFromJson(const json& doc) {
  if (!doc.is_object()) Fail("$", "expected an object");
  for (const char* key : {"signature", "size"}) {
    if (!doc.contains(key)) Fail("$", std::string("missing key \"") + key + "\"");
  }
  const json& sig = doc["signature"];
  if (!sig.is_array()) Fail("signature", "expected an array");
  std::vector<RelationSymbol> symbols;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const std::string where = "signature[" + std::to_string(i) + "]";
    const json& entry = sig[i];
    if (!entry.is_object() || !entry.contains("name") || !entry.contains("arity")) {
      Fail(where, "expected {\"name\": ..., \"arity\": ...}");
    }
    if (!entry["name"].is_string()) Fail(where + ".name", "expected a string");
    symbols.push_back({entry["name"].get<std::string>(), RequireInt(entry["arity"], where + ".arity")});
  }
  Signature signature;
  try {
    signature = Signature(std::move(symbols));
  } catch (const InputError& e) {
    Fail("signature", e.what());
  }
  const int size = RequireInt(doc["size"], "size");
  if (size < 0) Fail("size", "must be non-negative");

  std::vector<std::vector<Tuple>> tables(signature.num_relations());
  if (doc.contains("relations")) {
    const json& rels = doc["relations"];
    if (!rels.is_object()) Fail("relations", "expected an object");
    for (auto it = rels.begin(); it != rels.end(); ++it) {
      const std::string where = "relations." + it.key();
      const auto r = signature.IndexOf(it.key());
      if (!r) Fail(where, "relation not declared in the signature");
      const int arity = signature.relations()[*r].arity;
      if (!it.value().is_array()) Fail(where, "expected an array of tuples");
      for (std::size_t i = 0; i < it.value().size(); ++i) {
        const std::string twhere = where + "[" + std::to_string(i) + "]";
        const json& t = it.value()[i];
        if (!t.is_array() || static_cast<int>(t.size()) != arity) {
          Fail(twhere, "expected a tuple of length " + std::to_string(arity));
        }
        Tuple tuple;
        for (std::size_t k = 0; k < t.size(); ++k) {
          const std::string vwhere = twhere + "[" + std::to_string(k) + "]";
          const int v = RequireInt(t[k], vwhere);
          if (v < 0 || v >= size) {
            Fail(vwhere, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(size - 1));
          }
          tuple.push_back(v);
        }
        tables[*r].push_back(std::move(tuple));
      }
    }
  }
  return FinStructure(std::move(signature), size, std::move(tables));
}

json StructureToJson(const FinStructure& s) {
  json sig = json::array();
  json rels = json::object();
  for (int r = 0; r < s.signature().num_relations(); ++r) {
    const RelationSymbol& sym = s.signature().relations()[r];
    sig.push_back({{"name", sym.name}, {"arity", sym.arity}});
    json tuples = json::array();
    for (const Tuple& t : s.table(r)) tuples.push_back(t);
    rels[sym.name] = std::move(tuples);
  }
  return {{"signature", std::move(sig)}, {"size", s.size()}, {"relations", std::move(rels)}};
}

FinStructure ParseStructure(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = LineColumn(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": malformed JSON");
  }
  return StructureFromJson(doc);
}

FinStructure LoadStructure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open structure file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseStructure(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void SaveStructure(const FinStructure& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path.string() + ": cannot write structure file");
  out << StructureToJson(s).dump() << '\n';
}

}  // namespace homog
