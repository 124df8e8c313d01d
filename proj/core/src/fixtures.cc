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

#include "homog/fixtures.h"

#include <sstream>

namespace homog::fixtures {

FinStructure DigraphM() {
  return FinStructure(Signature::Digraph(), 6,
                      {{{kA, kA}, {kA, kB}, {kB, kA}, {kB, kB},
                        {kA0, kB0}, {kB0, kA1}, {kA1, kB1}, {kB1, kA0},
                        {kA, kA0}, {kA, kA1}, {kB, kB0}, {kB, kB1}}});
}

Perm Eta() { return Perm({kB, kA, kB0, kA1, kB1, kA0}); }

VertexSet CycleC() { return {kA0, kB0, kA1, kB1}; }

FinStructure DirectedCycle(int n) {
  std::vector<Tuple> arrows;
  for (int i = 0; i < n; ++i) arrows.push_back({i, (i + 1) % n});
  return FinStructure(Signature::Digraph(), n, {std::move(arrows)});
}

FinStructure DirectedPath(int n) {
  std::vector<Tuple> arrows;
  for (int i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
  return FinStructure(Signature::Digraph(), n, {std::move(arrows)});
}

FinStructure SinglePoint(bool loop) {
  std::vector<Tuple> arrows;
  if (loop) arrows.push_back({0, 0});
  return FinStructure(Signature::Digraph(), 1, {std::move(arrows)});
}

std::string MVertexNames(const VertexSet& vertices) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out << (i ? "," : "") << kMNames.at(vertices[i]);
  }
  out << '}';
  return out.str();
}

std::string MPermNames(const Perm& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    any = true;
    out << '(';
    for (int x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      out << (x == start ? "" : " ") << kMNames.at(x);
    }
    out << ')';
  }
  return any ? out.str() : "id";
}

}  // namespace homog::fixtures
