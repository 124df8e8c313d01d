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

#ifndef HOMOG_FIXTURES_H_
#define HOMOG_FIXTURES_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "homog/perm.h"
#include "homog/structure.h"

namespace homog::fixtures {

// The six-vertex digraph M, encoded as
//   a = 0, b = 1, a0 = 2, b0 = 3, a1 = 4, b1 = 5.
// Arrows: the looped 2-clique {a, b}, the directed 4-cycle
// a0 -> b0 -> a1 -> b1 -> a0, and a -> a0, a -> a1, b -> b0, b -> b1.
inline constexpr std::array<std::string_view, 6> kMNames = {"a", "b", "a0", "b0", "a1", "b1"};
inline constexpr int kA = 0, kB = 1, kA0 = 2, kB0 = 3, kA1 = 4, kB1 = 5;

FinStructure DigraphM();
// The automorphism with a0 -> b0: (a b)(a0 b0 a1 b1) = [1,0,3,4,5,2].
Perm Eta();
// {a0, b0, a1, b1}
VertexSet CycleC();

// 0 -> 1 -> ... -> n-1 -> 0
FinStructure DirectedCycle(int n);
// 0 -> 1 -> ... -> n-1
FinStructure DirectedPath(int n);
FinStructure SinglePoint(bool loop);

// Letter names for vertex sets of M: "{a,b}".
std::string MVertexNames(const VertexSet& vertices);
// Same, for a permutation of M in cycle notation: "(a b)(a0 b0 a1 b1)".
std::string MPermNames(const Perm& p);

}  // namespace homog::fixtures

#endif  // HOMOG_FIXTURES_H_
