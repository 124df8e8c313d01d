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

#ifndef HOMOG_FINITE_SETS_H_
#define HOMOG_FINITE_SETS_H_

#include <optional>
#include <vector>

#include "homog/homogeneity.h"
#include "homog/perm.h"
#include "homog/structure.h"

namespace homog {

// A bijection between two subsets of {0..n-1}; domain sorted ascending,
// image[i] is the image of domain[i].
struct SetBijection {
  int ambient = 0;
  std::vector<int> domain;
  std::vector<int> image;
};

// Throws InputError if the bijection is malformed.
void Validate(const SetBijection& f);

// Extends f to a permutation of {0..n-1} sending the complement of the
// domain onto the complement of the image in increasing order. This is a
// functor: identities go to the identity and composites to composites.
Perm EnsExtend(const SetBijection& f);

// The edgeless structure on n points (empty signature).
FinStructure EdgelessSet(int n);

// Obstruction for the class of sets of size <= n, found by scanning the
// automorphisms of the n-point set. Present exactly when n >= 3. Throws
// InputError for n < 1.
std::optional<Obstruction> EnsObstruction(int n);

}  // namespace homog

#endif  // HOMOG_FINITE_SETS_H_
