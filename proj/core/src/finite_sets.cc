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

#include "homog/finite_sets.h"

#include <algorithm>

#include "homog/errors.h"

namespace homog {

void Validate(const SetBijection& f) {
  if (f.ambient < 0) throw InputError("negative ambient size");
  if (f.domain.size() != f.image.size()) throw InputError("domain and image sizes differ");
  std::vector<bool> hit(f.ambient, false);
  for (std::size_t i = 0; i < f.domain.size(); ++i) {
    if (f.domain[i] < 0 || f.domain[i] >= f.ambient || f.image[i] < 0 || f.image[i] >= f.ambient) {
      throw InputError("bijection leaves {0..n-1}");
    }
    if (i && f.domain[i] <= f.domain[i - 1]) throw InputError("domain must be strictly increasing");
    if (hit[f.image[i]]) throw InputError("bijection is not injective");
    hit[f.image[i]] = true;
  }
}

Perm EnsExtend(const SetBijection& f) {
  Validate(f);
  std::vector<int> images(f.ambient, -1);
  std::vector<bool> in_image(f.ambient, false);
  for (std::size_t i = 0; i < f.domain.size(); ++i) {
    images[f.domain[i]] = f.image[i];
    in_image[f.image[i]] = true;
  }
  int next = 0;
  for (int x = 0; x < f.ambient; ++x) {
    if (images[x] != -1) continue;
    while (in_image[next]) ++next;
    images[x] = next++;
  }
  return Perm(std::move(images));
}

FinStructure EdgelessSet(int n) { return FinStructure(Signature(), n); }

std::optional<Obstruction> EnsObstruction(int n) {
  if (n < 1) throw InputError("Ens(n) needs n >= 1");
  return KatetovObstruction(EdgelessSet(n));
}

}  // namespace homog
