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

#include "homog/perm.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "homog/errors.h"

namespace homog {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x]) {
      throw InputError("not a permutation: " + ToArrayString());
    }
    seen[x] = true;
  }
}

Perm Perm::Identity(int degree) {
  if (degree < 0) throw InputError("negative permutation degree");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::FromCycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> touched(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int x = cycle[i];
      if (x < 0 || x >= degree || touched[x]) {
        throw InputError("cycles are not disjoint or leave the universe");
      }
      touched[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

Perm Perm::Inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

bool Perm::IsIdentity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

int Perm::Order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(images_.size(), false);
  int order = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int x = static_cast<int>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::vector<int> Perm::FixedPoints() const {
  std::vector<int> fixed;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == static_cast<int>(i)) fixed.push_back(static_cast<int>(i));
  }
  return fixed;
}

std::string Perm::ToCycleString() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    any = true;
    out << '(';
    bool first = true;
    for (int x = static_cast<int>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out << ' ';
      out << x;
      first = false;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

std::string Perm::ToArrayString() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ',';
    out << images_[i];
  }
  out << ']';
  return out.str();
}

Perm operator*(const Perm& g, const Perm& h) {
  if (g.degree() != h.degree()) throw InputError("composing permutations of different degree");
  std::vector<int> images(h.degree());
  for (int x = 0; x < h.degree(); ++x) images[x] = g(h(x));
  return Perm(std::move(images));
}

PermGroup::PermGroup(int degree) : degree_(degree), elements_{Perm::Identity(degree)} {}

PermGroup::PermGroup(int degree, std::vector<Perm> sorted_elements, bool)
    : degree_(degree), elements_(std::move(sorted_elements)) {}

PermGroup PermGroup::FromElements(int degree, std::vector<Perm> elements) {
  for (const Perm& p : elements) {
    if (p.degree() != degree) throw InputError("group element of wrong degree");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup group(degree, std::move(elements), true);
  if (!group.Contains(Perm::Identity(degree))) throw InputError("element set lacks the identity");
  for (const Perm& x : group.elements_) {
    if (!group.Contains(x.Inverse())) throw InputError("element set not closed under inverse");
    for (const Perm& y : group.elements_) {
      if (!group.Contains(x * y)) throw InputError("element set not closed under composition");
    }
  }
  return group;
}

bool PermGroup::Contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

int PermGroup::IndexOf(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

PermGroup GroupClosure(int degree, std::span<const Perm> generators) {
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw InputError("generators of mixed degree");
  }
  std::set<Perm> seen{Perm::Identity(degree)};
  std::vector<Perm> frontier{Perm::Identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& g : generators) {
        Perm y = g * x;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  // In a finite group, closure under products already gives inverses.
  return PermGroup(degree, std::vector<Perm>(seen.begin(), seen.end()), true);
}

bool IsHomomorphism(const PermGroup& source, const std::map<Perm, Perm>& f) {
  std::vector<const Perm*> image(source.order());
  for (std::size_t i = 0; i < source.order(); ++i) {
    auto it = f.find(source.elements()[i]);
    if (it == f.end()) {
      throw InputError("map undefined on " + source.elements()[i].ToCycleString());
    }
    image[i] = &it->second;
  }
  const auto& elems = source.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const int k = source.IndexOf(elems[i] * elems[j]);
      if (k < 0) throw InputError("source is not closed under composition");
      if (image[i]->degree() != image[j]->degree()) return false;
      if (*image[k] != *image[i] * *image[j]) return false;
    }
  }
  return true;
}

Perm EmbedSym(const Perm& h, int n) {
  const int k = h.degree();
  if (k > n) throw InputError("EmbedSym: source degree exceeds target degree");
  std::vector<int> images(n);
  for (int x = 0; x < n; ++x) images[x] = x < k ? h(x) : x;
  return Perm(std::move(images));
}

std::vector<Perm> AllPermutations(int n) {
  if (n < 0 || n > 8) throw InputError("AllPermutations supports degrees 0..8");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace homog
