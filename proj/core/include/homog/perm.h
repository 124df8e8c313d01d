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

#ifndef HOMOG_PERM_H_
#define HOMOG_PERM_H_

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace homog {

// A permutation of {0, ..., degree-1}, stored as its image array.
//
// Composition convention, fixed project-wide: (g * h)(x) = g(h(x)), i.e.
// h is applied first. Permutations compare lexicographically by image
// array, so the identity is the smallest permutation of its degree.
class Perm {
 public:
  Perm() = default;
  // Throws InputError unless `images` is a permutation of 0..size-1.
  explicit Perm(std::vector<int> images);

  static Perm Identity(int degree);
  // Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Perm FromCycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  std::span<const int> images() const { return images_; }

  Perm Inverse() const;
  bool IsIdentity() const;
  int Order() const;
  std::vector<int> FixedPoints() const;

  // Cycle notation with fixed points omitted; "()" for the identity.
  std::string ToCycleString() const;
  // Image array notation, e.g. "[1,0,3,4,5,2]".
  std::string ToArrayString() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

// g * h = g o h. Throws InputError on degree mismatch.
Perm operator*(const Perm& g, const Perm& h);

// A finite permutation group held as its full, sorted element list.
class PermGroup {
 public:
  // The trivial group of the given degree.
  explicit PermGroup(int degree = 0);

  // Wraps an element list. Throws InputError if the elements have mixed
  // degrees or do not form a group (identity, closure under products and
  // inverses are all checked).
  static PermGroup FromElements(int degree, std::vector<Perm> elements);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const& { return elements_; }
  // Moves out of temporaries so that `for (x : Group().elements())` is safe.
  std::vector<Perm> elements() && { return std::move(elements_); }

  bool Contains(const Perm& p) const;
  // Position of `p` in elements(), or -1.
  int IndexOf(const Perm& p) const;

  friend bool operator==(const PermGroup&, const PermGroup&) = default;

 private:
  PermGroup(int degree, std::vector<Perm> sorted_elements, bool);
  friend PermGroup GroupClosure(int degree, std::span<const Perm> generators);

  int degree_ = 0;
  std::vector<Perm> elements_;
};

// Smallest group containing `generators`: products are added until a
// fixpoint is reached. An empty generator list yields the trivial group.
// Throws InputError if some generator's degree differs from `degree`.
PermGroup GroupClosure(int degree, std::span<const Perm> generators);

// True iff f(g * h) = f(g) * f(h) for every pair of source elements.
// Throws InputError if f is undefined on some element of `source`.
bool IsHomomorphism(const PermGroup& source, const std::map<Perm, Perm>& f);

// Extends h in S_k to S_n by fixing k..n-1 (h union id). Throws InputError
// if k > n.
Perm EmbedSym(const Perm& h, int n);

// All permutations of degree n in lexicographic order (n <= 8).
std::vector<Perm> AllPermutations(int n);

}  // namespace homog

#endif  // HOMOG_PERM_H_
