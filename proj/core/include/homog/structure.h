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

#ifndef HOMOG_STRUCTURE_H_
#define HOMOG_STRUCTURE_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homog/perm.h"

namespace homog {

struct RelationSymbol {
  std::string name;
  int arity = 0;

  friend bool operator==(const RelationSymbol&, const RelationSymbol&) = default;
};

// An ordered list of relation symbols. The default-constructed signature
// is the empty one (pure sets).
class Signature {
 public:
  Signature() = default;
  // Throws InputError on duplicate names, empty names or arity < 1.
  explicit Signature(std::vector<RelationSymbol> relations);

  // The signature of digraphs: one binary relation "E".
  static Signature Digraph();

  const std::vector<RelationSymbol>& relations() const { return relations_; }
  int num_relations() const { return static_cast<int>(relations_.size()); }
  bool empty() const { return relations_.empty(); }
  std::optional<int> IndexOf(std::string_view name) const;
  bool IsDigraph() const;
  // "E/2" style rendering, "(empty)" for the empty signature.
  std::string ToString() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<RelationSymbol> relations_;
};

using Tuple = std::vector<int>;

// A finite relational structure on the universe {0, ..., size-1}.
//
// Relation tables are kept sorted and duplicate free, plus a dense
// membership bitmap per relation for O(arity) lookups. The dense bitmap
// limits size^arity to kMaxDenseCells.
class FinStructure {
 public:
  static constexpr std::int64_t kMaxDenseCells = std::int64_t{1} << 24;

  FinStructure() = default;
  // Structure with all relations empty.
  FinStructure(Signature signature, int size);
  // Throws InputError if a table count mismatches the signature, a tuple
  // has the wrong arity, or an entry is outside the universe. Duplicate
  // tuples are merged.
  FinStructure(Signature signature, int size, std::vector<std::vector<Tuple>> tables);

  // Digraph on n <= 8 vertices whose arrow (i, j) is bit i*n + j of mask.
  static FinStructure FromDigraphMask(int n, std::uint64_t mask);

  const Signature& signature() const { return signature_; }
  int size() const { return size_; }
  const std::vector<Tuple>& table(int relation) const { return tables_[relation]; }

  bool Holds(int relation, std::span<const int> tuple) const;
  bool HasArrow(int from, int to) const { return dense_[0][from * size_ + to] != 0; }

  // Inverse of FromDigraphMask. Requires the digraph signature and size <= 8.
  std::uint64_t DigraphMask() const;

  // sigma . S: the tuple t holds in the result iff sigma^-1(t) holds here.
  FinStructure Relabel(const Perm& sigma) const;

  friend bool operator==(const FinStructure& a, const FinStructure& b) {
    return a.size_ == b.size_ && a.signature_ == b.signature_ && a.tables_ == b.tables_;
  }

 private:
  std::int64_t DenseIndex(std::span<const int> tuple) const;
  void BuildDense();

  Signature signature_;
  int size_ = 0;
  std::vector<std::vector<Tuple>> tables_;
  std::vector<std::vector<std::uint8_t>> dense_;
};

// Vertex subsets are plain sorted vectors; internally many routines use
// bitmasks, so universes are limited to kMaxSubsetUniverse points wherever
// all subsets are enumerated.
using VertexSet = std::vector<int>;
inline constexpr int kMaxSubsetUniverse = 20;

std::uint32_t ToMask(std::span<const int> vertices);
VertexSet FromMask(std::uint32_t mask);

struct InducedSubstructure {
  FinStructure structure;
  // reindex[i] is the original vertex that became vertex i.
  std::vector<int> reindex;
};

// Restriction of S to A, re-indexed in increasing vertex order. Throws
// InputError on out-of-range or repeated vertices.
InducedSubstructure Induce(const FinStructure& s, std::span<const int> vertices);

// An injective map between two structures, given as parallel arrays
// (domain sorted ascending). Used both for isomorphisms between
// substructures of one ambient structure and as a general partial map.
struct PartialIso {
  std::vector<int> domain;
  std::vector<int> image;

  VertexSet ImageSet() const;
  int Apply(int x) const;  // Throws InputError if x is not in the domain.
  friend auto operator<=>(const PartialIso&, const PartialIso&) = default;
  friend bool operator==(const PartialIso&, const PartialIso&) = default;
};

// True iff `f` is an isomorphism from source[f.domain] onto target[f.image].
bool IsPartialIso(const FinStructure& source, const FinStructure& target, const PartialIso& f);

// Calls visit(images) for every embedding of `from` into `to` (injective,
// relations preserved and reflected), in lexicographic order of the image
// array. Returning false from `visit` stops the enumeration.
void ForEachEmbedding(const FinStructure& from, const FinStructure& to,
                      const std::function<bool(std::span<const int>)>& visit);

// All isomorphisms A -> B as image arrays, lexicographically ordered.
std::vector<std::vector<int>> FindIsomorphisms(const FinStructure& a, const FinStructure& b);

// Every isomorphism between S[domain] and some substructure of S, as
// partial maps on the original labels.
std::vector<PartialIso> PartialEmbeddings(const FinStructure& s, std::span<const int> domain);

PermGroup AutomorphismGroup(const FinStructure& s);

// Canonical code: size, then the relation bitmaps (one byte per cell, in
// signature order and lexicographic tuple order), minimized over all
// relabelings of the universe.
struct CanonicalForm {
  std::vector<std::uint8_t> code;

  std::string ToHex() const;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // Relabeling sigma such that sigma . S encodes to `form`.
  Perm relabeling;
};

inline constexpr int kDefaultCanonicalBound = 8;

// Throws CapabilityError if s.size() > bound.
CanonicalLabeling Canonicalize(const FinStructure& s, int bound = kDefaultCanonicalBound);
CanonicalForm ComputeCanonicalForm(const FinStructure& s, int bound = kDefaultCanonicalBound);
// The structure sigma . S for the canonical relabeling sigma.
FinStructure CanonicalRepresentative(const FinStructure& s, int bound = kDefaultCanonicalBound);

// One canonical representative per isomorphism class of nonempty induced
// substructures, sorted by (size, canonical code).
std::vector<FinStructure> Age(const FinStructure& s);

}  // namespace homog

#endif  // HOMOG_STRUCTURE_H_
