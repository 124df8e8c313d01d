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

#ifndef HOMOG_HOMOGENEITY_H_
#define HOMOG_HOMOGENEITY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "homog/perm.h"
#include "homog/structure.h"

namespace homog {

// Decision procedures for homogeneity, set-homogeneity and uniform
// homogeneity of finite relational structures. In a relational signature
// every subset is a substructure; the empty substructure is left out of
// every enumeration below.

struct HomogeneityResult {
  bool holds = false;
  // An isomorphism between substructures with no extension to an
  // automorphism, when `holds` is false.
  std::optional<PartialIso> witness;
};

// Every isomorphism between nonempty induced substructures extends to an
// automorphism. Exhaustive; subsets are scanned by increasing size so the
// witness is a smallest failing isomorphism.
HomogeneityResult CheckHomogeneous(const FinStructure& s);

struct SetHomogeneityResult {
  bool holds = false;
  // (A, B) isomorphic with no automorphism mapping A onto B.
  std::optional<std::pair<VertexSet, VertexSet>> witness;
};

SetHomogeneityResult CheckSetHomogeneous(const FinStructure& s);

// The extension property, checked literally over age(S): for every A, B in
// the age and embeddings e: A -> S, f: A -> B there is an embedding
// g: B -> S with e = g o f. Equivalent to homogeneity; kept as a second,
// independent formulation.
bool HasExtensionProperty(const FinStructure& s);

// Nonempty subsets grouped by isomorphism type of the induced structure.
// Classes are ordered by canonical form (hence by size first); the masks in
// a class are increasing, so masks.front() is the class representative.
struct SubstructureClass {
  CanonicalForm form;
  std::vector<std::uint32_t> masks;
};
std::vector<SubstructureClass> SubstructureClasses(const FinStructure& s);

// A homomorphism aut(A) -> aut(S) whose values extend their arguments on
// the embedded copy of A.
struct SectionWitness {
  VertexSet embedded;       // the copy of A inside S, sorted
  FinStructure class_rep;   // S[embedded], re-indexed in vertex order
  PermGroup sub_aut;        // aut(class_rep)
  std::map<Perm, Perm> section;
};

// The section search tabulates products of aut(A), so |aut(A)|^2 cells.
inline constexpr int kMaxSectionGroupOrder = 5040;

// Group-level section search. Finds images E(h) in `ambient`, one per
// element h of `sub_aut` (aligned with sub_aut.elements()), such that
// E(h)(embedded[i]) = embedded[h(i)] and E is a homomorphism. Candidates
// are tried in sorted order with pruning on every fully assigned product;
// the search is exhaustive, so nullopt means no section exists.
std::optional<std::vector<Perm>> SearchSection(const PermGroup& ambient,
                                               std::span<const int> embedded,
                                               const PermGroup& sub_aut);

// Throws InputError if S is not set-homogeneous or `embedded` is empty or
// invalid.
std::optional<SectionWitness> SectionSearch(const FinStructure& s, std::span<const int> embedded);

// Extension operator K on all isomorphisms between nonempty substructures,
// assembled from one section per isomorphism class via
//   K(f) = phi_Y o E_A(phi_Y^-1 o f o phi_X restricted to A) o phi_X^-1,
// where phi_X is an automorphism carrying the class representative A onto X.
class UniformFunctor {
 public:
  struct Anchor {
    VertexSet representative;
    // phi_X for every copy X of the representative, keyed by X.
    std::map<VertexSet, Perm> transport;
  };

  const std::map<PartialIso, Perm>& table() const { return table_; }
  const std::vector<Anchor>& anchors() const { return anchors_; }
  // Throws InputError if f is not an isomorphism between substructures.
  const Perm& operator()(const PartialIso& f) const;

 private:
  friend UniformFunctor BuildUniformFunctor(const FinStructure&, std::span<const SectionWitness>);

  std::map<PartialIso, Perm> table_;
  std::vector<Anchor> anchors_;
};

// Throws InputError if S is not set-homogeneous, a class has no section, or
// a supplied section is not a homomorphism of extensions. The finished
// table is re-verified with FindFunctorViolation; a failure there throws
// InternalError.
UniformFunctor BuildUniformFunctor(const FinStructure& s, std::span<const SectionWitness> sections);

// Independent scan of the functor conditions on a candidate table:
//   (1) K(id_A) = id for every nonempty A,
//   (2) K(f) is an automorphism extending f, for every isomorphism f,
//   (3) K(f o g) = K(f) o K(g) for all composable f, g,
// plus coverage of every isomorphism between nonempty substructures.
// Returns a description of the first violation, or nullopt.
std::optional<std::string> FindFunctorViolation(const FinStructure& s,
                                                const std::map<PartialIso, Perm>& table);

struct UniformityResult {
  bool holds = false;
  bool set_homogeneous = false;
  std::optional<UniformFunctor> functor;
  // Representative of the first class (in canonical order) without a
  // section, when S is set-homogeneous but not uniformly homogeneous.
  std::optional<VertexSet> obstructing_class;
};

UniformityResult CheckUniformlyHomogeneous(const FinStructure& s);

// A nonempty A and a nontrivial automorphism fixing A pointwise; such a
// pair rules out a Katetov functor on the age of a finite homogeneous
// structure.
struct Obstruction {
  VertexSet fixed_set;
  Perm witness;
};

// Scans automorphisms in sorted order and returns the first nontrivial one
// with a fixed point, together with its full fixed-point set. Throws
// InputError if S is not homogeneous.
std::optional<Obstruction> KatetovObstruction(const FinStructure& s);

struct HomogeneityReport {
  bool homogeneous = false;
  bool set_homogeneous = false;
  bool uniformly_homogeneous = false;
  // Decided only for homogeneous structures.
  std::optional<bool> katetov_obstructed;
  std::optional<PartialIso> homogeneity_witness;
  std::optional<std::pair<VertexSet, VertexSet>> set_homogeneity_witness;
  std::optional<VertexSet> obstructing_class;
  std::optional<Obstruction> obstruction;
};

// Runs every check. Throws InternalError if the implication chain
// uniform => homogeneous => set-homogeneous is violated.
HomogeneityReport Analyze(const FinStructure& s);

}  // namespace homog

#endif  // HOMOG_HOMOGENEITY_H_
