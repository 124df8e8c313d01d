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

#include "homog/homogeneity.h"

#include <cstdint>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "homog/errors.h"
#include "homog/finite_sets.h"
#include "homog/fixtures.h"
#include "oracles.h"

namespace homog {
namespace {

using fixtures::DigraphM;

bool ExtendsToSomeAutomorphism(const FinStructure& s, const PartialIso& f) {
  for (const auto& g : oracles::NaiveAutomorphisms(s)) {
    bool ok = true;
    for (std::size_t i = 0; i < f.domain.size(); ++i) ok &= g[f.domain[i]] == f.image[i];
    if (ok) return true;
  }
  return false;
}

TEST(HomogeneityTest, FixtureM) {
  const FinStructure m = DigraphM();
  EXPECT_TRUE(CheckHomogeneous(m).holds);
  EXPECT_TRUE(CheckSetHomogeneous(m).holds);
  EXPECT_TRUE(HasExtensionProperty(m));
  const UniformityResult u = CheckUniformlyHomogeneous(m);
  EXPECT_FALSE(u.holds);
  EXPECT_TRUE(u.set_homogeneous);
  ASSERT_TRUE(u.obstructing_class.has_value());
  EXPECT_EQ(*u.obstructing_class, (VertexSet{0, 1}));
  const auto ob = KatetovObstruction(m);
  ASSERT_TRUE(ob.has_value());
  EXPECT_EQ(ob->fixed_set, (VertexSet{0, 1}));
  EXPECT_EQ(ob->witness, Perm({0, 1, 4, 5, 2, 3}));
}

TEST(HomogeneityTest, OnlyTheClassOfAbFails) {
  const FinStructure m = DigraphM();
  for (const SubstructureClass& c : SubstructureClasses(m)) {
    const VertexSet rep = FromMask(c.masks.front());
    const bool has_section = SectionSearch(m, rep).has_value();
    EXPECT_EQ(has_section, rep != VertexSet({0, 1})) << fixtures::MVertexNames(rep);
  }
}

TEST(HomogeneityTest, DirectedFourCycleIsUniform) {
  const FinStructure c4 = fixtures::DirectedCycle(4);
  const UniformityResult u = CheckUniformlyHomogeneous(c4);
  ASSERT_TRUE(u.holds);
  ASSERT_TRUE(u.functor.has_value());
  EXPECT_FALSE(FindFunctorViolation(c4, u.functor->table()).has_value());
  EXPECT_FALSE(KatetovObstruction(c4).has_value());
  // Every partial isomorphism between nonempty subsets is in the table.
  std::size_t expected = 0;
  for (std::uint32_t a = 1; a < 16; ++a) expected += PartialEmbeddings(c4, FromMask(a)).size();
  EXPECT_EQ(u.functor->table().size(), expected);
}

TEST(HomogeneityTest, FunctorTableTamperingIsDetected) {
  const FinStructure c4 = fixtures::DirectedCycle(4);
  const UniformityResult u = CheckUniformlyHomogeneous(c4);
  ASSERT_TRUE(u.functor.has_value());
  auto table = u.functor->table();
  // Identity on {0} must go to the identity.
  table[PartialIso{{0}, {0}}] = Perm({1, 2, 3, 0});
  EXPECT_TRUE(FindFunctorViolation(c4, table).has_value());
  auto missing = u.functor->table();
  missing.erase(missing.begin());
  EXPECT_TRUE(FindFunctorViolation(c4, missing).has_value());
}

TEST(HomogeneityTest, FunctorIsTransportOfSections) {
  // K(f) = phi_Y o E(phi_Y^-1 o f o phi_X) o phi_X^-1 for the stored anchors.
  const FinStructure s = EdgelessSet(4);
  const UniformityResult u = CheckUniformlyHomogeneous(s);
  ASSERT_TRUE(u.functor.has_value());
  const UniformFunctor& k = *u.functor;
  for (const auto& anchor : k.anchors()) {
    for (const auto& [x, phi_x] : anchor.transport) {
      // phi_X carries the representative onto X.
      VertexSet moved;
      for (int v : anchor.representative) moved.push_back(phi_x(v));
      std::sort(moved.begin(), moved.end());
      EXPECT_EQ(moved, x);
      const PartialIso id{x, x};
      EXPECT_TRUE(k(id).IsIdentity());
    }
  }
}

TEST(HomogeneityTest, EdgelessSetsAreUniformYetObstructed) {
  for (int n = 1; n <= 5; ++n) {
    const FinStructure s = EdgelessSet(n);
    EXPECT_TRUE(CheckUniformlyHomogeneous(s).holds) << n;
    EXPECT_EQ(KatetovObstruction(s).has_value(), n >= 3) << n;
  }
}

TEST(HomogeneityTest, ObstructionRequiresHomogeneity) {
  const FinStructure path = fixtures::DirectedPath(3);
  EXPECT_FALSE(CheckHomogeneous(path).holds);
  EXPECT_THROW(KatetovObstruction(path), InputError);
  const HomogeneityReport r = Analyze(path);
  EXPECT_FALSE(r.katetov_obstructed.has_value());
  EXPECT_TRUE(r.homogeneity_witness.has_value());
}

TEST(HomogeneityTest, TrivialStructures) {
  for (bool loop : {false, true}) {
    const HomogeneityReport r = Analyze(fixtures::SinglePoint(loop));
    EXPECT_TRUE(r.homogeneous);
    EXPECT_TRUE(r.set_homogeneous);
    EXPECT_TRUE(r.uniformly_homogeneous);
    EXPECT_EQ(r.katetov_obstructed, std::optional<bool>(false));
  }
}

TEST(HomogeneityTest, CrossValidationOnAllSmallDigraphs) {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      const FinStructure s = FinStructure::FromDigraphMask(n, mask);
      const HomogeneityResult hom = CheckHomogeneous(s);
      const SetHomogeneityResult set = CheckSetHomogeneous(s);
      const bool naive_hom = oracles::NaiveIsHomogeneous(s);
      SCOPED_TRACE("n=" + std::to_string(n) + " mask=" + std::to_string(mask));
      EXPECT_EQ(hom.holds, naive_hom);
      EXPECT_EQ(HasExtensionProperty(s), naive_hom);
      EXPECT_EQ(oracles::NaiveExtensionProperty(s), naive_hom);
      EXPECT_EQ(set.holds, oracles::NaiveIsSetHomogeneous(s));
      if (!hom.holds) {
        ASSERT_TRUE(hom.witness.has_value());
        EXPECT_TRUE(oracles::NaiveIsIsomorphism(s, hom.witness->domain, hom.witness->image));
        EXPECT_FALSE(ExtendsToSomeAutomorphism(s, *hom.witness));
      }
      const UniformityResult u = CheckUniformlyHomogeneous(s);
      EXPECT_EQ(u.holds, oracles::NaiveIsUniform(s));
      if (hom.holds) EXPECT_EQ(u.holds, oracles::ExhaustiveFunctorExists(s));
      EXPECT_TRUE(!u.holds || hom.holds);
      EXPECT_TRUE(!hom.holds || set.holds);
    }
  }
}

TEST(HomogeneityTest, UniformAgreesWithOracleOnRandomDigraphs) {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + trial % 2;
    const FinStructure s = FinStructure::FromDigraphMask(n, rng() & ((std::uint64_t{1} << (n * n)) - 1));
    EXPECT_EQ(CheckHomogeneous(s).holds, oracles::NaiveIsHomogeneous(s));
    EXPECT_EQ(CheckSetHomogeneous(s).holds, oracles::NaiveIsSetHomogeneous(s));
    EXPECT_EQ(CheckUniformlyHomogeneous(s).holds, oracles::NaiveIsUniform(s));
  }
}

TEST(HomogeneityTest, NonDigraphSignature) {
  // A cyclically oriented ternary relation on three points.
  const FinStructure s(Signature({{"R", 3}}), 3, {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}});
  EXPECT_EQ(CheckHomogeneous(s).holds, oracles::NaiveIsHomogeneous(s));
  EXPECT_EQ(CheckUniformlyHomogeneous(s).holds, oracles::NaiveIsUniform(s));
}

TEST(SectionSearchTest, SectionsAreHomomorphicExtensions) {
  const FinStructure s = EdgelessSet(4);
  const VertexSet a = {1, 3};
  const auto w = SectionSearch(s, a);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(IsHomomorphism(w->sub_aut, w->section));
  for (const auto& [g, e] : w->section) {
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(e(a[i]), a[g(static_cast<int>(i))]);
  }
}

TEST(SectionSearchTest, RejectsBadInput) {
  EXPECT_THROW(SectionSearch(DigraphM(), VertexSet{}), InputError);
  EXPECT_THROW(SectionSearch(fixtures::DirectedPath(3), VertexSet{0}), InputError);
}

TEST(SectionSearchTest, GroupOrderCap) {
  // aut(A) = S_7 is at the cap; S_8 is above it.
  const std::vector<Perm> gens8 = {Perm::FromCycles(8, {{0, 1}}), Perm::FromCycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})};
  const PermGroup s8 = GroupClosure(8, gens8);
  const std::vector<int> all8 = {0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_THROW(SearchSection(s8, all8, s8), CapabilityError);
}

}  // namespace
}  // namespace homog
