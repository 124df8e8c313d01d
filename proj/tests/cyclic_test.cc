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

#include "homog/cyclic.h"

#include <map>
#include <vector>

#include "gtest/gtest.h"
#include "homog/errors.h"
#include "homog/homogeneity.h"
#include "oracles.h"

namespace homog::cyclic {
namespace {

PruferVector V(const std::string& text) { return PruferVector::Parse(text); }

TEST(ArithmeticTest, PFreePart) {
  EXPECT_EQ(PFreePart(12, 2), 3);
  EXPECT_EQ(PFreePart(7, 2), 7);
  EXPECT_EQ(PFreePart(6, 3), 2);
  EXPECT_THROW(PFreePart(12, 4), InputError);
  EXPECT_THROW(PFreePart(0, 2), InputError);
}

TEST(ArithmeticTest, Basics) {
  EXPECT_TRUE(IsPrime(97));
  EXPECT_FALSE(IsPrime(1));
  EXPECT_FALSE(IsPrime(91));
  EXPECT_EQ(Factorize(360), (std::vector<std::pair<Int, int>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(Valuation(48, 2), 4);
  EXPECT_EQ(ModInverse(7, 30), 13);
  EXPECT_EQ(MultiplicativeOrder(3, 16), 4);
  EXPECT_EQ(Units(12), (std::vector<Int>{1, 5, 7, 11}));
  EXPECT_EQ(PowMod(3, 4, 16), 1);
}

TEST(EmbeddingTest, ValidationAndNormalization) {
  EXPECT_EQ(CyclicEmbedding::Make(3, 6, 4).multiplier(), 4);
  EXPECT_EQ(CyclicEmbedding::Make(3, 6, 8).multiplier(), 2);
  EXPECT_THROW(CyclicEmbedding::Make(3, 6, 3), InputError);
  EXPECT_THROW(CyclicEmbedding::Make(4, 6, 1), InputError);
  EXPECT_EQ(CyclicEmbedding::Canonical(3, 6).multiplier(), 2);
  EXPECT_EQ(CyclicEmbedding::Make(3, 6, 4).Apply(2), 2);
  EXPECT_EQ(AllEmbeddings(3, 6).size(), 2u);
  EXPECT_EQ(AllEmbeddings(1, 5).size(), 1u);
}

TEST(EmbeddingTest, CompositionIsAnEmbedding) {
  for (const auto& inner : AllEmbeddings(2, 4)) {
    for (const auto& outer : AllEmbeddings(4, 12)) {
      const CyclicEmbedding c = Compose(outer, inner);
      for (Int x = 0; x < 2; ++x) EXPECT_EQ(c.Apply(x), outer.Apply(inner.Apply(x)));
    }
  }
}

TEST(LemmaTest, Examples) {
  EXPECT_EQ(LemmaSolve(CyclicEmbedding::Make(3, 6, 2), CyclicEmbedding::Make(3, 6, 4)), 5);
  const auto e = CyclicEmbedding::Make(4, 12, 3);
  EXPECT_EQ(LemmaSolve(e, e), 1);
  EXPECT_THROW(LemmaSolve(e, CyclicEmbedding::Make(3, 12, 4)), InputError);
  // e canonical, f = (l b)^: the answer is the smallest unit congruent to b.
  EXPECT_EQ(LemmaSolve(CyclicEmbedding::Canonical(4, 12), CyclicEmbedding::Make(4, 12, 21)), 7);
}

TEST(LemmaTest, MatchesBruteForce) {
  for (Int n = 1; n <= 40; ++n) {
    for (Int k = 1; k <= n; ++k) {
      if (n % k) continue;
      for (const auto& e : AllEmbeddings(k, n)) {
        for (const auto& f : AllEmbeddings(k, n)) {
          EXPECT_EQ(LemmaSolve(e, f), oracles::cyc::BruteLemma(n, e.multiplier(), f.multiplier()));
        }
      }
    }
  }
}

TEST(AmalgamateTest, Examples) {
  const auto f = CyclicEmbedding::Make(2, 4, 2);
  const auto g = CyclicEmbedding::Make(2, 6, 3);
  const Amalgam a = Amalgamate(f, g);
  EXPECT_EQ(a.left.target_order(), 24);
  EXPECT_EQ(a.right, CyclicEmbedding::Canonical(6, 24));
  for (Int x = 0; x < 2; ++x) EXPECT_EQ(a.left.Apply(f.Apply(x)), a.right.Apply(g.Apply(x)));
  const Amalgam same = Amalgamate(f, f);
  EXPECT_EQ(same.automorphism, 1);
  const Amalgam trivial = Amalgamate(CyclicEmbedding::Make(1, 3, 3), CyclicEmbedding::Make(1, 5, 5));
  EXPECT_EQ(trivial.left.target_order(), 15);
  EXPECT_THROW(Amalgamate(f, CyclicEmbedding::Make(3, 6, 2)), InputError);
}

TEST(QZElemTest, ParsingAndNormalization) {
  EXPECT_EQ(QZElem::Parse("5/12").ToString(), "5/12");
  EXPECT_EQ(QZElem::Parse("-1/3").ToString(), "2/3");
  EXPECT_EQ(QZElem::Parse("3/3").ToString(), "0/1");
  EXPECT_EQ(QZElem::Parse("4/6"), QZElem::Make(2, 3));
  EXPECT_EQ(QZElem::Parse("0").ToString(), "0/1");
  EXPECT_THROW(QZElem::Parse("1/0"), InputError);
  EXPECT_THROW(QZElem::Parse("abc"), InputError);
  EXPECT_THROW(QZElem::Parse("1/2x"), InputError);
  EXPECT_THROW(QZElem::Make(1, 2'000'000), CapabilityError);
  EXPECT_NO_THROW(QZElem::Make(2, 2'000'000));
  EXPECT_EQ((QZElem::Make(1, 2) + QZElem::Make(2, 3)).ToString(), "1/6");
  EXPECT_EQ((QZElem::Make(1, 3) - QZElem::Make(2, 3)).ToString(), "2/3");
}

TEST(PruferTest, DecomposeExamples) {
  EXPECT_TRUE(PruferDecompose(QZElem()).IsZero());
  EXPECT_EQ(PruferDecompose(QZElem::Make(5, 12)).ToString(), "{2: 3/4, 3: 2/3}");
  EXPECT_EQ(PruferDecompose(QZElem::Make(1, 8)).ToString(), "{2: 1/8}");
  EXPECT_EQ(PruferVector().ToString(), "{}");
}

TEST(PruferTest, ParseValidates) {
  EXPECT_EQ(V("{2: 1/2, 3: 1/3}").ToString(), "{2: 1/2, 3: 1/3}");
  EXPECT_EQ(V("5/12"), PruferDecompose(QZElem::Make(5, 12)));
  EXPECT_EQ(V("{}"), PruferVector());
  EXPECT_EQ(V("{2: 0/1}"), PruferVector());
  EXPECT_THROW(V("{2: 1/3}"), InputError);
  EXPECT_THROW(V("{4: 1/4}"), InputError);
  EXPECT_THROW(V("{2: 1/2"), InputError);
  EXPECT_THROW(V("{2: 1/2, 2: 1/4}"), InputError);
}

TEST(PruferTest, RoundTripAndBruteComponents) {
  for (Int d = 1; d <= 400; ++d) {
    for (Int a = 0; a < d; ++a) {
      if (Gcd(a, d) != 1) continue;
      const QZElem q = QZElem::Make(a, d);
      const PruferVector x = PruferDecompose(q);
      ASSERT_EQ(PruferRecompose(x), q);
      for (const auto& [p, pe] : Factorize(d)) {
        Int power = 1;
        for (int i = 0; i < pe; ++i) power *= p;
        EXPECT_EQ(QZElem::Make(oracles::cyc::BrutePruferNumerator(a, d, p), power), x.Component(p));
      }
    }
  }
}

TEST(PruferTest, RoundTripBeyondTheSmallRanges) {
  // Denominators above the sieve limit and above 2^31 take the wide paths.
  const Int kLarge[] = {(Int{1} << 20) + 7, 2 * 3 * 5 * 7 * 11 * 13 * 17 * 19 * Int{23},
                        Int{1000003} * 999983, Int{1} << 40, Int{3486784401} * 7};
  for (const Int d : kLarge) {
    for (const Int a : {Int{1}, d - 1, d / 3 + 1, d / 2 - 1}) {
      if (Gcd(a, d) != 1) continue;
      const QZElem q = QZElem::Make(a, d, kUnbounded);
      const PruferVector x = PruferDecompose(q);
      ASSERT_EQ(PruferRecompose(x), q) << a << "/" << d;
      // Each component is a/d projected to U(p): c * (d / p^e) = a mod p^e.
      for (const auto& [p, c] : x.components()) {
        const Int pe = c.denominator();
        EXPECT_EQ(MulMod(c.numerator(), d / pe, pe), a % pe) << p;
      }
    }
  }
}

TEST(PruferTest, DecompositionIsAdditive) {
  for (Int d1 = 1; d1 <= 24; ++d1) {
    for (Int d2 = 1; d2 <= 24; ++d2) {
      const QZElem a = QZElem::Make(1, d1), b = QZElem::Make(d2 - 1, d2);
      EXPECT_EQ(PruferDecompose(a + b), PruferDecompose(a) + PruferDecompose(b));
    }
  }
}

TEST(EtaTest, Examples) {
  EXPECT_TRUE(Eta(7, 0).IsZero());
  EXPECT_EQ(Eta(6, 1).ToString(), "{2: 1/2, 3: 1/3}");
  EXPECT_EQ(Eta(4, 3).ToString(), "{2: 3/4}");
}

TEST(EtaTest, InjectiveHomomorphism) {
  for (Int m = 1; m <= 36; ++m) {
    std::map<std::string, Int> seen;
    for (Int x = 0; x < m; ++x) {
      EXPECT_TRUE(seen.emplace(Eta(m, x).ToString(), x).second);
      for (Int y = 0; y < m; ++y) EXPECT_EQ(Eta(m, (x + y) % m), Eta(m, x) + Eta(m, y));
    }
  }
}

TEST(KApplyTest, Examples) {
  EXPECT_TRUE(KApply(5, PruferVector()).IsZero());
  EXPECT_EQ(KApply(3, V("{2: 1/2, 3: 1/3}")).ToString(), "{2: 1/2, 3: 1/3}");
  EXPECT_EQ(KApply(5, V("5/12")).ToString(), "{2: 3/4, 3: 1/3}");
}

TEST(KApplyTest, Naturality) {
  for (Int m = 1; m <= 12; ++m) {
    for (Int k = 1; k <= 12; ++k) {
      for (const auto& e : AllEmbeddings(m, m * k)) {
        for (Int x = 0; x < m; ++x) {
          EXPECT_EQ(Eta(m * k, e.Apply(x)), KApply(e.multiplier(), Eta(m, x)));
        }
      }
    }
  }
}

// The unit of Z_n congruent to [b]_p modulo the p-part of n for every p | n,
// evaluated on the representative b in [1, k].
Int LiteralFormula(Int b, Int n) {
  Int c = 0, modulus = 1;
  for (const auto& [p, e] : Factorize(n)) {
    Int pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    const Int target = PFreePart(b, p) % pe;
    while (c % pe != target) c += modulus;
    modulus *= pe;
  }
  return c;
}

TEST(ExtendAutomorphismTest, Examples) {
  EXPECT_EQ(ExtendAutomorphism(1, 5, 20), 1);
  EXPECT_EQ(ExtendAutomorphism(2, 3, 6), 5);
  const auto c = ExtendAutomorphism(3, 4, 8);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, 7);
  for (Int x = 0; x < 8; x += 2) EXPECT_EQ(*c * x % 8, 3 * x % 8);
  EXPECT_THROW(ExtendAutomorphism(2, 4, 8), InputError);
  EXPECT_THROW(ExtendAutomorphism(1, 3, 8), InputError);
}

TEST(ExtendAutomorphismTest, LiteralPrimeFreeFormulaIsNotAHomomorphism) {
  // At k = 3, n = 15 the formula sends 2 to 2, whose square is 4 != 1.
  EXPECT_EQ(LiteralFormula(2, 15), 2);
  EXPECT_NE(LiteralFormula(2, 15) * LiteralFormula(2, 15) % 15, LiteralFormula(1, 15));
  // It also depends on the representative: 5 = 2 mod 3 goes elsewhere.
  EXPECT_NE(LiteralFormula(5, 15), LiteralFormula(2, 15));
  const auto c = ExtendAutomorphism(2, 3, 15);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c * *c % 15, 1);
}

TEST(ExtendAutomorphismTest, HomomorphicSectionsWhereverTheyExist) {
  for (Int n = 1; n <= 60; ++n) {
    for (Int k = 1; k <= n; ++k) {
      if (n % k) continue;
      const bool exists = oracles::cyc::BruteSectionExists(k, n);
      ASSERT_EQ(HasHomomorphicSection(k, n), exists) << "k=" << k << " n=" << n;
      for (Int b : Units(k)) {
        const Int rep = k == 1 ? 1 : b;
        const auto c = ExtendAutomorphism(rep, k, n);
        ASSERT_EQ(c.has_value(), exists);
        if (!c) continue;
        EXPECT_EQ(Gcd(*c, n), 1);
        EXPECT_EQ(*c % k, rep % k);
        for (Int b2 : Units(k)) {
          const Int rep2 = k == 1 ? 1 : b2;
          EXPECT_EQ(*ExtendAutomorphism(rep * rep2 % k == 0 ? k : rep * rep2 % k, k, n),
                    *c * *ExtendAutomorphism(rep2, k, n) % n);
        }
      }
    }
  }
}

TEST(ExtendAutomorphismTest, AgreesWithGenericSectionSearch) {
  for (Int n = 1; n <= 30; ++n) {
    const PermGroup ambient = AutomorphismsAsPerms(n);
    for (Int k = 1; k <= n; ++k) {
      if (n % k) continue;
      const auto embedded = SubgroupElements(k, n);
      const bool generic = SearchSection(ambient, embedded, AutomorphismsAsPerms(k)).has_value();
      EXPECT_EQ(generic, HasHomomorphicSection(k, n)) << "k=" << k << " n=" << n;
    }
  }
}

TEST(CyclicUniformityTest, FailsExactlyOnHighPrimePowers) {
  // A section fails to exist only for Z_8 in Z_16 style towers (2^4 | n) or
  // Z_9 in Z_27 style towers (p^3 | n, p odd).
  for (Int n = 1; n <= 60; ++n) {
    bool expected = true;
    for (const auto& [p, e] : Factorize(n)) expected &= p == 2 ? e <= 3 : e <= 2;
    const CyclicUniformityReport r = CheckCyclicUniformlyHomogeneous(n);
    EXPECT_EQ(r.holds, expected) << n;
  }
}

TEST(CyclicUniformityTest, SixteenWitness) {
  const CyclicUniformityReport r = CheckCyclicUniformlyHomogeneous(16);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.failing_subgroup, 8);
  EXPECT_EQ(r.failing_unit, 3);
  EXPECT_EQ(r.failing_extensions, (std::vector<Int>{3, 11}));
  for (Int c : r.failing_extensions) EXPECT_EQ(MultiplicativeOrder(c, 16), 4);
  EXPECT_EQ(MultiplicativeOrder(3, 8), 2);
}

}  // namespace
}  // namespace homog::cyclic
