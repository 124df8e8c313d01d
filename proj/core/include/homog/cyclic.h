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

#ifndef HOMOG_CYCLIC_H_
#define HOMOG_CYCLIC_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homog/perm.h"

// Finite cyclic groups Z_n, their embeddings x -> n*x, and the Pruefer
// decomposition of Q/Z into its p-primary parts U(p).
namespace homog::cyclic {

using Int = std::int64_t;

inline constexpr Int kDefaultMaxDenominator = 1'000'000;
inline constexpr Int kUnbounded = std::numeric_limits<Int>::max();

// Arithmetic helpers. All products go through 128-bit intermediates;
// results that do not fit in Int throw CapabilityError.
bool IsPrime(Int n);
// Prime factorization of n >= 1 as ascending (p, exponent) pairs.
std::vector<std::pair<Int, int>> Factorize(Int n);
// Exponent of p in n. Requires n >= 1 and p prime.
int Valuation(Int n, Int p);
// n divided by the largest power of p dividing it ([n]_p). Throws
// InputError if n < 1 or p is not prime.
Int PFreePart(Int n, Int p);
Int Gcd(Int a, Int b);
Int MulMod(Int a, Int b, Int m);
Int PowMod(Int a, Int e, Int m);
// Throws InputError unless gcd(a, m) = 1.
Int ModInverse(Int a, Int m);
// Units of Z_n in increasing order (for n = 1 this is {0}).
std::vector<Int> Units(Int n);

// The map x -> multiplier*x from Z_source to Z_target. Valid iff source
// divides target and gcd(multiplier, target) = target/source. Multipliers
// are stored reduced into [1, target], so equal maps compare equal.
class CyclicEmbedding {
 public:
  // Throws InputError if the data does not describe an embedding.
  static CyclicEmbedding Make(Int source_order, Int target_order, Int multiplier);
  // x -> (target/source)*x.
  static CyclicEmbedding Canonical(Int source_order, Int target_order);

  Int source_order() const { return source_; }
  Int target_order() const { return target_; }
  Int multiplier() const { return multiplier_; }
  Int Apply(Int x) const;

  friend bool operator==(const CyclicEmbedding&, const CyclicEmbedding&) = default;

 private:
  CyclicEmbedding(Int s, Int t, Int m) : source_(s), target_(t), multiplier_(m) {}
  Int source_ = 1;
  Int target_ = 1;
  Int multiplier_ = 1;
};

// outer o inner. Throws InputError if inner's target is not outer's source.
CyclicEmbedding Compose(const CyclicEmbedding& outer, const CyclicEmbedding& inner);
// Every embedding Z_k -> Z_n, by increasing multiplier.
std::vector<CyclicEmbedding> AllEmbeddings(Int k, Int n);

// For embeddings e, f: Z_k -> Z_n, the smallest unit b of Z_n with
// b * e = f, i.e. f = b^ o e. Throws InputError on mismatched orders.
Int LemmaSolve(const CyclicEmbedding& e, const CyclicEmbedding& f);

// Amalgamation of f: Z_k -> Z_m and g: Z_k -> Z_n inside Z_{mn}.
struct Amalgam {
  CyclicEmbedding left;   // Z_m -> Z_{mn}
  CyclicEmbedding right;  // Z_n -> Z_{mn}, the canonical embedding
  Int automorphism = 1;   // unit of Z_{mn} applied after the canonical left map
};
// left o f = right o g, verified pointwise before returning.
Amalgam Amalgamate(const CyclicEmbedding& f, const CyclicEmbedding& g);

class PruferVector;

// An element a/d of Q/Z, kept reduced with 0 <= a < d.
class QZElem {
 public:
  QZElem() = default;
  // Reduces a/d modulo 1. Throws InputError if d < 1 and CapabilityError if
  // the reduced denominator exceeds max_denominator.
  static QZElem Make(Int numerator, Int denominator, Int max_denominator = kDefaultMaxDenominator);
  // Accepts "a/d" or an integer.
  static QZElem Parse(std::string_view text, Int max_denominator = kDefaultMaxDenominator);

  Int numerator() const { return num_; }
  Int denominator() const { return den_; }
  bool IsZero() const { return num_ == 0; }
  std::string ToString() const;  // "a/d"; zero is "0/1"

  friend QZElem operator+(const QZElem& a, const QZElem& b);
  friend QZElem operator-(const QZElem& a);
  friend QZElem operator-(const QZElem& a, const QZElem& b) { return a + (-b); }
  friend auto operator<=>(const QZElem&, const QZElem&) = default;
  friend bool operator==(const QZElem&, const QZElem&) = default;

 private:
  friend QZElem PruferRecompose(const PruferVector& x, Int max_denominator);
  friend PruferVector PruferDecompose(const QZElem& q);
  // Caller guarantees 0 <= a < d and gcd(a, d) = 1.
  QZElem(Int a, Int d) : num_(a), den_(d) {}
  Int num_ = 0;
  Int den_ = 1;
};

// An element of the direct sum of the U(p): finitely many nonzero
// components, the p-component having a power of p as denominator.
class PruferVector {
 public:
  // Nonzero components in increasing order of prime.
  using Components = std::vector<std::pair<Int, QZElem>>;

  PruferVector() = default;
  // Throws InputError if a key is not prime or a component's denominator
  // is not a power of its prime. Zero components are dropped.
  static PruferVector FromComponents(const std::map<Int, QZElem>& components);
  // Accepts "{p: a/d, ...}" (also "{}"), or a bare "a/d", which is
  // decomposed.
  static PruferVector Parse(std::string_view text, Int max_denominator = kDefaultMaxDenominator);

  const Components& components() const { return components_; }
  QZElem Component(Int p) const;
  bool IsZero() const { return components_.empty(); }
  // "{2: 1/2, 3: 1/3}", primes ascending; "{}" for zero.
  std::string ToString() const;

  friend PruferVector operator+(const PruferVector& a, const PruferVector& b);
  friend PruferVector operator-(const PruferVector& a);
  friend bool operator==(const PruferVector&, const PruferVector&) = default;

 private:
  // Skips validation; callers guarantee prime keys and p-power denominators.
  static PruferVector Trusted(Components components);
  friend PruferVector PruferDecompose(const QZElem& q);
  friend PruferVector Eta(Int m, Int l);
  friend PruferVector KApply(Int n, const PruferVector& x);

  Components components_;
};

// Unique decomposition with components over exactly the primes dividing
// the denominator.
PruferVector PruferDecompose(const QZElem& q);
// Sum of the components modulo 1.
QZElem PruferRecompose(const PruferVector& x, Int max_denominator = kUnbounded);

// eta_m(l) = < l*[m]_p / m : p prime >. Requires m >= 1 and 0 <= l < m.
PruferVector Eta(Int m, Int l);
// K(n^)(x) = < [n]_p * x_p : p prime >. Requires n >= 1.
PruferVector KApply(Int n, const PruferVector& x);

// True iff the reduction (Z/n)* -> (Z/k)* has a homomorphic section,
// i.e. Z_k admits an extension operator into aut(Z_n) that is a group
// homomorphism. Per prime p with a = v_p(n) >= b = v_p(k) this holds iff
// b = 0, a = b, or b = 1, or p = 2 and b = 2.
bool HasHomomorphicSection(Int k, Int n);

// The automorphism c^ of Z_n extending b^ on the order-k subgroup, chosen
// so that b -> c is a homomorphism (Z/k)* -> (Z/n)*. Per prime p | n the
// p-part of c is 1 (p does not divide k), b itself (same exponent), the
// Teichmueller lift of b (odd p, exponent 1 in k) or +-1 (p = 2, exponent
// 2 in k); the parts are joined by CRT. Returns nullopt when no
// homomorphic section exists. Throws InputError if k does not divide n or
// b is not a unit mod k.
std::optional<Int> ExtendAutomorphism(Int b, Int k, Int n);

// aut(Z_n) as permutations x -> u*x of {0..n-1}.
PermGroup AutomorphismsAsPerms(Int n);
// The order-k subgroup of Z_n, increasing.
std::vector<int> SubgroupElements(Int k, Int n);

struct CyclicUniformityReport {
  bool holds = false;
  // First subgroup order k | n without a homomorphic section.
  std::optional<Int> failing_subgroup;
  // A unit of Z_k whose extensions to Z_n all have order not dividing its
  // own order, when one exists.
  std::optional<Int> failing_unit;
  std::vector<Int> failing_extensions;
  std::string detail;
};

// For every k | n: extension operator exists, each value extends
// pointwise, and the homomorphism law holds on all pairs of (Z/k)*.
CyclicUniformityReport CheckCyclicUniformlyHomogeneous(Int n);

// Multiplicative order of a unit modulo n.
Int MultiplicativeOrder(Int a, Int n);

}  // namespace homog::cyclic

#endif  // HOMOG_CYCLIC_H_
