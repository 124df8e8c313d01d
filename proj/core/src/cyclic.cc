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

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>

#include "homog/errors.h"

namespace homog::cyclic {

namespace {

__extension__ using Wide = __int128;

Int Narrow(Wide x) {
  if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min()) {
    throw CapabilityError("integer overflow in exact arithmetic");
  }
  return static_cast<Int>(x);
}

Int Mod(Int a, Int m) {
  const Int r = a % m;
  return r < 0 ? r + m : r;
}

Int CheckedMul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw CapabilityError("integer overflow in exact arithmetic");
  return out;
}

Int Lcm(Int a, Int b) { return CheckedMul(a / Gcd(a, b), b); }

Int Power(Int base, int exponent) {
  Int out = 1;
  for (int i = 0; i < exponent; ++i) out = CheckedMul(out, base);
  return out;
}

// x mod m_i for each modulus; moduli pairwise coprime.
Int Crt(const std::vector<std::pair<Int, Int>>& residues) {
  Int value = 0;
  Int modulus = 1;
  for (const auto& [r, m] : residues) {
    // value + modulus * t = r (mod m)
    const Int t = MulMod(Mod(r - value, m), ModInverse(Mod(modulus, m), m), m);
    value = Narrow(static_cast<Wide>(value) + static_cast<Wide>(modulus) * t);
    modulus = CheckedMul(modulus, m);
  }
  return Mod(value, modulus);
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int ParseInt(std::string_view s) {
  s = Trim(s);
  Int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InputError("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

// Smallest prime factor of every n below kSieveLimit, built on first use.
constexpr Int kSieveLimit = Int{1} << 20;

const std::vector<std::uint32_t>& SmallestPrimeFactors() {
  static const std::vector<std::uint32_t> spf = [] {
    std::vector<std::uint32_t> v(kSieveLimit, 0);
    for (Int i = 2; i < kSieveLimit; ++i) {
      if (v[i]) continue;
      for (Int j = i; j < kSieveLimit; j += i) {
        if (!v[j]) v[j] = static_cast<std::uint32_t>(i);
      }
    }
    return v;
  }();
  return spf;
}

void RequirePositive(Int n, const char* what) {
  if (n < 1) throw InputError(std::string(what) + " must be a positive integer");
}

// Inverse of a unit a modulo m, for m < 2^31.
std::uint32_t ModInverse32(std::uint32_t a, std::uint32_t m) {
  std::int32_t old_r = static_cast<std::int32_t>(a), r = static_cast<std::int32_t>(m);
  std::int32_t old_s = 1, s = 0;
  while (r) {
    const std::int32_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  return static_cast<std::uint32_t>(old_s < 0 ? old_s + static_cast<std::int32_t>(m) : old_s);
}

}  // namespace

bool IsPrime(Int n) {
  if (n < 2) return false;
  if (n < kSieveLimit) return SmallestPrimeFactors()[n] == n;
  for (Int d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<Int, int>> Factorize(Int n) {
  RequirePositive(n, "factorized number");
  std::vector<std::pair<Int, int>> out;
  if (n < kSieveLimit) {
    const auto& spf = SmallestPrimeFactors();
    while (n > 1) {
      const Int p = spf[n];
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    return out;
  }
  for (Int p = 2; p <= n / p; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int Valuation(Int n, Int p) {
  RequirePositive(n, "n");
  if (!IsPrime(p)) throw InputError(std::to_string(p) + " is not prime");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

Int PFreePart(Int n, Int p) {
  RequirePositive(n, "n");
  if (!IsPrime(p)) throw InputError(std::to_string(p) + " is not prime");
  while (n % p == 0) n /= p;
  return n;
}

Int Gcd(Int a, Int b) {
  // Binary gcd on magnitudes; avoids hardware division.
  std::uint64_t u = a < 0 ? -static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  std::uint64_t v = b < 0 ? -static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
  if (u == 0) return static_cast<Int>(v);
  if (v == 0) return static_cast<Int>(u);
  const int shift = std::countr_zero(u | v);
  u >>= std::countr_zero(u);
  do {
    v >>= std::countr_zero(v);
    if (u > v) std::swap(u, v);
    v -= u;
  } while (v != 0);
  return static_cast<Int>(u << shift);
}

Int MulMod(Int a, Int b, Int m) {
  constexpr Int kSmall = Int{1} << 31;
  if (a >= 0 && b >= 0 && a < kSmall && b < kSmall) return a * b % m;
  return static_cast<Int>(static_cast<Wide>(Mod(a, m)) * Mod(b, m) % m);
}

Int PowMod(Int a, Int e, Int m) {
  Int result = 1 % m;
  a = Mod(a, m);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = MulMod(result, a, m);
    a = MulMod(a, a, m);
  }
  return result;
}

Int ModInverse(Int a, Int m) {
  RequirePositive(m, "modulus");
  // extended Euclid on (a mod m, m)
  Int old_r = Mod(a, m), r = m, old_s = 1, s = 0;
  while (r) {
    const Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (m == 1) return 0;
  if (old_r != 1) throw InputError(std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  return Mod(old_s, m);
}

std::vector<Int> Units(Int n) {
  RequirePositive(n, "n");
  std::vector<Int> out;
  for (Int u = 0; u < n; ++u) {
    if (Gcd(u, n) == 1) out.push_back(u);
  }
  return out;
}

Int MultiplicativeOrder(Int a, Int n) {
  RequirePositive(n, "n");
  if (Gcd(a, n) != 1) throw InputError("multiplicative order of a non-unit");
  Int order = 1;
  for (Int x = Mod(a, n); x != 1 % n; x = MulMod(x, a, n)) ++order;
  return order;
}

CyclicEmbedding CyclicEmbedding::Make(Int source_order, Int target_order, Int multiplier) {
  RequirePositive(source_order, "source order");
  RequirePositive(target_order, "target order");
  if (target_order % source_order) {
    throw InputError("Z_" + std::to_string(source_order) + " does not embed in Z_" +
                     std::to_string(target_order));
  }
  Int reduced = Mod(multiplier, target_order);
  if (reduced == 0) reduced = target_order;
  if (Gcd(reduced, target_order) != target_order / source_order) {
    throw InputError("x -> " + std::to_string(multiplier) + "x is not an embedding Z_" +
                     std::to_string(source_order) + " -> Z_" + std::to_string(target_order));
  }
  return CyclicEmbedding(source_order, target_order, reduced);
}

CyclicEmbedding CyclicEmbedding::Canonical(Int source_order, Int target_order) {
  RequirePositive(source_order, "source order");
  return Make(source_order, target_order, target_order / source_order);
}

Int CyclicEmbedding::Apply(Int x) const {
  if (x < 0 || x >= source_) throw InputError("element outside Z_" + std::to_string(source_));
  return MulMod(multiplier_, x, target_);
}

CyclicEmbedding Compose(const CyclicEmbedding& outer, const CyclicEmbedding& inner) {
  if (inner.target_order() != outer.source_order()) throw InputError("embeddings are not composable");
  return CyclicEmbedding::Make(inner.source_order(), outer.target_order(),
                               MulMod(outer.multiplier(), inner.multiplier(), outer.target_order()));
}

std::vector<CyclicEmbedding> AllEmbeddings(Int k, Int n) {
  RequirePositive(k, "k");
  RequirePositive(n, "n");
  std::vector<CyclicEmbedding> out;
  if (n % k) return out;
  for (Int mult = 1; mult <= n; ++mult) {
    if (Gcd(mult, n) == n / k) out.push_back(CyclicEmbedding::Make(k, n, mult));
  }
  return out;
}

Int LemmaSolve(const CyclicEmbedding& e, const CyclicEmbedding& f) {
  if (e.source_order() != f.source_order() || e.target_order() != f.target_order()) {
    throw InputError("lemma: embeddings must share source and target orders");
  }
  const Int k = e.source_order();
  const Int n = e.target_order();
  const Int ell = n / k;
  // b*ell*s_e = ell*s_f (mod n)  <=>  b*s_e = s_f (mod k)
  const Int s_e = e.multiplier() / ell;
  const Int s_f = f.multiplier() / ell;
  const Int residue = MulMod(s_f, ModInverse(s_e, k), k);
  for (Int b = residue == 0 ? k : residue; b <= n + k; b += k) {
    if (Gcd(b, n) == 1) {
      const Int reduced = Mod(b, n) == 0 ? n : Mod(b, n);
      if (MulMod(reduced, e.multiplier(), n) != Mod(f.multiplier(), n)) {
        throw InternalError("lemma solution fails its congruence");
      }
      return reduced;
    }
  }
  throw InternalError("no unit lifts the residue; units mod n must surject onto units mod k");
}

Amalgam Amalgamate(const CyclicEmbedding& f, const CyclicEmbedding& g) {
  if (f.source_order() != g.source_order()) throw InputError("amalgamation needs a common source");
  const Int m = f.target_order();
  const Int n = g.target_order();
  const Int mn = CheckedMul(m, n);
  const CyclicEmbedding f_prime = CyclicEmbedding::Canonical(m, mn);
  const CyclicEmbedding g_prime = CyclicEmbedding::Canonical(n, mn);
  const Int h = LemmaSolve(Compose(f_prime, f), Compose(g_prime, g));
  Amalgam out{CyclicEmbedding::Make(m, mn, MulMod(h, f_prime.multiplier(), mn)), g_prime, h};
  for (Int x = 0; x < f.source_order(); ++x) {
    if (out.left.Apply(f.Apply(x)) != out.right.Apply(g.Apply(x))) {
      throw InternalError("amalgamation square does not commute at " + std::to_string(x));
    }
  }
  return out;
}

QZElem QZElem::Make(Int numerator, Int denominator, Int max_denominator) {
  if (denominator < 1) throw InputError("denominator must be positive");
  Int a = Mod(numerator, denominator);
  const Int g = Gcd(a, denominator);
  const Int d = denominator / g;
  if (d > max_denominator) {
    throw CapabilityError("denominator " + std::to_string(d) + " exceeds the configured bound " +
                          std::to_string(max_denominator));
  }
  return QZElem(a / g, d);
}

QZElem QZElem::Parse(std::string_view text, Int max_denominator) {
  text = Trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Make(ParseInt(text), 1, max_denominator);
  return Make(ParseInt(text.substr(0, slash)), ParseInt(text.substr(slash + 1)), max_denominator);
}

std::string QZElem::ToString() const { return std::to_string(num_) + "/" + std::to_string(den_); }

QZElem operator+(const QZElem& a, const QZElem& b) {
  const Int l = Lcm(a.den_, b.den_);
  constexpr Int kSmall = Int{1} << 31;
  if (l < kSmall) {
    // Both products are below 2^62, so the sum fits in Int.
    return QZElem::Make((a.num_ * (l / a.den_) + b.num_ * (l / b.den_)) % l, l, kUnbounded);
  }
  const Wide sum = static_cast<Wide>(a.num_) * (l / a.den_) + static_cast<Wide>(b.num_) * (l / b.den_);
  return QZElem::Make(static_cast<Int>(sum % l), l, kUnbounded);
}

QZElem operator-(const QZElem& a) { return QZElem::Make(-a.num_, a.den_, kUnbounded); }

PruferVector PruferVector::FromComponents(const std::map<Int, QZElem>& components) {
  PruferVector out;
  for (const auto& [p, x] : components) {
    if (!IsPrime(p)) throw InputError("component key " + std::to_string(p) + " is not prime");
    if (x.IsZero()) continue;
    if (PFreePart(x.denominator(), p) != 1) {
      throw InputError("component " + x.ToString() + " is not in U(" + std::to_string(p) + ")");
    }
    out.components_.emplace_back(p, x);
  }
  return out;
}

PruferVector PruferVector::Trusted(Components components) {
  PruferVector out;
  std::erase_if(components, [](const auto& entry) { return entry.second.IsZero(); });
  out.components_ = std::move(components);
  return out;
}

PruferVector PruferVector::Parse(std::string_view text, Int max_denominator) {
  text = Trim(text);
  if (text.empty() || text.front() != '{') return PruferDecompose(QZElem::Parse(text, max_denominator));
  if (text.back() != '}') throw InputError("unterminated Pruefer vector");
  std::string_view body = Trim(text.substr(1, text.size() - 2));
  std::map<Int, QZElem> components;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view item = Trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view() : Trim(body.substr(comma + 1));
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw InputError("expected 'p: a/d' in Pruefer vector");
    const Int p = ParseInt(item.substr(0, colon));
    const QZElem x = QZElem::Parse(item.substr(colon + 1), max_denominator);
    if (!components.emplace(p, x).second) throw InputError("repeated prime in Pruefer vector");
  }
  return FromComponents(components);
}

QZElem PruferVector::Component(Int p) const {
  auto it = std::lower_bound(components_.begin(), components_.end(), p,
                             [](const auto& entry, Int key) { return entry.first < key; });
  return it == components_.end() || it->first != p ? QZElem() : it->second;
}

std::string PruferVector::ToString() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [p, x] : components_) {
    out << (first ? "" : ", ") << p << ": " << x.ToString();
    first = false;
  }
  out << '}';
  return out.str();
}

PruferVector operator+(const PruferVector& a, const PruferVector& b) {
  PruferVector::Components sum;
  sum.reserve(a.components_.size() + b.components_.size());
  auto i = a.components_.begin();
  auto j = b.components_.begin();
  while (i != a.components_.end() || j != b.components_.end()) {
    if (j == b.components_.end() || (i != a.components_.end() && i->first < j->first)) {
      sum.push_back(*i++);
    } else if (i == a.components_.end() || j->first < i->first) {
      sum.push_back(*j++);
    } else {
      sum.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return PruferVector::Trusted(std::move(sum));
}

PruferVector operator-(const PruferVector& a) {
  PruferVector::Components neg;
  neg.reserve(a.components_.size());
  for (const auto& [p, x] : a.components_) neg.emplace_back(p, -x);
  return PruferVector::Trusted(std::move(neg));
}

PruferVector PruferDecompose(const QZElem& q) {
  const Int d = q.denominator();
  PruferVector::Components components;
  if (d < kSieveLimit) {
    // Walk the smallest-prime-factor table without building a factor list.
    // Everything fits in 32 bits here, and narrow division is much faster.
    const auto& spf = SmallestPrimeFactors();
    const auto d32 = static_cast<std::uint32_t>(d);
    const auto a32 = static_cast<std::uint32_t>(q.numerator());
    components.reserve(8);
    for (std::uint32_t rest = d32; rest > 1;) {
      const std::uint32_t p = spf[rest];
      std::uint32_t pe = 1;
      do {
        rest /= p;
        pe *= p;
      } while (spf[rest] == p);
      // q is reduced, so c is a unit mod p^e and c/p^e is reduced too.
      const std::uint64_t inverse = ModInverse32((d32 / pe) % pe, pe);
      const auto c = static_cast<Int>(static_cast<std::uint64_t>(a32) * inverse % pe);
      components.emplace_back(p, QZElem(c, pe));
    }
    return PruferVector::Trusted(std::move(components));
  }
  for (const auto& [p, e] : Factorize(d)) {
    const Int pe = Power(p, e);
    // c * (d / p^e) = a (mod p^e)
    const Int c = MulMod(q.numerator(), ModInverse(Mod(d / pe, pe), pe), pe);
    components.emplace_back(p, QZElem::Make(c, pe, kUnbounded));
  }
  return PruferVector::Trusted(std::move(components));
}

QZElem PruferRecompose(const PruferVector& x, Int max_denominator) {
  // Denominators are powers of distinct primes and each numerator is a
  // unit mod its prime, so the sum over the product of denominators is
  // already reduced.
  Int num = 0;
  Int den = 1;
  for (const auto& [p, c] : x.components()) {
    const Int d = c.denominator();
    const Int new_den = CheckedMul(den, d);
    if (new_den < (Int{1} << 31)) {
      const auto m = static_cast<std::uint64_t>(new_den);
      num = static_cast<Int>((static_cast<std::uint64_t>(num) * d + static_cast<std::uint64_t>(c.numerator()) * den) % m);
    } else {
      num = (MulMod(num, d, new_den) + MulMod(c.numerator(), den, new_den)) % new_den;
    }
    den = new_den;
  }
  if (den > max_denominator) {
    throw CapabilityError("denominator " + std::to_string(den) + " exceeds the configured bound " +
                          std::to_string(max_denominator));
  }
  return QZElem(num, den);
}

PruferVector Eta(Int m, Int l) {
  RequirePositive(m, "m");
  if (l < 0 || l >= m) throw InputError("eta: element outside Z_" + std::to_string(m));
  PruferVector::Components components;
  for (const auto& [p, e] : Factorize(m)) {
    components.emplace_back(p, QZElem::Make(MulMod(l, PFreePart(m, p), m), m, kUnbounded));
  }
  return PruferVector::Trusted(std::move(components));
}

PruferVector KApply(Int n, const PruferVector& x) {
  RequirePositive(n, "multiplier");
  PruferVector::Components components;
  components.reserve(x.components().size());
  for (const auto& [p, c] : x.components()) {
    const Int d = c.denominator();
    components.emplace_back(p, QZElem::Make(MulMod(PFreePart(n, p), c.numerator(), d), d, kUnbounded));
  }
  return PruferVector::Trusted(std::move(components));
}

bool HasHomomorphicSection(Int k, Int n) {
  RequirePositive(k, "k");
  RequirePositive(n, "n");
  if (n % k) throw InputError("k must divide n");
  for (const auto& [p, alpha] : Factorize(n)) {
    const int beta = Valuation(k, p);
    const bool ok = beta == 0 || beta == alpha || beta == 1 || (p == 2 && beta == 2);
    if (!ok) return false;
  }
  return true;
}

std::optional<Int> ExtendAutomorphism(Int b, Int k, Int n) {
  RequirePositive(k, "k");
  RequirePositive(n, "n");
  if (n % k) throw InputError(std::to_string(k) + " does not divide " + std::to_string(n));
  if (Gcd(b, k) != 1) throw InputError(std::to_string(b) + " is not a unit modulo " + std::to_string(k));
  if (!HasHomomorphicSection(k, n)) return std::nullopt;
  std::vector<std::pair<Int, Int>> residues;
  for (const auto& [p, alpha] : Factorize(n)) {
    const Int pa = Power(p, alpha);
    const int beta = Valuation(k, p);
    Int part;
    if (beta == 0) {
      part = 1;
    } else if (beta == alpha) {
      part = Mod(b, pa);
    } else if (p == 2 && beta == 1) {
      part = 1;
    } else if (p == 2) {  // beta == 2
      part = Mod(b, 4) == 1 ? 1 : pa - 1;
    } else {  // odd p, beta == 1: Teichmueller lift of b mod p
      part = PowMod(Mod(b, p), Power(p, alpha - 1), pa);
    }
    residues.emplace_back(part, pa);
  }
  const Int c = Crt(residues);
  return n == 1 ? 0 : c;
}

PermGroup AutomorphismsAsPerms(Int n) {
  RequirePositive(n, "n");
  std::vector<Perm> elements;
  for (Int u : Units(n)) {
    std::vector<int> images(n);
    for (Int x = 0; x < n; ++x) images[x] = static_cast<int>(MulMod(u, x, n));
    elements.emplace_back(std::move(images));
  }
  return PermGroup::FromElements(static_cast<int>(n), std::move(elements));
}

std::vector<int> SubgroupElements(Int k, Int n) {
  RequirePositive(k, "k");
  RequirePositive(n, "n");
  if (n % k) throw InputError("k must divide n");
  std::vector<int> out;
  for (Int j = 0; j < k; ++j) out.push_back(static_cast<int>(j * (n / k)));
  return out;
}

CyclicUniformityReport CheckCyclicUniformlyHomogeneous(Int n) {
  RequirePositive(n, "n");
  CyclicUniformityReport report;
  std::ostringstream detail;
  for (Int k = 1; k <= n; ++k) {
    if (n % k) continue;
    const std::vector<Int> units_k = Units(k);
    if (!HasHomomorphicSection(k, n)) {
      report.failing_subgroup = k;
      detail << "Z_" << n << ": no homomorphic extension operator on the order-" << k
             << " subgroup";
      for (Int b : units_k) {
        const Int order = MultiplicativeOrder(b, k);
        std::vector<Int> extensions;
        bool any_fits = false;
        for (Int c : Units(n)) {
          if (Mod(c - b, k) != 0) continue;
          extensions.push_back(c);
          any_fits |= order % MultiplicativeOrder(c, n) == 0;
        }
        if (!any_fits) {
          report.failing_unit = b;
          report.failing_extensions = extensions;
          detail << "; " << b << "^ has order " << order << " on Z_" << k
                 << " but its extensions {";
          for (std::size_t i = 0; i < extensions.size(); ++i) {
            detail << (i ? ", " : "") << extensions[i] << "^ (order "
                   << MultiplicativeOrder(extensions[i], n) << ")";
          }
          detail << "} all have larger order";
          break;
        }
      }
      report.detail = detail.str();
      return report;
    }
    std::map<Int, Int> section;
    for (Int b : units_k) {
      const Int c = *ExtendAutomorphism(b, k, n);
      if (Gcd(c, n) != 1) {
        detail << "extension of " << b << " mod " << k << " is not a unit mod " << n;
        report.detail = detail.str();
        return report;
      }
      for (Int x = 0; x < k; ++x) {
        const Int y = x * (n / k);
        if (MulMod(c, y, n) != MulMod(MulMod(b, x, k), n / k, n)) {
          detail << c << "^ does not extend " << b << "^ at " << y;
          report.detail = detail.str();
          return report;
        }
      }
      section[b] = c;
    }
    for (Int b1 : units_k) {
      for (Int b2 : units_k) {
        if (section[MulMod(b1, b2, k)] != MulMod(section[b1], section[b2], n)) {
          detail << "homomorphism law fails on Z_" << k << " at " << b1 << ", " << b2;
          report.detail = detail.str();
          return report;
        }
      }
    }
  }
  report.holds = true;
  report.detail = "every subgroup admits a homomorphic extension operator";
  return report;
}

}  // namespace homog::cyclic
