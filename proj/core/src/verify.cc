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

#include "homog/verify.h"

#include <functional>
#include <set>
#include <sstream>

#include "homog/cyclic.h"
#include "homog/finite_sets.h"
#include "homog/fixtures.h"
#include "homog/homogeneity.h"
#include "homog/perm.h"
#include "homog/structure.h"

namespace homog {

namespace {

using fixtures::DigraphM;
using fixtures::Eta;
using fixtures::MPermNames;
using fixtures::MVertexNames;
namespace cy = cyclic;

// Each check returns its detail string on success and throws CheckFailure
// carrying the counterexample otherwise.
struct CheckFailure {
  std::string detail;
};

[[noreturn]] void Fail(const std::string& detail) { throw CheckFailure{detail}; }

std::string CheckAutIsCyclic() {
  const FinStructure m = DigraphM();
  const PermGroup aut = AutomorphismGroup(m);
  const Perm eta = Eta();
  const Perm gens[] = {eta};
  const PermGroup generated = GroupClosure(6, gens);
  if (!(aut == generated)) Fail("aut(M) has " + std::to_string(aut.order()) + " elements, <eta> has " +
                                std::to_string(generated.order()));
  if (aut.order() != 4) Fail("|aut(M)| = " + std::to_string(aut.order()));
  if ((eta * eta).IsIdentity()) Fail("eta^2 = id");
  if (!(eta * eta * eta * eta).IsIdentity()) Fail("eta^4 != id");
  return "|aut(M)| = 4, generated by eta = " + MPermNames(eta) + " of order 4";
}

std::string CheckMHomogeneous() {
  const HomogeneityResult r = CheckHomogeneous(DigraphM());
  if (!r.holds) {
    Fail("isomorphism " + MVertexNames(r.witness->domain) + " -> " + MVertexNames(r.witness->image) +
         " does not extend");
  }
  return "every isomorphism between nonempty substructures extends to an automorphism";
}

std::string CheckMNotUniform() {
  const UniformityResult r = CheckUniformlyHomogeneous(DigraphM());
  if (r.holds) Fail("a uniform extension operator was found");
  if (!r.obstructing_class) Fail("M is not set-homogeneous");
  if (*r.obstructing_class != VertexSet{fixtures::kA, fixtures::kB}) {
    Fail("obstructing class " + MVertexNames(*r.obstructing_class) + ", expected {a,b}");
  }
  return "no homomorphic section aut(A) -> aut(M) for A = {a,b}";
}

std::string CheckSwapExtensions() {
  const PermGroup aut = AutomorphismGroup(DigraphM());
  std::vector<Perm> extensions;
  for (const Perm& g : aut.elements()) {
    if (g(fixtures::kA) == fixtures::kB && g(fixtures::kB) == fixtures::kA) extensions.push_back(g);
  }
  const Perm eta = Eta();
  const std::set<Perm> expected = {eta, eta * eta * eta};
  if (std::set<Perm>(extensions.begin(), extensions.end()) != expected) {
    Fail("extensions of the {a,b}-swap are not {eta, eta^3}");
  }
  for (const Perm& g : extensions) {
    if (g.Order() != 4) Fail(MPermNames(g) + " has order " + std::to_string(g.Order()));
  }
  return "extensions of the swap of a and b: " + MPermNames(extensions[0]) + ", " +
         MPermNames(extensions[1]) + ", both of order 4; none is an involution";
}

std::string CheckCycleClaim() {
  const FinStructure m = DigraphM();
  const VertexSet c = fixtures::CycleC();
  const InducedSubstructure sub = Induce(m, c);
  if (FindIsomorphisms(sub.structure, fixtures::DirectedCycle(4)).empty()) {
    Fail("M restricted to C is not a directed 4-cycle");
  }
  const PermGroup aut_c = AutomorphismGroup(sub.structure);
  if (aut_c.order() != 4) Fail("|aut(M|C)| = " + std::to_string(aut_c.order()));
  std::vector<Perm> powers{Perm::Identity(6)};
  for (int i = 1; i < 4; ++i) powers.push_back(Eta() * powers.back());
  for (const Perm& psi : aut_c.elements()) {
    int matches = 0;
    for (const Perm& p : powers) {
      bool same = true;
      for (std::size_t j = 0; j < c.size(); ++j) same &= p(c[j]) == c[psi(static_cast<int>(j))];
      matches += same;
    }
    if (matches != 1) {
      Fail("automorphism " + psi.ToCycleString() + " of M|C matches " + std::to_string(matches) +
           " powers of eta");
    }
  }
  return "each of the 4 automorphisms of M|C is the restriction of exactly one eta^i";
}

std::string CheckCycleHomogeneous() {
  if (!CheckHomogeneous(fixtures::DirectedCycle(4)).holds) Fail("directed 4-cycle is not homogeneous");
  return "directed 4-cycle is homogeneous";
}

std::string CheckEnsObstruction() {
  for (int n = 1; n <= 6; ++n) {
    const auto ob = EnsObstruction(n);
    if (n <= 2 && ob) Fail("Ens(" + std::to_string(n) + ") has an obstruction");
    if (n >= 3) {
      if (!ob) Fail("no obstruction for Ens(" + std::to_string(n) + ")");
      if (ob->witness.IsIdentity() || ob->fixed_set.empty()) Fail("degenerate obstruction");
      for (int v : ob->fixed_set) {
        if (ob->witness(v) != v) Fail("witness moves a point of its fixed set");
      }
    }
  }
  const auto three = EnsObstruction(3);
  if (three->fixed_set != VertexSet{0} || three->witness != Perm::FromCycles(3, {{1, 2}})) {
    Fail("Ens(3) witness is not A = {0}, h = (1 2)");
  }
  return "obstruction present for 3 <= n <= 6 (n = 3: A = {0}, h = (1 2)); none for n <= 2";
}

// All bijections between subsets of {0..n-1}.
std::vector<SetBijection> AllSetBijections(int n) {
  std::vector<SetBijection> out;
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      const VertexSet domain = FromMask(a);
      VertexSet image = FromMask(b);
      if (domain.size() != image.size()) continue;
      do {
        out.push_back({n, domain, image});
      } while (std::next_permutation(image.begin(), image.end()));
    }
  }
  return out;
}

std::string CheckEnsFunctor() {
  std::size_t pairs = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto all = AllSetBijections(n);
    std::map<std::uint32_t, std::vector<const SetBijection*>> by_domain;
    for (const auto& f : all) by_domain[ToMask(f.domain)].push_back(&f);
    for (const auto& f : all) {
      if (f.domain == f.image && !EnsExtend(f).IsIdentity()) Fail("K(id) != id on n = " + std::to_string(n));
      const Perm kf = EnsExtend(f);
      for (const SetBijection* g : by_domain[ToMask(f.image)]) {
        SetBijection gf{n, f.domain, std::vector<int>(f.domain.size())};
        for (std::size_t i = 0; i < f.domain.size(); ++i) {
          const auto pos = std::find(g->domain.begin(), g->domain.end(), f.image[i]) - g->domain.begin();
          gf.image[i] = g->image[pos];
        }
        ++pairs;
        if (EnsExtend(gf) != EnsExtend(*g) * kf) Fail("composition law fails on n = " + std::to_string(n));
      }
    }
  }
  return "identity and composition laws hold on " + std::to_string(pairs) + " composable pairs, n <= 5";
}

std::string CheckEmbedSym() {
  std::size_t pairs = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto sk = AllPermutations(k);
      std::set<Perm> images;
      for (const Perm& g : sk) {
        images.insert(EmbedSym(g, n));
        for (const Perm& h : sk) {
          ++pairs;
          if (EmbedSym(g * h, n) != EmbedSym(g, n) * EmbedSym(h, n)) {
            Fail("embed_sym not multiplicative for k = " + std::to_string(k) + ", n = " + std::to_string(n));
          }
        }
      }
      if (images.size() != sk.size()) Fail("embed_sym not injective");
      if (!EmbedSym(Perm::Identity(k), n).IsIdentity()) Fail("embed_sym(id) != id");
    }
  }
  return "S_k -> S_n is an injective homomorphism for 1 <= k <= n <= 6 (" + std::to_string(pairs) +
         " products)";
}

std::string CheckLemma() {
  std::size_t pairs = 0;
  for (cy::Int n = 1; n <= 60; ++n) {
    const auto units = cy::Units(n);
    for (cy::Int k = 1; k <= n; ++k) {
      if (n % k) continue;
      const auto embeddings = cy::AllEmbeddings(k, n);
      for (const auto& e : embeddings) {
        for (const auto& f : embeddings) {
          ++pairs;
          const cy::Int b = cy::LemmaSolve(e, f);
          cy::Int brute = -1;
          for (cy::Int u : units) {
            if (cy::MulMod(u == 0 ? n : u, e.multiplier(), n) == f.multiplier() % n) {
              brute = u == 0 ? n : u;
              break;
            }
          }
          if (brute < 0 || b != brute) {
            Fail("n = " + std::to_string(n) + ", e = " + std::to_string(e.multiplier()) + ", f = " +
                 std::to_string(f.multiplier()) + ": lemma gives " + std::to_string(b) +
                 ", brute force " + std::to_string(brute));
          }
        }
      }
    }
  }
  return "f = b^ o e solved for all " + std::to_string(pairs) + " embedding pairs with n <= 60";
}

std::string CheckAmalgamation() {
  std::size_t squares = 0;
  for (cy::Int k = 1; k <= 12; ++k) {
    for (cy::Int m = k; m <= 12; m += k) {
      for (cy::Int n = k; n <= 12; n += k) {
        for (const auto& f : cy::AllEmbeddings(k, m)) {
          for (const auto& g : cy::AllEmbeddings(k, n)) {
            const cy::Amalgam a = cy::Amalgamate(f, g);
            for (cy::Int x = 0; x < k; ++x) {
              if (a.left.Apply(f.Apply(x)) != a.right.Apply(g.Apply(x))) {
                Fail("square does not commute for k = " + std::to_string(k));
              }
            }
            ++squares;
          }
        }
      }
    }
  }
  return std::to_string(squares) + " amalgamation squares commute (k, m, n <= 12)";
}

std::string CheckKatetovConditions() {
  std::vector<cy::PruferVector> sample;
  for (cy::Int d = 1; d <= 12; ++d) {
    for (cy::Int a = 0; a < d; ++a) {
      if (cy::Gcd(a, d) == 1) sample.push_back(cy::PruferDecompose(cy::QZElem::Make(a, d)));
    }
  }
  std::size_t count = 0;
  for (cy::Int n = 1; n <= 30; ++n) {
    for (const auto& x : sample) {
      const auto kx = cy::KApply(n, x);
      if (kx.IsZero() != x.IsZero()) Fail("condition 1: K(" + std::to_string(n) + "^) not injective");
      for (const auto& y : sample) {
        ++count;
        if (cy::KApply(n, x + y) != kx + cy::KApply(n, y)) {
          Fail("condition 1: K(" + std::to_string(n) + "^) not additive at " + x.ToString() + ", " +
               y.ToString());
        }
      }
    }
    for (cy::Int n2 = 1; n2 <= 30; ++n2) {
      for (const auto& x : sample) {
        ++count;
        if (cy::KApply(n * n2, x) != cy::KApply(n2, cy::KApply(n, x))) {
          Fail("condition 2 fails for n1 = " + std::to_string(n) + ", n2 = " + std::to_string(n2));
        }
      }
    }
  }
  for (cy::Int m = 1; m <= 30; ++m) {
    for (cy::Int k = 1; k <= 30; ++k) {
      for (const auto& e : cy::AllEmbeddings(m, m * k)) {
        for (cy::Int x = 0; x < m; ++x) {
          ++count;
          if (cy::Eta(m * k, e.Apply(x)) != cy::KApply(e.multiplier(), cy::Eta(m, x))) {
            Fail("condition 3 fails: m = " + std::to_string(m) + ", k = " + std::to_string(k) +
                 ", n = " + std::to_string(e.multiplier()) + ", x = " + std::to_string(x));
          }
        }
      }
    }
  }
  return "conditions 1-3 hold on " + std::to_string(count) +
         " instances (naturality exhaustive for m, k <= 30)";
}

std::string CheckCyclicUniform() {
  std::vector<cy::Int> failing;
  std::string first_detail;
  for (cy::Int n = 1; n <= 30; ++n) {
    const cy::CyclicUniformityReport r = cy::CheckCyclicUniformlyHomogeneous(n);
    if (r.holds) continue;
    if (failing.empty()) first_detail = r.detail;
    failing.push_back(n);
  }
  if (!failing.empty()) {
    std::string list;
    for (cy::Int n : failing) list += (list.empty() ? "" : ", ") + std::to_string(n);
    Fail("fails for n = " + list + "; " + first_detail);
  }
  return "Z_n is uniformly homogeneous for every n <= 30";
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationReport VerifyConstructions() {
  struct Entry {
    const char* id;
    const char* title;
    std::function<std::string()> run;
  };
  const Entry entries[] = {
      {"i", "aut(M) is cyclic of order 4, generated by eta", CheckAutIsCyclic},
      {"ii", "M is homogeneous", CheckMHomogeneous},
      {"iii", "M is not uniformly homogeneous; obstructing class {a,b}", CheckMNotUniform},
      {"iv", "no involution of M extends the swap of a and b", CheckSwapExtensions},
      {"v", "automorphisms of M|C are restrictions of powers of eta", CheckCycleClaim},
      {"vi", "the directed 4-cycle is homogeneous", CheckCycleHomogeneous},
      {"vii", "Ens(n) has a Katetov obstruction iff n >= 3", CheckEnsObstruction},
      {"viii", "Ens(n) extension operator is a functor (n <= 5)", CheckEnsFunctor},
      {"ix", "h -> h u id embeds S_k in S_n (k <= n <= 6)", CheckEmbedSym},
      {"x", "cyclic lemma: f = h o e solvable (n <= 60)", CheckLemma},
      {"xi", "cyclic amalgamation squares commute (k, m, n <= 12)", CheckAmalgamation},
      {"xii", "Katetov functor on finite cyclic groups: conditions 1-3", CheckKatetovConditions},
      {"xiii", "Z_n is uniformly homogeneous (n <= 30)", CheckCyclicUniform},
  };
  VerificationReport report;
  for (const Entry& e : entries) {
    CheckResult result{e.id, e.title, false, ""};
    try {
      result.detail = e.run();
      result.passed = true;
    } catch (const CheckFailure& failure) {
      result.detail = failure.detail;
    } catch (const std::exception& ex) {
      result.detail = std::string("error: ") + ex.what();
    }
    report.checks.push_back(std::move(result));
  }
  return report;
}

nlohmann::json VerificationToJson(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"schema", 1}, {"kind", "verify-paper"}, {"passed", report.passed()}, {"checks", checks}};
}

std::string VerificationToText(const VerificationReport& report) {
  std::ostringstream out;
  for (const CheckResult& c : report.checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << '(' << c.id << ") " << c.title << "\n       "
        << c.detail << '\n';
  }
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                    [](const CheckResult& c) { return !c.passed; });
  out << report.checks.size() - failed << '/' << report.checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace homog
