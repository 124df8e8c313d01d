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

#include "oracles.h"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace homog::oracles {

namespace {

// Every tuple of the given arity over `points`, in lexicographic order.
void ForEachTuple(const std::vector<int>& points, int arity,
                  const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(arity, 0), tuple(arity);
  if (points.empty() && arity > 0) return;
  while (true) {
    for (int i = 0; i < arity; ++i) tuple[i] = points[idx[i]];
    visit(tuple);
    int i = arity - 1;
    while (i >= 0 && ++idx[i] == static_cast<int>(points.size())) idx[i--] = 0;
    if (i < 0) return;
  }
}

std::vector<std::vector<int>> Subsets(int n) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (m >> i & 1) s.push_back(i);
    }
    out.push_back(s);
  }
  return out;
}

bool Extends(const Images& g, const std::vector<int>& domain, const std::vector<int>& image) {
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (g[domain[i]] != image[i]) return false;
  }
  return true;
}

Images Compose(const Images& g, const Images& h) {
  Images out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = g[h[i]];
  return out;
}

bool IsIdentity(const Images& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != static_cast<int>(i)) return false;
  }
  return true;
}

// Bijections of a set onto another, as image vectors aligned with `from`.
std::vector<std::vector<int>> Bijections(const std::vector<int>& to) {
  std::vector<std::vector<int>> out;
  std::vector<int> image = to;
  std::sort(image.begin(), image.end());
  do {
    out.push_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace

bool NaiveIsIsomorphism(const FinStructure& s, const std::vector<int>& domain,
                        const std::vector<int>& image) {
  std::map<int, int> f;
  for (std::size_t i = 0; i < domain.size(); ++i) f[domain[i]] = image[i];
  bool ok = true;
  for (int r = 0; r < s.signature().num_relations() && ok; ++r) {
    ForEachTuple(domain, s.signature().relations()[r].arity, [&](const std::vector<int>& t) {
      std::vector<int> mapped(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) mapped[i] = f[t[i]];
      if (s.Holds(r, t) != s.Holds(r, mapped)) ok = false;
    });
  }
  return ok;
}

std::vector<Images> NaiveAutomorphisms(const FinStructure& s) {
  std::vector<int> all(s.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<Images> out;
  Images p = all;
  do {
    if (NaiveIsIsomorphism(s, all, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool NaiveIsHomogeneous(const FinStructure& s) {
  const auto autos = NaiveAutomorphisms(s);
  const auto subsets = Subsets(s.size());
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      if (a.size() != b.size()) continue;
      for (const auto& image : Bijections(b)) {
        if (!NaiveIsIsomorphism(s, a, image)) continue;
        if (std::none_of(autos.begin(), autos.end(),
                         [&](const Images& g) { return Extends(g, a, image); })) {
          return false;
        }
      }
    }
  }
  return true;
}

bool NaiveIsSetHomogeneous(const FinStructure& s) {
  const auto autos = NaiveAutomorphisms(s);
  const auto subsets = Subsets(s.size());
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      if (a.size() != b.size()) continue;
      const auto bij = Bijections(b);
      if (std::none_of(bij.begin(), bij.end(),
                       [&](const std::vector<int>& im) { return NaiveIsIsomorphism(s, a, im); })) {
        continue;
      }
      const bool moved = std::any_of(autos.begin(), autos.end(), [&](const Images& g) {
        std::vector<int> ga;
        for (int x : a) ga.push_back(g[x]);
        std::sort(ga.begin(), ga.end());
        return ga == b;
      });
      if (!moved) return false;
    }
  }
  return true;
}

bool NaiveExtensionProperty(const FinStructure& s) {
  const auto subsets = Subsets(s.size());
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      if (a.size() != b.size()) continue;
      for (const auto& image : Bijections(b)) {
        if (!NaiveIsIsomorphism(s, a, image)) continue;
        for (int v = 0; v < s.size(); ++v) {
          if (std::find(a.begin(), a.end(), v) != a.end()) continue;
          bool found = false;
          for (int w = 0; w < s.size() && !found; ++w) {
            if (std::find(image.begin(), image.end(), w) != image.end()) continue;
            std::vector<int> a2 = a, b2 = image;
            a2.push_back(v);
            b2.push_back(w);
            found = NaiveIsIsomorphism(s, a2, b2);
          }
          if (!found) return false;
        }
      }
    }
  }
  return true;
}

bool NaiveSectionsExist(const FinStructure& s) {
  const auto autos = NaiveAutomorphisms(s);
  const auto subsets = Subsets(s.size());
  std::set<std::vector<int>> covered;
  for (const auto& a : subsets) {
    if (covered.count(a)) continue;
    // Mark the whole isomorphism class of `a`.
    for (const auto& b : subsets) {
      if (b.size() != a.size()) continue;
      for (const auto& im : Bijections(b)) {
        if (NaiveIsIsomorphism(s, a, im)) {
          covered.insert(b);
          break;
        }
      }
    }
    // aut(A) as images aligned with `a`, and the candidate extensions of each.
    std::vector<std::vector<int>> sub_aut;
    for (const auto& im : Bijections(a)) {
      if (NaiveIsIsomorphism(s, a, im)) sub_aut.push_back(im);
    }
    std::vector<std::vector<Images>> candidates;
    for (const auto& im : sub_aut) {
      std::vector<Images> c;
      for (const Images& g : autos) {
        if (Extends(g, a, im)) c.push_back(g);
      }
      candidates.push_back(c);
    }
    std::vector<int> choice(sub_aut.size(), 0);
    bool found = false;
    while (!found) {
      bool hom = true;
      for (std::size_t i = 0; i < sub_aut.size() && hom; ++i) {
        for (std::size_t j = 0; j < sub_aut.size() && hom; ++j) {
          const Images& gi = candidates[i][choice[i]];
          const Images& gj = candidates[j][choice[j]];
          // The element of aut(A) given by i after j.
          std::vector<int> prod(a.size());
          for (std::size_t t = 0; t < a.size(); ++t) prod[t] = gi[gj[a[t]]];
          const auto k = std::find(sub_aut.begin(), sub_aut.end(), prod) - sub_aut.begin();
          hom = candidates[k][choice[k]] == Compose(gi, gj);
        }
      }
      if (hom) {
        found = true;
        break;
      }
      std::size_t i = 0;
      while (i < choice.size() && ++choice[i] == static_cast<int>(candidates[i].size())) choice[i++] = 0;
      if (i == choice.size()) break;
    }
    if (!found) return false;
  }
  return true;
}

bool NaiveIsUniform(const FinStructure& s) { return NaiveIsHomogeneous(s) && NaiveSectionsExist(s); }

bool ExhaustiveFunctorExists(const FinStructure& s) {
  const auto autos = NaiveAutomorphisms(s);
  struct Iso {
    std::vector<int> domain;
    std::vector<int> image;
  };
  std::vector<Iso> isos;
  for (const auto& a : Subsets(s.size())) {
    for (const auto& b : Subsets(s.size())) {
      if (a.size() != b.size()) continue;
      for (const auto& im : Bijections(b)) {
        if (NaiveIsIsomorphism(s, a, im)) isos.push_back({a, im});
      }
    }
  }
  auto index_of = [&](const std::vector<int>& domain, const std::vector<int>& image) {
    for (std::size_t i = 0; i < isos.size(); ++i) {
      if (isos[i].domain == domain && isos[i].image == image) return static_cast<int>(i);
    }
    return -1;
  };
  // Triples (g, f, g o f), grouped by their largest index.
  std::vector<std::vector<std::array<int, 3>>> triples(isos.size());
  for (std::size_t f = 0; f < isos.size(); ++f) {
    std::vector<int> fimage = isos[f].image;
    std::sort(fimage.begin(), fimage.end());
    for (std::size_t g = 0; g < isos.size(); ++g) {
      if (isos[g].domain != fimage) continue;
      std::vector<int> comp(isos[f].domain.size());
      for (std::size_t t = 0; t < comp.size(); ++t) {
        const auto pos = std::find(isos[g].domain.begin(), isos[g].domain.end(), isos[f].image[t]) -
                         isos[g].domain.begin();
        comp[t] = isos[g].image[pos];
      }
      const int c = index_of(isos[f].domain, comp);
      const int top = std::max({static_cast<int>(f), static_cast<int>(g), c});
      triples[top].push_back({static_cast<int>(g), static_cast<int>(f), c});
    }
  }
  std::vector<std::vector<int>> candidates(isos.size());
  for (std::size_t i = 0; i < isos.size(); ++i) {
    for (std::size_t g = 0; g < autos.size(); ++g) {
      if (!Extends(autos[g], isos[i].domain, isos[i].image)) continue;
      if (isos[i].domain == isos[i].image && !IsIdentity(autos[g])) continue;
      candidates[i].push_back(static_cast<int>(g));
    }
  }
  std::vector<int> value(isos.size(), -1);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == isos.size()) return true;
    for (int c : candidates[i]) {
      value[i] = c;
      bool ok = true;
      for (const auto& [g, f, gf] : triples[i]) {
        if (autos[value[gf]] != Compose(autos[value[g]], autos[value[f]])) {
          ok = false;
          break;
        }
      }
      if (ok && assign(i + 1)) return true;
    }
    value[i] = -1;
    return false;
  };
  return assign(0);
}

namespace cyc {

std::optional<Int> BruteLemma(Int n, Int e, Int f) {
  for (Int b = 1; b <= n; ++b) {
    if (std::gcd(b, n) == 1 && (b * e - f) % n == 0) return b;
  }
  return std::nullopt;
}

bool BruteSectionExists(Int k, Int n) {
  std::vector<Int> source;
  for (Int b = 0; b < k; ++b) {
    if (std::gcd(b, k) == 1) source.push_back(b);
  }
  if (k == 1) source = {0};
  std::vector<std::vector<Int>> candidates;
  for (Int b : source) {
    std::vector<Int> c;
    for (Int x = 0; x < n; ++x) {
      if (std::gcd(x, n) == 1 && x % k == b) c.push_back(x);
    }
    candidates.push_back(c);
  }
  auto index_of = [&](Int b) {
    return std::find(source.begin(), source.end(), b % k) - source.begin();
  };
  std::vector<Int> value(source.size());
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == source.size()) return true;
    for (Int c : candidates[i]) {
      value[i] = c;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        for (std::size_t l = 0; l <= i && ok; ++l) {
          const std::size_t p = index_of(source[j] * source[l]);
          if (p <= i) ok = value[p] == value[j] * value[l] % n;
        }
      }
      if (ok && assign(i + 1)) return true;
    }
    return false;
  };
  return assign(0);
}

Int BrutePruferNumerator(Int a, Int d, Int p) {
  Int pe = 1;
  while (d % (pe * p) == 0) pe *= p;
  const Int rest = d / pe;
  // a/d = x/pe + y/rest with x determined mod pe by a = x * rest (mod pe).
  for (Int x = 0; x < pe; ++x) {
    if ((x * rest - a) % pe == 0) return x;
  }
  return -1;
}

}  // namespace cyc

}  // namespace homog::oracles
