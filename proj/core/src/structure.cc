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

#include "homog/structure.h"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "homog/errors.h"

namespace homog {

Signature::Signature(std::vector<RelationSymbol> relations) : relations_(std::move(relations)) {
  std::set<std::string> names;
  for (const RelationSymbol& r : relations_) {
    if (r.name.empty()) throw InputError("relation symbol with empty name");
    if (r.arity < 1) throw InputError("relation '" + r.name + "' has arity < 1");
    if (!names.insert(r.name).second) throw InputError("duplicate relation symbol '" + r.name + "'");
  }
}

Signature Signature::Digraph() { return Signature({{"E", 2}}); }

std::optional<int> Signature::IndexOf(std::string_view name) const {
  for (int i = 0; i < num_relations(); ++i) {
    if (relations_[i].name == name) return i;
  }
  return std::nullopt;
}

bool Signature::IsDigraph() const { return relations_.size() == 1 && relations_[0].arity == 2; }

std::string Signature::ToString() const {
  if (relations_.empty()) return "(empty)";
  std::ostringstream out;
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (i) out << ", ";
    out << relations_[i].name << '/' << relations_[i].arity;
  }
  return out.str();
}

FinStructure::FinStructure(Signature signature, int size)
    : FinStructure(signature, size, std::vector<std::vector<Tuple>>(signature.num_relations())) {}

FinStructure::FinStructure(Signature signature, int size, std::vector<std::vector<Tuple>> tables)
    : signature_(std::move(signature)), size_(size), tables_(std::move(tables)) {
  if (size_ < 0) throw InputError("negative structure size");
  if (static_cast<int>(tables_.size()) != signature_.num_relations()) {
    throw InputError("relation table count does not match the signature");
  }
  for (int r = 0; r < signature_.num_relations(); ++r) {
    const RelationSymbol& sym = signature_.relations()[r];
    for (const Tuple& t : tables_[r]) {
      if (static_cast<int>(t.size()) != sym.arity) {
        throw InputError("tuple of wrong arity in relation '" + sym.name + "'");
      }
      for (int x : t) {
        if (x < 0 || x >= size_) {
          throw InputError("vertex " + std::to_string(x) + " out of range in relation '" +
                           sym.name + "'");
        }
      }
    }
    std::sort(tables_[r].begin(), tables_[r].end());
    tables_[r].erase(std::unique(tables_[r].begin(), tables_[r].end()), tables_[r].end());
  }
  BuildDense();
}

void FinStructure::BuildDense() {
  dense_.clear();
  for (int r = 0; r < signature_.num_relations(); ++r) {
    std::int64_t cells = 1;
    for (int i = 0; i < signature_.relations()[r].arity; ++i) {
      cells *= std::max(size_, 1);
      if (cells > kMaxDenseCells) {
        throw CapabilityError("relation table too large: size^arity exceeds 2^24");
      }
    }
    std::vector<std::uint8_t> bits(cells, 0);
    for (const Tuple& t : tables_[r]) bits[DenseIndex(t)] = 1;
    dense_.push_back(std::move(bits));
  }
}

std::int64_t FinStructure::DenseIndex(std::span<const int> tuple) const {
  std::int64_t index = 0;
  for (int x : tuple) index = index * size_ + x;
  return index;
}

bool FinStructure::Holds(int relation, std::span<const int> tuple) const {
  return dense_[relation][DenseIndex(tuple)] != 0;
}

FinStructure FinStructure::FromDigraphMask(int n, std::uint64_t mask) {
  if (n < 0 || n > 8) throw CapabilityError("digraph masks support at most 8 vertices");
  std::vector<Tuple> arrows;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((mask >> (i * n + j)) & 1) arrows.push_back({i, j});
    }
  }
  if (n * n < 64 && (mask >> (n * n)) != 0) throw InputError("digraph mask has bits beyond n*n");
  return FinStructure(Signature::Digraph(), n, {std::move(arrows)});
}

std::uint64_t FinStructure::DigraphMask() const {
  if (!signature_.IsDigraph()) throw InputError("DigraphMask requires the digraph signature");
  if (size_ > 8) throw CapabilityError("digraph masks support at most 8 vertices");
  std::uint64_t mask = 0;
  for (const Tuple& t : tables_[0]) mask |= std::uint64_t{1} << (t[0] * size_ + t[1]);
  return mask;
}

FinStructure FinStructure::Relabel(const Perm& sigma) const {
  if (sigma.degree() != size_) throw InputError("relabeling has the wrong degree");
  std::vector<std::vector<Tuple>> tables(tables_.size());
  for (std::size_t r = 0; r < tables_.size(); ++r) {
    for (Tuple t : tables_[r]) {
      for (int& x : t) x = sigma(x);
      tables[r].push_back(std::move(t));
    }
  }
  return FinStructure(signature_, size_, std::move(tables));
}

std::uint32_t ToMask(std::span<const int> vertices) {
  std::uint32_t mask = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxSubsetUniverse) throw InputError("vertex outside subset universe");
    mask |= std::uint32_t{1} << v;
  }
  return mask;
}

VertexSet FromMask(std::uint32_t mask) {
  VertexSet out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

InducedSubstructure Induce(const FinStructure& s, std::span<const int> vertices) {
  std::vector<int> reindex(vertices.begin(), vertices.end());
  std::sort(reindex.begin(), reindex.end());
  for (std::size_t i = 0; i < reindex.size(); ++i) {
    if (reindex[i] < 0 || reindex[i] >= s.size()) {
      throw InputError("vertex " + std::to_string(reindex[i]) + " out of range");
    }
    if (i && reindex[i] == reindex[i - 1]) throw InputError("repeated vertex in subset");
  }
  std::vector<int> position(s.size(), -1);
  for (std::size_t i = 0; i < reindex.size(); ++i) position[reindex[i]] = static_cast<int>(i);
  const int num_relations = s.signature().num_relations();
  std::vector<std::vector<Tuple>> tables(num_relations);
  for (int r = 0; r < num_relations; ++r) {
    for (const Tuple& t : s.table(r)) {
      Tuple u(t.size());
      bool inside = true;
      for (std::size_t k = 0; k < t.size() && inside; ++k) {
        u[k] = position[t[k]];
        inside = u[k] >= 0;
      }
      if (inside) tables[r].push_back(std::move(u));
    }
  }
  return {FinStructure(s.signature(), static_cast<int>(reindex.size()), std::move(tables)),
          std::move(reindex)};
}

VertexSet PartialIso::ImageSet() const {
  VertexSet out = image;
  std::sort(out.begin(), out.end());
  return out;
}

int PartialIso::Apply(int x) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), x);
  if (it == domain.end() || *it != x) throw InputError("point outside the partial map's domain");
  return image[it - domain.begin()];
}

bool IsPartialIso(const FinStructure& source, const FinStructure& target, const PartialIso& f) {
  if (f.domain.size() != f.image.size()) return false;
  if (!(source.signature() == target.signature())) return false;
  if (!std::is_sorted(f.domain.begin(), f.domain.end()) ||
      std::adjacent_find(f.domain.begin(), f.domain.end()) != f.domain.end()) {
    return false;
  }
  std::set<int> seen;
  for (int y : f.image) {
    if (y < 0 || y >= target.size() || !seen.insert(y).second) return false;
  }
  for (int x : f.domain) {
    if (x < 0 || x >= source.size()) return false;
  }
  const int k = static_cast<int>(f.domain.size());
  for (int r = 0; r < source.signature().num_relations(); ++r) {
    const int arity = source.signature().relations()[r].arity;
    // Odometer over all domain tuples of this arity.
    std::vector<int> idx(arity, 0);
    Tuple a(arity), b(arity);
    if (k == 0) continue;
    while (true) {
      for (int p = 0; p < arity; ++p) {
        a[p] = f.domain[idx[p]];
        b[p] = f.image[idx[p]];
      }
      if (source.Holds(r, a) != target.Holds(r, b)) return false;
      int p = arity - 1;
      while (p >= 0 && ++idx[p] == k) idx[p--] = 0;
      if (p < 0) break;
    }
  }
  return true;
}

namespace {

// Per-vertex invariant used to prune candidates. Diagonal membership is
// preserved by every embedding; position counts only by isomorphisms.
std::vector<std::vector<int>> VertexInvariants(const FinStructure& s, bool with_counts) {
  const int n = s.size();
  std::vector<std::vector<int>> inv(n);
  for (int r = 0; r < s.signature().num_relations(); ++r) {
    const int arity = s.signature().relations()[r].arity;
    std::vector<int> diag(arity);
    for (int v = 0; v < n; ++v) {
      std::fill(diag.begin(), diag.end(), v);
      inv[v].push_back(s.Holds(r, diag) ? 1 : 0);
    }
    if (!with_counts) continue;
    std::vector<std::vector<int>> counts(n, std::vector<int>(arity, 0));
    for (const Tuple& t : s.table(r)) {
      for (int p = 0; p < arity; ++p) ++counts[t[p]][p];
    }
    for (int v = 0; v < n; ++v) inv[v].insert(inv[v].end(), counts[v].begin(), counts[v].end());
  }
  return inv;
}

class Embedder {
 public:
  Embedder(const FinStructure& from, const FinStructure& to,
           const std::function<bool(std::span<const int>)>& visit)
      : from_(from), to_(to), visit_(visit), map_(from.size(), -1), used_(to.size(), false) {
    const bool iso = from.size() == to.size();
    const auto inv_from = VertexInvariants(from, iso);
    const auto inv_to = VertexInvariants(to, iso);
    candidates_.resize(from.size());
    for (int a = 0; a < from.size(); ++a) {
      for (int b = 0; b < to.size(); ++b) {
        if (inv_from[a] == inv_to[b]) candidates_[a].push_back(b);
      }
    }
    digraph_ = from.signature().IsDigraph();
  }

  void Run() {
    if (from_.size() > to_.size()) return;
    Extend(0);
  }

 private:
  bool Consistent(int i) const {
    if (digraph_) {
      const int bi = map_[i];
      if (from_.HasArrow(i, i) != to_.HasArrow(bi, bi)) return false;
      for (int j = 0; j < i; ++j) {
        const int bj = map_[j];
        if (from_.HasArrow(i, j) != to_.HasArrow(bi, bj)) return false;
        if (from_.HasArrow(j, i) != to_.HasArrow(bj, bi)) return false;
      }
      return true;
    }
    for (int r = 0; r < from_.signature().num_relations(); ++r) {
      const int arity = from_.signature().relations()[r].arity;
      std::vector<int> idx(arity, 0);
      Tuple a(arity), b(arity);
      while (true) {
        bool contains_i = false;
        for (int p = 0; p < arity; ++p) {
          a[p] = idx[p];
          b[p] = map_[idx[p]];
          contains_i |= idx[p] == i;
        }
        if (contains_i && from_.Holds(r, a) != to_.Holds(r, b)) return false;
        int p = arity - 1;
        while (p >= 0 && ++idx[p] == i + 1) idx[p--] = 0;
        if (p < 0) break;
      }
    }
    return true;
  }

  // Returns false once the visitor asked to stop.
  bool Extend(int i) {
    if (i == from_.size()) return visit_(std::span<const int>(map_));
    for (int b : candidates_[i]) {
      if (used_[b]) continue;
      map_[i] = b;
      if (Consistent(i)) {
        used_[b] = true;
        const bool keep_going = Extend(i + 1);
        used_[b] = false;
        if (!keep_going) return false;
      }
    }
    map_[i] = -1;
    return true;
  }

  const FinStructure& from_;
  const FinStructure& to_;
  const std::function<bool(std::span<const int>)>& visit_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> candidates_;
  bool digraph_ = false;
};

}  // namespace

void ForEachEmbedding(const FinStructure& from, const FinStructure& to,
                      const std::function<bool(std::span<const int>)>& visit) {
  if (!(from.signature() == to.signature())) throw InputError("structures have different signatures");
  Embedder(from, to, visit).Run();
}

std::vector<std::vector<int>> FindIsomorphisms(const FinStructure& a, const FinStructure& b) {
  std::vector<std::vector<int>> out;
  if (a.size() != b.size()) return out;
  ForEachEmbedding(a, b, [&](std::span<const int> m) {
    out.emplace_back(m.begin(), m.end());
    return true;
  });
  return out;
}

std::vector<PartialIso> PartialEmbeddings(const FinStructure& s, std::span<const int> domain) {
  InducedSubstructure sub = Induce(s, domain);
  std::vector<PartialIso> out;
  ForEachEmbedding(sub.structure, s, [&](std::span<const int> m) {
    out.push_back({sub.reindex, std::vector<int>(m.begin(), m.end())});
    return true;
  });
  return out;
}

PermGroup AutomorphismGroup(const FinStructure& s) {
  std::vector<Perm> elements;
  for (auto& images : FindIsomorphisms(s, s)) elements.emplace_back(std::move(images));
  // Already sorted and closed; FromElements re-checks closure, which is
  // cheap at the sizes this library handles.
  return PermGroup::FromElements(s.size(), std::move(elements));
}

std::string CanonicalForm::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  // Header bytes verbatim, then cells packed four to a hex digit.
  out.push_back(kDigits[code.size() > 0 ? code[0] >> 4 : 0]);
  out.push_back(kDigits[code.size() > 0 ? code[0] & 15 : 0]);
  out.push_back(kDigits[code.size() > 1 ? code[1] >> 4 : 0]);
  out.push_back(kDigits[code.size() > 1 ? code[1] & 15 : 0]);
  out.push_back(':');
  for (std::size_t i = 2; i < code.size(); i += 4) {
    int nibble = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      nibble = nibble * 2 + (i + k < code.size() ? code[i + k] : 0);
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

CanonicalLabeling Canonicalize(const FinStructure& s, int bound) {
  const int n = s.size();
  if (n > bound) {
    throw CapabilityError("canonical form limited to " + std::to_string(bound) +
                          " points, structure has " + std::to_string(n));
  }
  std::vector<int> arities;
  for (const auto& r : s.signature().relations()) arities.push_back(r.arity);

  // tau = sigma^-1; cell t of sigma . S is S(tau(t)).
  std::vector<int> tau(n);
  std::iota(tau.begin(), tau.end(), 0);
  std::vector<std::uint8_t> best;
  std::vector<int> best_tau;
  std::vector<std::uint8_t> code;
  do {
    code.assign({static_cast<std::uint8_t>(n >> 8), static_cast<std::uint8_t>(n & 255)});
    bool worse = false;
    bool tied = !best.empty();  // still equal to best so far
    for (std::size_t r = 0; r < arities.size() && !worse; ++r) {
      const int arity = arities[r];
      std::vector<int> idx(arity, 0), t(arity);
      if (n == 0) break;
      while (true) {
        for (int p = 0; p < arity; ++p) t[p] = tau[idx[p]];
        const std::uint8_t cell = s.Holds(static_cast<int>(r), t) ? 1 : 0;
        if (tied) {
          const std::uint8_t other = best[code.size()];
          if (cell > other) {
            worse = true;
            break;
          }
          if (cell < other) tied = false;
        }
        code.push_back(cell);
        int p = arity - 1;
        while (p >= 0 && ++idx[p] == n) idx[p--] = 0;
        if (p < 0) break;
      }
    }
    if (!worse && (best.empty() || code < best)) {
      best = code;
      best_tau = tau;
    }
  } while (std::next_permutation(tau.begin(), tau.end()));
  return {CanonicalForm{std::move(best)}, Perm(std::move(best_tau)).Inverse()};
}

CanonicalForm ComputeCanonicalForm(const FinStructure& s, int bound) {
  return Canonicalize(s, bound).form;
}

FinStructure CanonicalRepresentative(const FinStructure& s, int bound) {
  return s.Relabel(Canonicalize(s, bound).relabeling);
}

std::vector<FinStructure> Age(const FinStructure& s) {
  if (s.size() > kMaxSubsetUniverse) throw CapabilityError("age: universe too large");
  std::map<CanonicalForm, FinStructure> classes;
  const std::uint32_t full = (std::uint32_t{1} << s.size()) - 1;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const FinStructure sub = Induce(s, FromMask(mask)).structure;
    CanonicalLabeling cl = Canonicalize(sub);
    if (!classes.contains(cl.form)) classes.emplace(cl.form, sub.Relabel(cl.relabeling));
  }
  std::vector<FinStructure> out;
  for (auto& [form, rep] : classes) out.push_back(std::move(rep));
  return out;
}

}  // namespace homog
