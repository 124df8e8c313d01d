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

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "homog/errors.h"

namespace homog {

namespace {

void RequireSubsetUniverse(const FinStructure& s) {
  if (s.size() > kMaxSubsetUniverse) {
    throw CapabilityError("subset enumeration limited to " + std::to_string(kMaxSubsetUniverse) +
                          " points");
  }
}

// Nonempty masks ordered by (popcount, value).
std::vector<std::uint32_t> MasksBySize(int n) {
  std::vector<std::uint32_t> masks;
  const std::uint32_t full = n == 0 ? 0 : ((std::uint64_t{1} << n) - 1);
  for (std::uint32_t m = 1; m <= full && m != 0; ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  return masks;
}

std::uint32_t ImageMask(const Perm& g, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (; mask; mask &= mask - 1) out |= std::uint32_t{1} << g(std::countr_zero(mask));
  return out;
}

std::string SetString(std::span<const int> v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

std::string MapString(const PartialIso& f) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < f.domain.size(); ++i) {
    out << (i ? ", " : "") << f.domain[i] << "->" << f.image[i];
  }
  out << '}';
  return out.str();
}

bool Extends(const Perm& g, const PartialIso& f) {
  for (std::size_t i = 0; i < f.domain.size(); ++i) {
    if (g(f.domain[i]) != f.image[i]) return false;
  }
  return true;
}

}  // namespace

HomogeneityResult CheckHomogeneous(const FinStructure& s) {
  RequireSubsetUniverse(s);
  const PermGroup aut = AutomorphismGroup(s);
  for (std::uint32_t mask : MasksBySize(s.size())) {
    const VertexSet domain = FromMask(mask);
    std::set<std::vector<int>> restrictions;
    for (const Perm& g : aut.elements()) {
      std::vector<int> images;
      for (int v : domain) images.push_back(g(v));
      restrictions.insert(std::move(images));
    }
    for (PartialIso& f : PartialEmbeddings(s, domain)) {
      if (!restrictions.contains(f.image)) return {false, std::move(f)};
    }
  }
  return {true, std::nullopt};
}

SetHomogeneityResult CheckSetHomogeneous(const FinStructure& s) {
  RequireSubsetUniverse(s);
  const PermGroup aut = AutomorphismGroup(s);
  for (std::uint32_t mask : MasksBySize(s.size())) {
    std::set<std::uint32_t> orbit;
    for (const Perm& g : aut.elements()) orbit.insert(ImageMask(g, mask));
    for (const PartialIso& f : PartialEmbeddings(s, FromMask(mask))) {
      if (!orbit.contains(ToMask(f.image))) return {false, std::make_pair(f.domain, f.ImageSet())};
    }
  }
  return {true, std::nullopt};
}

bool HasExtensionProperty(const FinStructure& s) {
  RequireSubsetUniverse(s);
  const std::vector<FinStructure> age = Age(s);
  auto embeddings = [](const FinStructure& from, const FinStructure& to) {
    std::vector<std::vector<int>> out;
    ForEachEmbedding(from, to, [&](std::span<const int> m) {
      out.emplace_back(m.begin(), m.end());
      return true;
    });
    return out;
  };
  std::vector<std::vector<std::vector<int>>> into_s;
  for (const FinStructure& rep : age) into_s.push_back(embeddings(rep, s));

  for (std::size_t ai = 0; ai < age.size(); ++ai) {
    for (std::size_t bi = 0; bi < age.size(); ++bi) {
      if (age[ai].size() > age[bi].size()) continue;
      for (const auto& f : embeddings(age[ai], age[bi])) {
        for (const auto& e : into_s[ai]) {
          const bool found = std::any_of(into_s[bi].begin(), into_s[bi].end(), [&](const auto& g) {
            for (std::size_t x = 0; x < e.size(); ++x) {
              if (g[f[x]] != e[x]) return false;
            }
            return true;
          });
          if (!found) return false;
        }
      }
    }
  }
  return true;
}

std::vector<SubstructureClass> SubstructureClasses(const FinStructure& s) {
  RequireSubsetUniverse(s);
  std::map<CanonicalForm, std::vector<std::uint32_t>> classes;
  const std::uint32_t full = s.size() == 0 ? 0 : ((std::uint64_t{1} << s.size()) - 1);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    classes[ComputeCanonicalForm(Induce(s, FromMask(mask)).structure)].push_back(mask);
  }
  std::vector<SubstructureClass> out;
  for (auto& [form, masks] : classes) out.push_back({form, std::move(masks)});
  return out;
}

std::optional<std::vector<Perm>> SearchSection(const PermGroup& ambient,
                                               std::span<const int> embedded,
                                               const PermGroup& sub_aut) {
  const std::vector<Perm>& sub = sub_aut.elements();
  const int order = static_cast<int>(sub.size());
  if (order > kMaxSectionGroupOrder) {
    throw CapabilityError("section search limited to groups of order " +
                          std::to_string(kMaxSectionGroupOrder));
  }
  if (sub_aut.degree() != static_cast<int>(embedded.size())) {
    throw InputError("section search: subgroup degree does not match the embedded copy");
  }
  for (int v : embedded) {
    if (v < 0 || v >= ambient.degree()) throw InputError("section search: vertex out of range");
  }

  // Extensions of each h, as indices into the ambient element list.
  std::vector<std::vector<int>> candidates(order);
  for (int i = 0; i < order; ++i) {
    for (int g = 0; g < static_cast<int>(ambient.order()); ++g) {
      const Perm& perm = ambient.elements()[g];
      bool extends = true;
      for (std::size_t j = 0; j < embedded.size() && extends; ++j) {
        extends = perm(embedded[j]) == embedded[sub[i](static_cast<int>(j))];
      }
      if (extends) candidates[i].push_back(g);
    }
    if (candidates[i].empty()) return std::nullopt;
  }

  // product[x][y] = index of sub[x] * sub[y]; inverse[x] likewise.
  std::vector<std::vector<int>> product(order, std::vector<int>(order));
  std::vector<int> inverse(order);
  for (int x = 0; x < order; ++x) {
    inverse[x] = sub_aut.IndexOf(sub[x].Inverse());
    for (int y = 0; y < order; ++y) product[x][y] = sub_aut.IndexOf(sub[x] * sub[y]);
  }

  const auto& amb = ambient.elements();
  std::vector<int> image(order, -1);
  auto respects = [&](int x, int y) {
    const int z = product[x][y];
    const Perm& gx = amb[image[x]];
    const Perm& gy = amb[image[y]];
    const Perm& gz = amb[image[z]];
    for (int v = 0; v < ambient.degree(); ++v) {
      if (gz(v) != gx(gy(v))) return false;
    }
    return true;
  };
  // All products among elements 0..i that involve i.
  auto consistent = [&](int i) {
    for (int x = 0; x <= i; ++x) {
      if (product[x][i] <= i && !respects(x, i)) return false;
      if (product[i][x] <= i && !respects(i, x)) return false;
      // x * y = i with y = x^-1 * i
      const int y = product[inverse[x]][i];
      if (y <= i && !respects(x, y)) return false;
    }
    return true;
  };

  std::vector<std::size_t> cursor(order, 0);
  int i = 0;
  while (i >= 0) {
    if (i == order) {
      std::vector<Perm> out;
      for (int k = 0; k < order; ++k) out.push_back(amb[image[k]]);
      return out;
    }
    bool advanced = false;
    while (cursor[i] < candidates[i].size()) {
      image[i] = candidates[i][cursor[i]++];
      if (consistent(i)) {
        advanced = true;
        break;
      }
    }
    if (advanced) {
      ++i;
    } else {
      image[i] = -1;
      cursor[i] = 0;
      --i;
    }
  }
  return std::nullopt;
}

std::optional<SectionWitness> SectionSearch(const FinStructure& s, std::span<const int> embedded) {
  if (embedded.empty()) throw InputError("section search needs a nonempty substructure");
  if (!CheckSetHomogeneous(s).holds) throw InputError("section search requires a set-homogeneous structure");
  InducedSubstructure sub = Induce(s, embedded);
  PermGroup sub_aut = AutomorphismGroup(sub.structure);
  auto images = SearchSection(AutomorphismGroup(s), sub.reindex, sub_aut);
  if (!images) return std::nullopt;
  SectionWitness w{sub.reindex, std::move(sub.structure), sub_aut, {}};
  for (std::size_t i = 0; i < sub_aut.order(); ++i) {
    w.section.emplace(sub_aut.elements()[i], (*images)[i]);
  }
  return w;
}

const Perm& UniformFunctor::operator()(const PartialIso& f) const {
  auto it = table_.find(f);
  if (it == table_.end()) throw InputError("not an isomorphism between substructures: " + MapString(f));
  return it->second;
}

UniformFunctor BuildUniformFunctor(const FinStructure& s, std::span<const SectionWitness> sections) {
  RequireSubsetUniverse(s);
  const PermGroup aut = AutomorphismGroup(s);

  std::map<CanonicalForm, const SectionWitness*> by_form;
  for (const SectionWitness& w : sections) {
    if (w.embedded.empty()) throw InputError("section for the empty substructure");
    const InducedSubstructure sub = Induce(s, w.embedded);
    if (!(sub.structure == w.class_rep)) throw InputError("section class_rep does not match S[embedded]");
    for (const auto& [h, g] : w.section) {
      if (!aut.Contains(g)) throw InputError("section value is not an automorphism");
      for (std::size_t j = 0; j < w.embedded.size(); ++j) {
        if (g(w.embedded[j]) != w.embedded[h(static_cast<int>(j))]) {
          throw InputError("section value does not extend its argument");
        }
      }
    }
    if (!IsHomomorphism(w.sub_aut, w.section)) throw InputError("section is not a homomorphism");
    by_form[ComputeCanonicalForm(sub.structure)] = &w;
  }

  UniformFunctor functor;
  for (const SubstructureClass& cls : SubstructureClasses(s)) {
    auto found = by_form.find(cls.form);
    if (found == by_form.end()) {
      throw InputError("no section for the class of " + SetString(FromMask(cls.masks.front())));
    }
    const SectionWitness& w = *found->second;
    const std::uint32_t rep_mask = ToMask(w.embedded);

    UniformFunctor::Anchor anchor{w.embedded, {}};
    std::map<std::uint32_t, std::pair<Perm, Perm>> phi;  // X -> (phi_X, phi_X^-1)
    for (std::uint32_t x : cls.masks) {
      auto it = std::find_if(aut.elements().begin(), aut.elements().end(),
                             [&](const Perm& g) { return ImageMask(g, rep_mask) == x; });
      if (it == aut.elements().end()) {
        throw InputError("structure is not set-homogeneous: no automorphism maps " +
                         SetString(w.embedded) + " onto " + SetString(FromMask(x)));
      }
      phi.emplace(x, std::make_pair(*it, it->Inverse()));
      anchor.transport.emplace(FromMask(x), *it);
    }
    functor.anchors_.push_back(std::move(anchor));

    std::vector<int> position(s.size(), -1);
    for (std::size_t j = 0; j < w.embedded.size(); ++j) position[w.embedded[j]] = static_cast<int>(j);

    for (std::uint32_t x : cls.masks) {
      const auto& [phi_x, phi_x_inv] = phi.at(x);
      for (PartialIso& f : PartialEmbeddings(s, FromMask(x))) {
        const auto& [phi_y, phi_y_inv] = phi.at(ToMask(f.image));
        std::vector<int> h(w.embedded.size());
        for (std::size_t j = 0; j < w.embedded.size(); ++j) {
          h[j] = position[phi_y_inv(f.Apply(phi_x(w.embedded[j])))];
        }
        const Perm& extension = w.section.at(Perm(std::move(h)));
        functor.table_.emplace(std::move(f), phi_y * extension * phi_x_inv);
      }
    }
  }

  if (auto violation = FindFunctorViolation(s, functor.table_)) {
    throw InternalError("constructed extension operator fails verification: " + *violation);
  }
  return functor;
}

std::optional<std::string> FindFunctorViolation(const FinStructure& s,
                                                const std::map<PartialIso, Perm>& table) {
  RequireSubsetUniverse(s);
  const int n = s.size();
  std::map<std::uint32_t, std::vector<const std::pair<const PartialIso, Perm>*>> by_domain;
  std::size_t expected = 0;
  const std::uint32_t full = n == 0 ? 0 : ((std::uint64_t{1} << n) - 1);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const VertexSet domain = FromMask(mask);
    for (const PartialIso& f : PartialEmbeddings(s, domain)) {
      ++expected;
      if (!table.contains(f)) return "no value for " + MapString(f);
    }
    // (1)
    const PartialIso id{domain, domain};
    if (!table.at(id).IsIdentity()) return "(1) K(id) is not the identity on " + SetString(domain);
  }
  if (table.size() != expected) return "table has entries that are not isomorphisms";

  for (const auto& entry : table) {
    const auto& [f, k] = entry;
    // (2): an automorphism, checked directly against the relations.
    const PartialIso total{FromMask(full), std::vector<int>(k.images().begin(), k.images().end())};
    if (k.degree() != n || !IsPartialIso(s, s, total)) {
      return "(2) K" + MapString(f) + " = " + k.ToCycleString() + " is not an automorphism";
    }
    if (!Extends(k, f)) return "(2) K" + MapString(f) + " = " + k.ToCycleString() + " does not extend it";
    by_domain[ToMask(f.domain)].push_back(&entry);
  }

  // (3): g: C -> A then f: A -> B.
  for (const auto& [g, kg] : table) {
    auto it = by_domain.find(ToMask(g.image));
    if (it == by_domain.end()) continue;
    for (const auto* entry : it->second) {
      const auto& [f, kf] = *entry;
      PartialIso fg{g.domain, std::vector<int>(g.image.size())};
      for (std::size_t i = 0; i < g.domain.size(); ++i) fg.image[i] = f.Apply(g.image[i]);
      if (table.at(fg) != kf * kg) {
        return "(3) K(f o g) != K(f) o K(g) for f = " + MapString(f) + ", g = " + MapString(g);
      }
    }
  }
  return std::nullopt;
}

UniformityResult CheckUniformlyHomogeneous(const FinStructure& s) {
  UniformityResult result;
  result.set_homogeneous = CheckSetHomogeneous(s).holds;
  if (!result.set_homogeneous) return result;

  const PermGroup aut = AutomorphismGroup(s);
  std::vector<SectionWitness> sections;
  for (const SubstructureClass& cls : SubstructureClasses(s)) {
    InducedSubstructure sub = Induce(s, FromMask(cls.masks.front()));
    PermGroup sub_aut = AutomorphismGroup(sub.structure);
    auto images = SearchSection(aut, sub.reindex, sub_aut);
    if (!images) {
      result.obstructing_class = sub.reindex;
      return result;
    }
    SectionWitness w{sub.reindex, std::move(sub.structure), sub_aut, {}};
    for (std::size_t i = 0; i < sub_aut.order(); ++i) {
      w.section.emplace(sub_aut.elements()[i], (*images)[i]);
    }
    sections.push_back(std::move(w));
  }
  result.functor = BuildUniformFunctor(s, sections);
  result.holds = true;
  return result;
}

std::optional<Obstruction> KatetovObstruction(const FinStructure& s) {
  if (!CheckHomogeneous(s).holds) {
    throw InputError("Katetov obstruction analysis requires a homogeneous structure");
  }
  const PermGroup aut = AutomorphismGroup(s);
  for (const Perm& h : aut.elements()) {
    if (h.IsIdentity()) continue;
    VertexSet fixed = h.FixedPoints();
    if (!fixed.empty()) return Obstruction{std::move(fixed), h};
  }
  return std::nullopt;
}

HomogeneityReport Analyze(const FinStructure& s) {
  HomogeneityReport report;
  HomogeneityResult hom = CheckHomogeneous(s);
  SetHomogeneityResult set = CheckSetHomogeneous(s);
  UniformityResult uni = CheckUniformlyHomogeneous(s);
  report.homogeneous = hom.holds;
  report.homogeneity_witness = std::move(hom.witness);
  report.set_homogeneous = set.holds;
  report.set_homogeneity_witness = std::move(set.witness);
  report.uniformly_homogeneous = uni.holds;
  report.obstructing_class = std::move(uni.obstructing_class);
  if (report.homogeneous) {
    report.obstruction = KatetovObstruction(s);
    report.katetov_obstructed = report.obstruction.has_value();
  }
  if ((report.uniformly_homogeneous && !report.homogeneous) ||
      (report.homogeneous && !report.set_homogeneous)) {
    throw InternalError("implication chain uniform => homogeneous => set-homogeneous violated");
  }
  return report;
}

}  // namespace homog
