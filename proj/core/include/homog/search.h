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

#ifndef HOMOG_SEARCH_H_
#define HOMOG_SEARCH_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "homog/structure.h"
#include "json.hpp"

// Exhaustive classification of small digraphs (one binary relation, loops
// allowed). A labeled digraph on n vertices is an n*n adjacency bitmask,
// arrow (i, j) at bit i*n + j.
namespace homog::search {

inline constexpr int kHardMaxVertices = 6;
// Largest n enumerated in full; n = 6 needs an explicit mask range.
inline constexpr int kFullEnumerationLimit = 5;

struct MaskRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;  // exclusive
  std::uint64_t size() const { return end - begin; }
  friend bool operator==(const MaskRange&, const MaskRange&) = default;
};

std::uint64_t LabeledDigraphCount(int n);

// Yields labeled digraphs in increasing bitmask order. Throws
// CapabilityError for n > kHardMaxVertices.
class DigraphStream {
 public:
  explicit DigraphStream(int n);
  DigraphStream(int n, MaskRange range);

  std::optional<FinStructure> Next();
  // Mask of the structure most recently returned by Next().
  std::uint64_t mask() const { return next_ - 1; }

 private:
  int n_;
  MaskRange range_;
  std::uint64_t next_;
};

// Necessary condition for homogeneity: all loopless vertices share one
// (out-degree, in-degree) pair, and so do all looped vertices. One-point
// substructures of the same loop type are isomorphic, so homogeneity needs
// them in a single orbit. Requires the digraph signature.
bool InvariantPrefilter(const FinStructure& s);
// Same test straight on a bitmask.
bool PrefilterMask(int n, std::uint64_t mask);

struct SearchConfig {
  int max_vertices = 5;
  int min_vertices = 1;
  bool prefilter = true;
  int chunks = 16;
  std::optional<std::filesystem::path> checkpoint_path;
  // 0 means: THREADS environment variable if set, else hardware concurrency.
  int threads = 0;
  // Restricts the enumeration at n = max_vertices; required for n = 6.
  std::optional<MaskRange> range;
};

struct ClassVerdict {
  std::uint64_t canonical_mask = 0;
  FinStructure representative;
  bool uniformly_homogeneous = false;
  std::optional<VertexSet> obstructing_class;
};

struct VertexCountReport {
  int n = 0;
  MaskRange range;
  bool complete = false;  // range covers all 2^(n*n) digraphs
  std::uint64_t enumerated = 0;
  std::uint64_t prefilter_survivors = 0;
  std::uint64_t homogeneous_labeled = 0;
  // Sorted by canonical mask.
  std::vector<ClassVerdict> homogeneous_classes;

  std::size_t uniform_classes() const;
  std::size_t not_uniform_classes() const;
};

struct SearchReport {
  int max_vertices = 0;
  bool prefilter = true;
  std::vector<VertexCountReport> per_n;
  double wall_seconds = 0;

  // Homogeneous classes that are not uniformly homogeneous, all n.
  std::vector<const ClassVerdict*> Witnesses() const;
};

// prefilter -> homogeneity -> dedup by canonical form -> uniform
// homogeneity per class. Chunks are disjoint mask ranges processed by a
// thread pool; the result does not depend on chunking or thread count.
// With a checkpoint path, finished chunks are recorded (file rewritten
// atomically after each) and skipped on a later run with the same
// prefilter setting. Throws InputError on bad configuration,
// CapabilityError for unsupported n, IoError if the checkpoint cannot be
// written.
SearchReport ClassifyAll(const SearchConfig& config);

// The unfiltered, undeduplicated verdict for one labeled digraph, computed
// the same way the pipeline does after the prefilter.
struct Verdict {
  bool homogeneous = false;
  bool uniformly_homogeneous = false;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};
Verdict PipelineVerdict(int n, std::uint64_t mask);

nlohmann::json ReportToJson(const SearchReport& report, bool include_timing = true);
std::string ReportToText(const SearchReport& report);

int ResolveThreads(int requested);

}  // namespace homog::search

#endif  // HOMOG_SEARCH_H_
