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

#include "homog/search.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "homog/errors.h"
#include "homog/homogeneity.h"
#include "homog/structure_io.h"

namespace homog::search {

std::uint64_t LabeledDigraphCount(int n) {
  if (n < 0 || n > kHardMaxVertices) throw CapabilityError("digraph enumeration supports n <= 6");
  return std::uint64_t{1} << (n * n);
}

DigraphStream::DigraphStream(int n) : DigraphStream(n, {0, LabeledDigraphCount(n)}) {}

DigraphStream::DigraphStream(int n, MaskRange range) : n_(n), range_(range), next_(range.begin) {
  if (range.end > LabeledDigraphCount(n) || range.begin > range.end) {
    throw InputError("mask range outside [0, 2^(n*n))");
  }
}

std::optional<FinStructure> DigraphStream::Next() {
  if (next_ >= range_.end) return std::nullopt;
  return FinStructure::FromDigraphMask(n_, next_++);
}

bool InvariantPrefilter(const FinStructure& s) {
  if (!s.signature().IsDigraph()) throw InputError("prefilter requires the digraph signature");
  std::optional<std::pair<int, int>> type[2];
  for (int v = 0; v < s.size(); ++v) {
    int out = 0, in = 0;
    for (int w = 0; w < s.size(); ++w) {
      out += s.HasArrow(v, w);
      in += s.HasArrow(w, v);
    }
    auto& slot = type[s.HasArrow(v, v) ? 1 : 0];
    if (!slot) {
      slot = std::make_pair(out, in);
    } else if (*slot != std::make_pair(out, in)) {
      return false;
    }
  }
  return true;
}

bool PrefilterMask(int n, std::uint64_t mask) {
  int degrees[2] = {-1, -1};  // packed out*16 + in per loop type
  for (int v = 0; v < n; ++v) {
    int out = 0, in = 0;
    for (int w = 0; w < n; ++w) {
      out += (mask >> (v * n + w)) & 1;
      in += (mask >> (w * n + v)) & 1;
    }
    const int loop = (mask >> (v * n + v)) & 1;
    const int packed = out * 16 + in;
    if (degrees[loop] == -1) {
      degrees[loop] = packed;
    } else if (degrees[loop] != packed) {
      return false;
    }
  }
  return true;
}

std::size_t VertexCountReport::uniform_classes() const {
  return std::count_if(homogeneous_classes.begin(), homogeneous_classes.end(),
                       [](const ClassVerdict& c) { return c.uniformly_homogeneous; });
}

std::size_t VertexCountReport::not_uniform_classes() const {
  return homogeneous_classes.size() - uniform_classes();
}

std::vector<const ClassVerdict*> SearchReport::Witnesses() const {
  std::vector<const ClassVerdict*> out;
  for (const auto& r : per_n) {
    for (const auto& c : r.homogeneous_classes) {
      if (!c.uniformly_homogeneous) out.push_back(&c);
    }
  }
  return out;
}

int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Verdict PipelineVerdict(int n, std::uint64_t mask) {
  const FinStructure s = FinStructure::FromDigraphMask(n, mask);
  Verdict v;
  if (!PrefilterMask(n, mask)) return v;
  v.homogeneous = CheckHomogeneous(s).holds;
  if (v.homogeneous) v.uniformly_homogeneous = CheckUniformlyHomogeneous(s).holds;
  return v;
}

namespace {

struct ChunkKey {
  int n;
  MaskRange range;
  friend auto operator<=>(const ChunkKey& a, const ChunkKey& b) {
    return std::tie(a.n, a.range.begin, a.range.end) <=> std::tie(b.n, b.range.begin, b.range.end);
  }
  friend bool operator==(const ChunkKey&, const ChunkKey&) = default;
};

struct ChunkResult {
  std::uint64_t enumerated = 0;
  std::uint64_t survivors = 0;
  std::uint64_t homogeneous = 0;
  std::set<std::uint64_t> classes;  // canonical masks
};

ChunkResult ProcessChunk(int n, MaskRange range, bool prefilter) {
  ChunkResult out;
  for (std::uint64_t mask = range.begin; mask < range.end; ++mask) {
    ++out.enumerated;
    if (prefilter && !PrefilterMask(n, mask)) continue;
    ++out.survivors;
    const FinStructure s = FinStructure::FromDigraphMask(n, mask);
    if (!CheckHomogeneous(s).holds) continue;
    ++out.homogeneous;
    out.classes.insert(CanonicalRepresentative(s).DigraphMask());
  }
  return out;
}

class Checkpoint {
 public:
  Checkpoint(std::optional<std::filesystem::path> path, bool prefilter)
      : path_(std::move(path)), prefilter_(prefilter) {}

  // Loads finished chunks recorded with the same prefilter setting.
  std::map<ChunkKey, ChunkResult> Load() const {
    std::map<ChunkKey, ChunkResult> done;
    if (!path_ || !std::filesystem::exists(*path_)) return done;
    std::ifstream in(*path_);
    if (!in) throw IoError(path_->string() + ": cannot read checkpoint");
    std::string line;
    if (!std::getline(in, line) || line != kHeader) {
      throw InputError(path_->string() + ": not a search checkpoint");
    }
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string tag;
      int pre = 0;
      ChunkKey key{};
      ChunkResult r;
      std::size_t num_classes = 0;
      fields >> tag >> pre >> key.n >> key.range.begin >> key.range.end >> r.enumerated >>
          r.survivors >> r.homogeneous >> num_classes;
      if (tag != "chunk" || !fields) throw InputError(path_->string() + ": malformed line: " + line);
      for (std::size_t i = 0; i < num_classes; ++i) {
        std::uint64_t mask = 0;
        if (!(fields >> std::hex >> mask)) throw InputError(path_->string() + ": malformed line: " + line);
        r.classes.insert(mask);
      }
      if ((pre != 0) == prefilter_) done.emplace(key, std::move(r));
    }
    return done;
  }

  void Record(const ChunkKey& key, const ChunkResult& r) {
    if (!path_) return;
    std::lock_guard lock(mu_);
    entries_[key] = r;
    const std::filesystem::path tmp = path_->string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw IoError(tmp.string() + ": cannot write checkpoint");
      out << kHeader << '\n';
      for (const auto& [k, v] : entries_) {
        out << "chunk " << (prefilter_ ? 1 : 0) << ' ' << k.n << ' ' << k.range.begin << ' '
            << k.range.end << ' ' << v.enumerated << ' ' << v.survivors << ' ' << v.homogeneous
            << ' ' << v.classes.size();
        for (std::uint64_t c : v.classes) out << ' ' << std::hex << c << std::dec;
        out << '\n';
      }
      if (!out) throw IoError(tmp.string() + ": write failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, *path_, ec);
    if (ec) throw IoError(path_->string() + ": cannot replace checkpoint: " + ec.message());
  }

  void Seed(const std::map<ChunkKey, ChunkResult>& loaded) { entries_ = loaded; }

 private:
  static constexpr const char* kHeader = "homog-search-checkpoint 1";
  std::optional<std::filesystem::path> path_;
  bool prefilter_;
  std::mutex mu_;
  std::map<ChunkKey, ChunkResult> entries_;
};

}  // namespace

SearchReport ClassifyAll(const SearchConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (config.min_vertices < 1 || config.max_vertices < config.min_vertices) {
    throw InputError("need 1 <= min_vertices <= max_vertices");
  }
  if (config.max_vertices > kHardMaxVertices) {
    throw CapabilityError("search supports at most " + std::to_string(kHardMaxVertices) + " vertices");
  }
  if (config.chunks < 1) throw InputError("chunks must be positive");

  std::vector<ChunkKey> tasks;
  SearchReport report;
  report.max_vertices = config.max_vertices;
  report.prefilter = config.prefilter;
  for (int n = config.min_vertices; n <= config.max_vertices; ++n) {
    MaskRange range{0, LabeledDigraphCount(n)};
    if (n == config.max_vertices && config.range) {
      if (config.range->begin > config.range->end || config.range->end > range.end) {
        throw InputError("mask range outside [0, 2^(n*n))");
      }
      range = *config.range;
    } else if (n > kFullEnumerationLimit) {
      throw CapabilityError("full enumeration of " + std::to_string(n) +
                            "-vertex digraphs is out of scope; supply a mask range");
    }
    VertexCountReport r;
    r.n = n;
    r.range = range;
    r.complete = range.begin == 0 && range.end == LabeledDigraphCount(n);
    report.per_n.push_back(std::move(r));
    const std::uint64_t size = range.size();
    const std::uint64_t pieces = std::min<std::uint64_t>(config.chunks, std::max<std::uint64_t>(size, 1));
    // floor(size * i / pieces) without overflow: pieces <= size.
    const std::uint64_t quotient = size / pieces, remainder = size % pieces;
    auto cut = [&](std::uint64_t i) { return range.begin + quotient * i + remainder * i / pieces; };
    for (std::uint64_t i = 0; i < pieces; ++i) {
      const MaskRange piece{cut(i), cut(i + 1)};
      if (piece.size()) tasks.push_back({n, piece});
    }
  }

  Checkpoint checkpoint(config.checkpoint_path, config.prefilter);
  const std::map<ChunkKey, ChunkResult> loaded = checkpoint.Load();
  checkpoint.Seed(loaded);

  std::vector<ChunkResult> results(tasks.size());
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    auto it = loaded.find(tasks[i]);
    if (it != loaded.end()) {
      results[i] = it->second;
    } else {
      pending.push_back(i);
    }
  }

  std::atomic<std::size_t> cursor{0};
  std::mutex error_mu;
  std::exception_ptr error;
  auto worker = [&] {
    while (true) {
      const std::size_t j = cursor.fetch_add(1);
      if (j >= pending.size()) return;
      {
        std::lock_guard lock(error_mu);
        if (error) return;
      }
      const std::size_t i = pending[j];
      try {
        results[i] = ProcessChunk(tasks[i].n, tasks[i].range, config.prefilter);
        checkpoint.Record(tasks[i], results[i]);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  const int threads = std::min<int>(ResolveThreads(config.threads), std::max<std::size_t>(pending.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  for (VertexCountReport& r : report.per_n) {
    std::set<std::uint64_t> classes;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (tasks[i].n != r.n) continue;
      r.enumerated += results[i].enumerated;
      r.prefilter_survivors += results[i].survivors;
      r.homogeneous_labeled += results[i].homogeneous;
      classes.insert(results[i].classes.begin(), results[i].classes.end());
    }
    for (std::uint64_t mask : classes) {
      ClassVerdict c;
      c.canonical_mask = mask;
      c.representative = FinStructure::FromDigraphMask(r.n, mask);
      UniformityResult u = CheckUniformlyHomogeneous(c.representative);
      c.uniformly_homogeneous = u.holds;
      c.obstructing_class = std::move(u.obstructing_class);
      r.homogeneous_classes.push_back(std::move(c));
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json ReportToJson(const SearchReport& report, bool include_timing) {
  using nlohmann::json;
  json stages = json::array();
  json witnesses = json::array();
  for (const VertexCountReport& r : report.per_n) {
    json classes = json::array();
    for (const ClassVerdict& c : r.homogeneous_classes) {
      json entry = {{"canonical_mask", c.canonical_mask},
                    {"uniformly_homogeneous", c.uniformly_homogeneous},
                    {"structure", StructureToJson(c.representative)}};
      if (c.obstructing_class) entry["obstructing_class"] = *c.obstructing_class;
      classes.push_back(entry);
      if (!c.uniformly_homogeneous) {
        witnesses.push_back({{"n", r.n},
                             {"canonical_mask", c.canonical_mask},
                             {"obstructing_class", c.obstructing_class ? json(*c.obstructing_class) : json()},
                             {"structure", StructureToJson(c.representative)}});
      }
    }
    stages.push_back({{"n", r.n},
                      {"labeled_total", LabeledDigraphCount(r.n)},
                      {"range", {r.range.begin, r.range.end}},
                      {"complete", r.complete},
                      {"enumerated", r.enumerated},
                      {"prefilter_survivors", r.prefilter_survivors},
                      {"homogeneous_labeled", r.homogeneous_labeled},
                      {"homogeneous_classes", r.homogeneous_classes.size()},
                      {"uniformly_homogeneous_classes", r.uniform_classes()},
                      {"not_uniform_classes", r.not_uniform_classes()},
                      {"classes", std::move(classes)}});
  }
  json doc = {{"schema", 1},
              {"kind", "search"},
              {"restriction", "digraphs: one binary relation E, loops allowed"},
              {"n", report.max_vertices},
              {"prefilter", report.prefilter},
              {"stages", std::move(stages)},
              {"witnesses", std::move(witnesses)}};
  if (include_timing) doc["wall_time_seconds"] = report.wall_seconds;
  return doc;
}

std::string ReportToText(const SearchReport& report) {
  std::ostringstream out;
  out << "Exhaustive search over digraphs (one binary relation E, loops allowed).\n"
      << "Other relational signatures are not enumerated.\n\n";
  out << std::left << std::setw(3) << "n" << std::right << std::setw(13) << "enumerated"
      << std::setw(12) << "prefilter" << std::setw(13) << "homogeneous" << std::setw(10)
      << "classes" << std::setw(10) << "uniform" << std::setw(13) << "not-uniform"
      << "  coverage\n";
  for (const VertexCountReport& r : report.per_n) {
    out << std::left << std::setw(3) << r.n << std::right << std::setw(13) << r.enumerated
        << std::setw(12) << r.prefilter_survivors << std::setw(13) << r.homogeneous_labeled
        << std::setw(10) << r.homogeneous_classes.size() << std::setw(10) << r.uniform_classes()
        << std::setw(13) << r.not_uniform_classes() << "  "
        << (r.complete ? "complete" : "masks [" + std::to_string(r.range.begin) + ", " +
                                          std::to_string(r.range.end) + ")")
        << '\n';
  }
  out << '\n';
  const auto witnesses = report.Witnesses();
  if (witnesses.empty()) {
    out << "No homogeneous digraph that fails uniform homogeneity was found in the "
           "enumerated range.\n";
  } else {
    out << "Homogeneous but not uniformly homogeneous:\n";
    for (const ClassVerdict* c : witnesses) {
      out << "  " << StructureToJson(c->representative).dump();
      if (c->obstructing_class) {
        out << "  obstructing class {";
        for (std::size_t i = 0; i < c->obstructing_class->size(); ++i) {
          out << (i ? "," : "") << (*c->obstructing_class)[i];
        }
        out << '}';
      }
      out << '\n';
    }
  }
  out << "wall time: " << std::fixed << std::setprecision(2) << report.wall_seconds << " s\n";
  return out.str();
}

}  // namespace homog::search
