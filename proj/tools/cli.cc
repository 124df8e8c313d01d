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

#include "cli.h"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "homog/cyclic.h"
#include "homog/errors.h"
#include "homog/fixtures.h"
#include "homog/homogeneity.h"
#include "homog/perm.h"
#include "homog/search.h"
#include "homog/structure.h"
#include "homog/structure_io.h"
#include "homog/verify.h"
#include "json.hpp"

namespace homog::cli {

namespace {

using nlohmann::json;
namespace cy = cyclic;

enum class Format { kText, kJson };

struct Options {
  Format format = Format::kText;
};

std::string SetString(const VertexSet& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string MapString(const PartialIso& f) {
  std::string s;
  for (std::size_t i = 0; i < f.domain.size(); ++i) {
    s += (i ? ", " : "") + std::to_string(f.domain[i]) + "->" + std::to_string(f.image[i]);
  }
  return s;
}

// Structures equal to the fixture M get their vertices decoded to the names
// a, b, a0, b0, a1, b1 in text output.
struct Namer {
  bool is_m = false;
  std::string Set(const VertexSet& v) const {
    return is_m ? SetString(v) + " = " + fixtures::MVertexNames(v) : SetString(v);
  }
  std::string Perm(const homog::Perm& p) const {
    return is_m ? p.ToCycleString() + " = " + fixtures::MPermNames(p) : p.ToCycleString();
  }
};

void Emit(std::ostream& out, const Options& opt, const json& doc, const std::string& text) {
  if (opt.format == Format::kJson) {
    out << doc.dump(2) << '\n';
  } else {
    out << text;
  }
}

json PartialIsoJson(const PartialIso& f) { return {{"domain", f.domain}, {"image", f.image}}; }

int RunCheck(const std::string& path, const Options& opt, std::ostream& out) {
  const FinStructure s = LoadStructure(path);
  const HomogeneityReport r = Analyze(s);
  const Namer names{s == fixtures::DigraphM()};

  json doc = {{"schema", 1},
              {"kind", "check"},
              {"size", s.size()},
              {"signature", s.signature().ToString()},
              {"homogeneous", r.homogeneous},
              {"set_homogeneous", r.set_homogeneous},
              {"uniformly_homogeneous", r.uniformly_homogeneous},
              {"katetov_obstructed", r.katetov_obstructed ? json(*r.katetov_obstructed) : json()}};
  json witnesses = json::object();
  witnesses["homogeneity"] = r.homogeneity_witness ? PartialIsoJson(*r.homogeneity_witness) : json();
  witnesses["set_homogeneity"] =
      r.set_homogeneity_witness
          ? json{{"A", r.set_homogeneity_witness->first}, {"B", r.set_homogeneity_witness->second}}
          : json();
  witnesses["obstructing_class"] = r.obstructing_class ? json(*r.obstructing_class) : json();
  witnesses["obstruction"] =
      r.obstruction ? json{{"fixed_set", r.obstruction->fixed_set},
                           {"automorphism", r.obstruction->witness.images()}}
                    : json();
  doc["witnesses"] = witnesses;

  std::ostringstream text;
  auto flag = [](bool b) { return b ? "true" : "false"; };
  text << "structure: " << s.size() << (s.size() == 1 ? " vertex" : " vertices") << ", signature " << s.signature().ToString()
       << (names.is_m ? " (the digraph M)" : "") << '\n'
       << "homogeneous: " << flag(r.homogeneous) << '\n'
       << "set_homogeneous: " << flag(r.set_homogeneous) << '\n'
       << "uniformly_homogeneous: " << flag(r.uniformly_homogeneous) << '\n'
       << "katetov_obstructed: "
       << (r.katetov_obstructed ? flag(*r.katetov_obstructed) : "n/a (not homogeneous)") << '\n';
  if (r.homogeneity_witness) {
    text << "non-extending isomorphism: " << MapString(*r.homogeneity_witness) << '\n';
  }
  if (r.set_homogeneity_witness) {
    text << "isomorphic but not automorphic: " << names.Set(r.set_homogeneity_witness->first) << " and "
         << names.Set(r.set_homogeneity_witness->second) << '\n';
  }
  if (r.obstructing_class) {
    text << "witness class (no homomorphic section): " << names.Set(*r.obstructing_class) << '\n';
  }
  if (r.obstruction) {
    text << "katetov obstruction: fixes " << names.Set(r.obstruction->fixed_set) << " pointwise, h = "
         << names.Perm(r.obstruction->witness) << '\n';
  }
  Emit(out, opt, doc, text.str());
  return kExitOk;
}

int RunAut(const std::string& path, const Options& opt, std::ostream& out) {
  const FinStructure s = LoadStructure(path);
  const PermGroup g = AutomorphismGroup(s);
  const Namer names{s == fixtures::DigraphM()};
  json elements = json::array();
  std::ostringstream text;
  text << "|aut| = " << g.order() << '\n';
  for (const Perm& p : g.elements()) {
    elements.push_back({{"images", p.images()}, {"cycles", p.ToCycleString()}, {"order", p.Order()}});
    text << "  " << p.ToArrayString() << "  " << names.Perm(p) << "  order " << p.Order() << '\n';
  }
  Emit(out, opt, {{"schema", 1}, {"kind", "aut"}, {"order", g.order()}, {"elements", elements}},
       text.str());
  return kExitOk;
}

int RunAge(const std::string& path, const Options& opt, std::ostream& out) {
  const FinStructure s = LoadStructure(path);
  const std::vector<FinStructure> reps = Age(s);
  json classes = json::array();
  std::ostringstream text;
  text << reps.size() << " isomorphism classes of substructures\n";
  for (const FinStructure& rep : reps) {
    const std::string hex = ComputeCanonicalForm(rep).ToHex();
    classes.push_back({{"size", rep.size()}, {"canonical_form", hex}, {"structure", StructureToJson(rep)}});
    text << "  size " << rep.size() << "  " << hex << '\n';
  }
  Emit(out, opt, {{"schema", 1}, {"kind", "age"}, {"classes", classes}}, text.str());
  return kExitOk;
}

int RunObstruction(const std::string& path, const Options& opt, std::ostream& out) {
  const FinStructure s = LoadStructure(path);
  const std::optional<Obstruction> ob = KatetovObstruction(s);
  const Namer names{s == fixtures::DigraphM()};
  json doc = {{"schema", 1}, {"kind", "obstruction"}, {"obstructed", ob.has_value()}};
  std::ostringstream text;
  if (ob) {
    doc["fixed_set"] = ob->fixed_set;
    doc["automorphism"] = ob->witness.images();
    text << "obstructed: h = " << names.Perm(ob->witness) << " is nontrivial and fixes "
         << names.Set(ob->fixed_set) << " pointwise\n";
  } else {
    text << "no obstruction: every nontrivial automorphism is fixed-point-free\n";
  }
  Emit(out, opt, doc, text.str());
  return kExitOk;
}

std::optional<search::MaskRange> ParseRange(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("--range expects BEGIN:END, got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string b = text.substr(0, colon), e = text.substr(colon + 1);
    search::MaskRange r{std::stoull(b, &used, 0), 0};
    if (used != b.size()) throw std::invalid_argument(b);
    r.end = std::stoull(e, &used, 0);
    if (used != e.size()) throw std::invalid_argument(e);
    return r;
  } catch (const std::logic_error&) {
    throw InputError("--range expects BEGIN:END with integer bounds, got '" + text + "'");
  }
}

struct SearchArgs {
  int max_vertices = 5;
  int min_vertices = 1;
  int chunks = 16;
  int threads = 0;
  std::string checkpoint;
  std::string range;
  std::string emit_dir;
  bool no_prefilter = false;
  bool no_timing = false;
};

int RunSearch(const SearchArgs& a, const Options& opt, std::ostream& out) {
  search::SearchConfig config;
  config.max_vertices = a.max_vertices;
  config.min_vertices = a.min_vertices;
  config.chunks = a.chunks;
  config.threads = a.threads;
  config.prefilter = !a.no_prefilter;
  config.range = ParseRange(a.range);
  if (!a.checkpoint.empty()) config.checkpoint_path = a.checkpoint;
  const search::SearchReport report = search::ClassifyAll(config);
  if (!a.emit_dir.empty()) {
    std::filesystem::create_directories(a.emit_dir);
    for (const auto& stage : report.per_n) {
      for (const auto& c : stage.homogeneous_classes) {
        SaveStructure(c.representative, std::filesystem::path(a.emit_dir) /
                                             ("n" + std::to_string(stage.n) + "_" +
                                              std::to_string(c.canonical_mask) + ".json"));
      }
    }
  }
  Emit(out, opt, search::ReportToJson(report, !a.no_timing), search::ReportToText(report));
  return kExitOk;
}

struct SampleArgs {
  int vertices = 5;
  int count = 100;
  std::uint64_t seed = 0;
};

// Compares the prefiltered search pipeline against the unfiltered checkers on
// uniformly random labeled digraphs.
int RunSample(const SampleArgs& a, const Options& opt, std::ostream& out) {
  if (a.vertices < 1 || a.vertices > search::kHardMaxVertices) {
    throw InputError("--vertices must lie in [1, " + std::to_string(search::kHardMaxVertices) + "]");
  }
  if (a.count < 0) throw InputError("--count must be nonnegative");
  std::mt19937_64 rng(a.seed);
  const int cells = a.vertices * a.vertices;
  const std::uint64_t limit = cells == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;
  std::uniform_int_distribution<std::uint64_t> dist(0, limit);
  json samples = json::array();
  int disagreements = 0;
  std::ostringstream text;
  for (int i = 0; i < a.count; ++i) {
    const std::uint64_t mask = dist(rng);
    const search::Verdict pipeline = search::PipelineVerdict(a.vertices, mask);
    const FinStructure s = FinStructure::FromDigraphMask(a.vertices, mask);
    search::Verdict direct;
    direct.homogeneous = CheckHomogeneous(s).holds;
    direct.uniformly_homogeneous = CheckUniformlyHomogeneous(s).holds;
    const bool agree = pipeline == direct;
    disagreements += !agree;
    samples.push_back({{"mask", mask},
                       {"homogeneous", direct.homogeneous},
                       {"uniformly_homogeneous", direct.uniformly_homogeneous},
                       {"agree", agree}});
    if (!agree) text << "disagreement on mask " << mask << '\n';
  }
  text << a.count << " samples on " << a.vertices << " vertices (seed " << a.seed << "), "
       << disagreements << " disagreements\n";
  Emit(out, opt,
       {{"schema", 1},
        {"kind", "sample"},
        {"vertices", a.vertices},
        {"seed", a.seed},
        {"disagreements", disagreements},
        {"samples", samples}},
       text.str());
  return disagreements == 0 ? kExitOk : kExitCheckFailed;
}

int RunVerify(const Options& opt, std::ostream& out) {
  const VerificationReport report = VerifyConstructions();
  Emit(out, opt, VerificationToJson(report), VerificationToText(report));
  return report.passed() ? kExitOk : kExitCheckFailed;
}

std::string EmbeddingString(const cy::CyclicEmbedding& e) {
  return "x -> " + std::to_string(e.multiplier()) + "x : Z_" + std::to_string(e.source_order()) +
         " -> Z_" + std::to_string(e.target_order());
}

json EmbeddingJson(const cy::CyclicEmbedding& e) {
  return {{"source", e.source_order()}, {"target", e.target_order()}, {"multiplier", e.multiplier()}};
}

int RunLemma(const std::vector<cy::Int>& v, const Options& opt, std::ostream& out) {
  const auto e = cy::CyclicEmbedding::Make(v[0], v[1], v[2]);
  const auto f = cy::CyclicEmbedding::Make(v[0], v[1], v[3]);
  const cy::Int b = cy::LemmaSolve(e, f);
  Emit(out, opt,
       {{"schema", 1}, {"kind", "cyclic-lemma"}, {"e", EmbeddingJson(e)}, {"f", EmbeddingJson(f)}, {"b", b}},
       std::to_string(b) + "\n");
  return kExitOk;
}

int RunAmalgamate(const std::vector<cy::Int>& v, const Options& opt, std::ostream& out) {
  const auto f = cy::CyclicEmbedding::Make(v[0], v[1], v[3]);
  const auto g = cy::CyclicEmbedding::Make(v[0], v[2], v[4]);
  const cy::Amalgam a = cy::Amalgamate(f, g);
  std::ostringstream text;
  text << "left:  " << EmbeddingString(a.left) << '\n'
       << "right: " << EmbeddingString(a.right) << '\n'
       << "automorphism of Z_" << a.left.target_order() << ": x -> " << a.automorphism << "x\n";
  Emit(out, opt,
       {{"schema", 1},
        {"kind", "cyclic-amalgamate"},
        {"left", EmbeddingJson(a.left)},
        {"right", EmbeddingJson(a.right)},
        {"automorphism", a.automorphism}},
       text.str());
  return kExitOk;
}

int RunEta(cy::Int m, cy::Int l, const Options& opt, std::ostream& out) {
  const cy::PruferVector x = cy::Eta(m, l);
  Emit(out, opt,
       {{"schema", 1}, {"kind", "cyclic-eta"}, {"m", m}, {"l", l}, {"value", x.ToString()},
        {"fraction", cy::PruferRecompose(x).ToString()}},
       x.ToString() + "\n");
  return kExitOk;
}

int RunKApply(cy::Int n, const std::string& x_text, const Options& opt, std::ostream& out) {
  const cy::PruferVector x = cy::PruferVector::Parse(x_text);
  const cy::PruferVector y = cy::KApply(n, x);
  Emit(out, opt,
       {{"schema", 1}, {"kind", "cyclic-kapply"}, {"n", n}, {"x", x.ToString()}, {"value", y.ToString()},
        {"fraction", cy::PruferRecompose(y).ToString()}},
       y.ToString() + "\n");
  return kExitOk;
}

int RunExtend(const std::vector<cy::Int>& v, const Options& opt, std::ostream& out) {
  const cy::Int b = v[0], k = v[1], n = v[2];
  const std::optional<cy::Int> c = cy::ExtendAutomorphism(b, k, n);
  json doc = {{"schema", 1}, {"kind", "cyclic-extend"}, {"b", b}, {"k", k}, {"n", n},
              {"extension", c ? json(*c) : json()}};
  std::string text;
  if (c) {
    text = std::to_string(*c) + "\n";
  } else {
    text = "none: aut(Z_" + std::to_string(k) + ") -> aut(Z_" + std::to_string(n) +
           ") has no homomorphic section\n";
  }
  Emit(out, opt, doc, text);
  return c ? kExitOk : kExitCheckFailed;
}

int RunUniform(cy::Int n, const Options& opt, std::ostream& out) {
  const cy::CyclicUniformityReport r = cy::CheckCyclicUniformlyHomogeneous(n);
  json doc = {{"schema", 1}, {"kind", "cyclic-uniform"}, {"n", n}, {"uniformly_homogeneous", r.holds}};
  if (!r.holds) {
    doc["failing_subgroup"] = r.failing_subgroup ? json(*r.failing_subgroup) : json();
    doc["failing_unit"] = r.failing_unit ? json(*r.failing_unit) : json();
    doc["failing_extensions"] = r.failing_extensions;
  }
  doc["detail"] = r.detail;
  std::string text = std::string("uniformly_homogeneous: ") + (r.holds ? "true" : "false") + "\n";
  if (!r.detail.empty()) text += r.detail + "\n";
  Emit(out, opt, doc, text);
  return r.holds ? kExitOk : kExitCheckFailed;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homogeneity, set-homogeneity and uniform homogeneity of finite structures"};
  app.name("homog");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  const std::map<std::string, Format> formats = {{"text", Format::kText}, {"json", Format::kJson}};
  app.add_option("--format", opt.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::string path;
  auto* check = app.add_subcommand("check", "Full homogeneity report for a structure file");
  check->add_option("file", path, "Structure JSON file")->required();
  auto* aut = app.add_subcommand("aut", "Automorphism group of a structure file");
  aut->add_option("file", path, "Structure JSON file")->required();
  auto* age = app.add_subcommand("age", "Isomorphism classes of substructures");
  age->add_option("file", path, "Structure JSON file")->required();
  auto* obstruction = app.add_subcommand("obstruction", "Katetov obstruction of a homogeneous structure");
  obstruction->add_option("file", path, "Structure JSON file")->required();

  SearchArgs sa;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search over small digraphs");
  search_cmd->add_option("--max-vertices", sa.max_vertices, "Largest vertex count")
      ->check(CLI::Range(1, search::kHardMaxVertices));
  search_cmd->add_option("--min-vertices", sa.min_vertices, "Smallest vertex count")
      ->check(CLI::Range(1, search::kHardMaxVertices));
  search_cmd->add_option("--chunks", sa.chunks, "Work chunks per vertex count")->check(CLI::PositiveNumber);
  search_cmd->add_option("--checkpoint", sa.checkpoint, "Checkpoint file for resumable runs");
  search_cmd->add_option("--range", sa.range, "Restrict to adjacency masks BEGIN:END (exclusive)");
  search_cmd->add_option("--threads", sa.threads, "Worker threads (0: THREADS env or hardware)")
      ->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--emit-dir", sa.emit_dir, "Write each homogeneous class as a structure file");
  search_cmd->add_flag("--no-prefilter", sa.no_prefilter, "Disable the invariant prefilter");
  search_cmd->add_flag("--no-timing", sa.no_timing, "Omit wall-clock time from JSON output");

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Compare pipeline and direct verdicts on random digraphs");
  sample->add_option("--vertices", sample_args.vertices, "Vertex count");
  sample->add_option("--count", sample_args.count, "Number of samples");
  sample->add_option("--seed", sample_args.seed, "Random seed");

  auto* cyclic_cmd = app.add_subcommand("cyclic", "Finite cyclic groups and the Prufer decomposition");
  cyclic_cmd->require_subcommand(1);
  std::vector<cy::Int> ints;
  cy::Int m = 0, l = 0, n = 0;
  std::string x_text;
  auto* lemma = cyclic_cmd->add_subcommand("lemma", "Smallest unit b with f = b^ o e for e, f: Z_k -> Z_n");
  lemma->add_option("values", ints, "K N E F")->type_name("K N E F")->expected(4)->required();
  auto* amalgamate = cyclic_cmd->add_subcommand("amalgamate", "Amalgamate f: Z_k -> Z_m and g: Z_k -> Z_n");
  amalgamate->add_option("values", ints, "K M N F G")->type_name("K M N F G")->expected(5)->required();
  auto* eta = cyclic_cmd->add_subcommand("eta", "Prufer vector of l in Z_m");
  eta->add_option("m", m)->required();
  eta->add_option("l", l)->required();
  auto* kapply = cyclic_cmd->add_subcommand("kapply", "Apply K(n^) to x, given as a/d or {p: a/d, ...}");
  kapply->add_option("n", n)->required();
  kapply->add_option("x", x_text)->required();
  auto* extend = cyclic_cmd->add_subcommand("extend", "Section value on the unit b of Z_k inside Z_n");
  extend->add_option("values", ints, "B K N")->type_name("B K N")->expected(3)->required();
  auto* uniform = cyclic_cmd->add_subcommand("uniform", "Decide uniform homogeneity of Z_n");
  uniform->add_option("n", n)->required();

  auto* verify = app.add_subcommand("verify-paper", "Verify every explicit construction");

  std::vector<const char*> argv{"homog"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*check) return RunCheck(path, opt, out);
    if (*aut) return RunAut(path, opt, out);
    if (*age) return RunAge(path, opt, out);
    if (*obstruction) return RunObstruction(path, opt, out);
    if (*search_cmd) return RunSearch(sa, opt, out);
    if (*sample) return RunSample(sample_args, opt, out);
    if (*verify) return RunVerify(opt, out);
    if (*lemma) return RunLemma(ints, opt, out);
    if (*amalgamate) return RunAmalgamate(ints, opt, out);
    if (*eta) return RunEta(m, l, opt, out);
    if (*kapply) return RunKApply(n, x_text, opt, out);
    if (*extend) return RunExtend(ints, opt, out);
    if (*uniform) return RunUniform(n, opt, out);
  } catch (const InputError& e) {
    err << "homog: input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const IoError& e) {
    err << "homog: " << e.what() << '\n';
    return kExitInputError;
  } catch (const CapabilityError& e) {
    err << "homog: unsupported: " << e.what() << '\n';
    return kExitInputError;
  }
  err << "homog: no subcommand\n";
  return kExitInputError;
}

}  // namespace homog::cli
