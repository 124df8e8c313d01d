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


#include <cstdint>

#include "benchmark/benchmark.h"
#include "homog/cyclic.h"
#include "homog/fixtures.h"
#include "homog/homogeneity.h"
#include "homog/search.h"
#include "homog/structure.h"

namespace homog {
namespace {

void BM_AutomorphismGroupOfM(benchmark::State& state) {
  const FinStructure m = fixtures::DigraphM();
  for (auto _ : state) benchmark::DoNotOptimize(AutomorphismGroup(m).order());
}
BENCHMARK(BM_AutomorphismGroupOfM);

void BM_CanonicalFormOfCycle(benchmark::State& state) {
  const FinStructure c = fixtures::DirectedCycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ComputeCanonicalForm(c));
}
BENCHMARK(BM_CanonicalFormOfCycle)->DenseRange(3, 6);

void BM_CheckHomogeneousM(benchmark::State& state) {
  const FinStructure m = fixtures::DigraphM();
  for (auto _ : state) benchmark::DoNotOptimize(CheckHomogeneous(m).holds);
}
BENCHMARK(BM_CheckHomogeneousM);

void BM_AnalyzeM(benchmark::State& state) {
  const FinStructure m = fixtures::DigraphM();
  for (auto _ : state) benchmark::DoNotOptimize(Analyze(m));
}
BENCHMARK(BM_AnalyzeM)->Unit(benchmark::kMillisecond);

// Prefilter throughput over the first 2^16 labeled digraphs on 5 vertices.
void BM_PrefilterMask(benchmark::State& state) {
  constexpr std::uint64_t kMasks = 1 << 16;
  for (auto _ : state) {
    int kept = 0;
    for (std::uint64_t mask = 0; mask < kMasks; ++mask) kept += search::PrefilterMask(5, mask);
    benchmark::DoNotOptimize(kept);
  }
  state.SetItemsProcessed(state.iterations() * kMasks);
}
BENCHMARK(BM_PrefilterMask);

void BM_EtaThenK(benchmark::State& state) {
  const cyclic::Int m = state.range(0);
  for (auto _ : state) {
    for (cyclic::Int l = 0; l < m; ++l) benchmark::DoNotOptimize(cyclic::KApply(6, cyclic::Eta(m, l)));
  }
  state.SetItemsProcessed(state.iterations() * m);
}
BENCHMARK(BM_EtaThenK)->Arg(30)->Arg(360);

void BM_PruferRoundTrip(benchmark::State& state) {
  const cyclic::Int d = state.range(0);
  for (auto _ : state) {
    for (cyclic::Int a = 1; a < d; a += 2) {
      const cyclic::QZElem q = cyclic::QZElem::Make(a, d, cyclic::kUnbounded);
      benchmark::DoNotOptimize(cyclic::PruferRecompose(cyclic::PruferDecompose(q)));
    }
  }
  state.SetItemsProcessed(state.iterations() * (d / 2));
}
BENCHMARK(BM_PruferRoundTrip)->Arg(9240)->Arg(30030);

void BM_CyclicUniformity(benchmark::State& state) {
  const cyclic::Int n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(cyclic::CheckCyclicUniformlyHomogeneous(n).holds);
}
BENCHMARK(BM_CyclicUniformity)->Arg(12)->Arg(30);

}  // namespace
}  // namespace homog

// The distribution's benchmark_main archive is LTO-only, so main lives here.
BENCHMARK_MAIN();
