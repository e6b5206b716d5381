// Copyright 2026 The trivalent Authors
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

#include <benchmark/benchmark.h>

#include "trivalent/automorphism.h"
#include "trivalent/canonical.h"
#include "trivalent/certificate.h"
#include "trivalent/decompose.h"
#include "trivalent/enumerate.h"
#include "trivalent/fmove.h"
#include "trivalent/oracle.h"

namespace trivalent {
namespace {

std::vector<GraphPtr> Classes(int genus, int boundary) {
  std::vector<GraphPtr> out;
  for (Graph& g : EnumerateIsoClasses(genus, boundary)) out.push_back(MakeGraphPtr(std::move(g)));
  return out;
}

std::vector<Automorphism> Automorphisms(int genus, int boundary) {
  std::vector<Automorphism> out;
  for (const GraphPtr& g : Classes(genus, boundary)) {
    for (Automorphism& phi : AutomorphismGroup(g)) out.push_back(std::move(phi));
  }
  return out;
}

void BM_Enumerate(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  const int boundary = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(EnumerateIsoClasses(genus, boundary));
}
BENCHMARK(BM_Enumerate)->Args({2, 2})->Args({4, 0})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto graphs = Classes(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    for (const GraphPtr& g : graphs) benchmark::DoNotOptimize(CanonicalForm(*g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(graphs.size()));
}
BENCHMARK(BM_CanonicalForm)->Args({4, 0})->Args({2, 3});

void BM_AutomorphismGroup(benchmark::State& state) {
  const auto graphs = Classes(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    for (const GraphPtr& g : graphs) benchmark::DoNotOptimize(AutomorphismGroup(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(graphs.size()));
}
BENCHMARK(BM_AutomorphismGroup)->Args({4, 0})->Args({2, 3});

void BM_InvariantMoves(benchmark::State& state) {
  const auto automorphisms = Automorphisms(4, 0);
  const int ends = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (const Automorphism& phi : automorphisms) {
      benchmark::DoNotOptimize(EnumerateInvariantFMoves(phi, {.max_tree_ends = ends}));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(automorphisms.size()));
}
BENCHMARK(BM_InvariantMoves)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_DecomposeAndVerify(benchmark::State& state) {
  const auto automorphisms =
      Automorphisms(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    for (const Automorphism& phi : automorphisms) {
      const Certificate c = Decompose(phi);
      benchmark::DoNotOptimize(VerifyCertificate(c, phi));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(automorphisms.size()));
}
BENCHMARK(BM_DecomposeAndVerify)->Args({3, 0})->Args({4, 0})->Unit(benchmark::kMillisecond);

void BM_Closure(benchmark::State& state) {
  OracleOptions options;
  options.max_tree_ends = static_cast<int>(state.range(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ClosureE(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), options));
  }
}
BENCHMARK(BM_Closure)->Args({2, 2, 5})->Args({3, 0, 6})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace trivalent

BENCHMARK_MAIN();
