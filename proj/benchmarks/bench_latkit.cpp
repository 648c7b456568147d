// Copyright 2026 The latkit Authors
//
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

#include <latkit/complementation.hpp>
#include <latkit/connectives.hpp>
#include <latkit/corpus.hpp>
#include <latkit/deduction.hpp>

namespace {

using namespace latkit;

void BM_AdjointnessScan(benchmark::State &state) {
  const BoundedLattice L = make_fig2();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_adjointness(L));
  }
}
BENCHMARK(BM_AdjointnessScan)->Unit(benchmark::kMicrosecond);

void BM_ClosureLattice(benchmark::State &state) {
  const BoundedLattice L =
      state.range(0) == 0 ? make_fig2() : make_boolean(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure_lattice(L));
  }
}
BENCHMARK(BM_ClosureLattice)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_Enumerate(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_lattices(n));
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_DeductiveSystems(benchmark::State &state) {
  const BoundedLattice L =
      state.range(0) == 0 ? make_fig2() : make_boolean(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_deductive_systems(L));
  }
}
BENCHMARK(BM_DeductiveSystems)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_MeetCongruences(benchmark::State &state) {
  const BoundedLattice L = make_Mn(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_meet_congruences(L));
  }
}
BENCHMARK(BM_MeetCongruences)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
