// Copyright 2026 The haros-graphs Authors
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

#include "haros/analytics.hpp"
#include "haros/oracle.hpp"

namespace {

using namespace haros;

void BM_BuildLeftSpine(benchmark::State& state) {
  // G_{1/(n+1)}: the worst-case descent, one node gained per step.
  const FareyPath path(std::string(state.range(0), 'L'));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build(path));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildLeftSpine)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_BuildZigzag(benchmark::State& state) {
  // Fibonacci growth: node counts explode while the path stays short.
  const FareyPath path = FareyPath::zigzag(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build(path));
  }
}
BENCHMARK(BM_BuildZigzag)->DenseRange(16, 28, 4);

void BM_TallyZigzag(benchmark::State& state) {
  // Same graphs through the tally; exact counts without the node storage.
  const FareyPath path = FareyPath::zigzag(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_tally(path));
  }
}
BENCHMARK(BM_TallyZigzag)->DenseRange(16, 80, 16);

void BM_FareySequence(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(farey_sequence(state.range(0)));
  }
}
BENCHMARK(BM_FareySequence)->RangeMultiplier(4)->Range(64, 4096);

void BM_FareyGraphSweep(benchmark::State& state) {
  for (auto _ : state) {
    NodeBudget budget;
    std::uint64_t total = 0;
    for_each_farey_graph(state.range(0), budget,
                         [&](const HarosGraph& g) { total += g.q(); });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_FareyGraphSweep)->RangeMultiplier(2)->Range(64, 512);

void BM_ClosedFormRange(benchmark::State& state) {
  const Rational x(BigInt(377), BigInt(987));
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_P_range(5, state.range(0), x));
  }
}
BENCHMARK(BM_ClosedFormRange)->DenseRange(20, 60, 20);

void BM_EntropyCurve(benchmark::State& state) {
  for (auto _ : state) {
    NodeBudget budget;
    benchmark::DoNotOptimize(entropy_curve(state.range(0), budget));
  }
}
BENCHMARK(BM_EntropyCurve)->RangeMultiplier(2)->Range(50, 400);

void BM_RationalToPath(benchmark::State& state) {
  const Rational x(fibonacci(40), fibonacci(41));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rational_to_path(x));
  }
}
BENCHMARK(BM_RationalToPath);

}  // namespace

BENCHMARK_MAIN();
