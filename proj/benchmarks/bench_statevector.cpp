// Copyright 2026 The DCQF Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "dcqf/statevector.hpp"

namespace {

using namespace dcqf;

void BM_SingleQubitGate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto psi = initial_plus_state(n);
  const Gate g{GateKind::kRY, {n / 2}, 0.3};
  for (auto _ : state) psi.apply(g);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(psi.dim()));
}
BENCHMARK(BM_SingleQubitGate)->Arg(10)->Arg(14);

void BM_ZZGate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto psi = initial_plus_state(n);
  const Gate g{GateKind::kZZ, {0, n - 1}, 0.3};
  for (auto _ : state) psi.apply(g);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(psi.dim()));
}
BENCHMARK(BM_ZZGate)->Arg(10)->Arg(14);

void BM_Sample(benchmark::State& state) {
  const auto dist = distribution(initial_plus_state(10));
  for (auto _ : state) benchmark::DoNotOptimize(sample(dist, 2000, 7));
}
BENCHMARK(BM_Sample);

}  // namespace
