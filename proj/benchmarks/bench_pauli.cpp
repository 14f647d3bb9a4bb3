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

#include <random>

#include "dcqf/agp.hpp"

namespace {

using namespace dcqf;

IsingInstance dense_instance(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  IsingInstance inst;
  inst.n = n;
  for (std::size_t i = 0; i < n; ++i) inst.h.push_back(u(rng));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) inst.J[{i, j}] = u(rng);
  }
  return inst;
}

void BM_Commutator(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CounterdiabaticModel model(dense_instance(n));
  const auto h = model.adiabatic(0.4);
  const auto o1 = model.nc_basis(0.4, 1)[0];
  for (auto _ : state) benchmark::DoNotOptimize(commutator(h, o1));
  state.counters["terms"] = static_cast<double>(o1.size());
}
BENCHMARK(BM_Commutator)->Arg(5)->Arg(10)->Arg(14);

void BM_NcBasis(benchmark::State& state) {
  const CounterdiabaticModel model(dense_instance(static_cast<std::size_t>(state.range(0))));
  const int order = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(model.solve_alpha(0.4, order));
}
BENCHMARK(BM_NcBasis)->Args({5, 1})->Args({10, 1})->Args({5, 2})->Unit(benchmark::kMicrosecond);

}  // namespace
