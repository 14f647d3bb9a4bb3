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

#include "dcqf/spectrum.hpp"
#include "dcqf/statevector.hpp"

namespace {

using namespace dcqf;

void BM_Yan26CompileAndRun(benchmark::State& state) {
  const CounterdiabaticModel model(builtin_instance("yan26"));
  ProtocolConfig cfg;
  cfg.variant = state.range(0) == 0 ? CDVariant::local() : CDVariant::nested(1);
  for (auto _ : state) {
    const auto circuit = compile_protocol(model, cfg);
    benchmark::DoNotOptimize(run_circuit(circuit, initial_plus_state(5)));
  }
}
BENCHMARK(BM_Yan26CompileAndRun)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_Yan26Spectrum(benchmark::State& state) {
  const CounterdiabaticModel model(builtin_instance("yan26"));
  ProtocolConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(instantaneous_spectrum(model, cfg, 101, 4));
}
BENCHMARK(BM_Yan26Spectrum)->Unit(benchmark::kMillisecond);

}  // namespace
