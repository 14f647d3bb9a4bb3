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

#include "dcqf/statevector.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace dcqf {
namespace {

using testing::Mat;

Gate random_gate(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, n > 1 ? 3 : 2);
  std::uniform_int_distribution<std::size_t> site(0, n - 1);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  Gate g{static_cast<GateKind>(kind(rng)), {site(rng)}, angle(rng)};
  if (g.kind == GateKind::kZZ) {
    std::size_t b = site(rng);
    while (b == g.sites[0]) b = site(rng);
    g.sites.push_back(b);
  }
  return g;
}

CircuitIR random_circuit(std::size_t n, std::size_t gates, std::mt19937_64& rng) {
  CircuitIR c;
  c.n = n;
  for (std::size_t k = 0; k < gates; ++k) {
    c.gates.push_back(random_gate(n, rng));
    c.origins.push_back(GateOrigin{0, static_cast<int>(k), "", false});
  }
  return c;
}

TEST(InitialState, UniformAmplitudes) {
  auto one = initial_plus_state(1);
  EXPECT_NEAR(one[0].real(), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(one[1].real(), std::sqrt(0.5), 1e-15);
  auto two = initial_plus_state(2);
  for (std::size_t b = 0; b < 4; ++b) EXPECT_NEAR(std::abs(two[b] - Complex(0.5)), 0.0, 1e-15);
  for (const auto& [bits, p] : distribution(initial_plus_state(5))) EXPECT_NEAR(p, 1.0 / 32.0, 1e-15);

  setenv("DCQF_DENSE_LIMIT", "4", 1);
  EXPECT_THROW(initial_plus_state(5), Error);
  unsetenv("DCQF_DENSE_LIMIT");
}

TEST(RunCircuit, EmptyCircuitIsIdentity) {
  CircuitIR c;
  c.n = 3;
  auto s = initial_plus_state(3);
  auto out = run_circuit(c, s);
  EXPECT_EQ(out.to_eigen(), s.to_eigen());
}

TEST(RunCircuit, RxPiFlipsWithPhase) {
  Statevector s(1);
  s.apply(Gate{GateKind::kRX, {0}, std::numbers::pi});
  EXPECT_NEAR(std::abs(s[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[1] - Complex(0.0, -1.0)), 0.0, 1e-15);
  EXPECT_NEAR(distribution(s).at("1"), 1.0, 1e-15);
}

TEST(RunCircuit, SiteZeroIsMostSignificant) {
  Statevector s(3);
  s.apply(Gate{GateKind::kRX, {0}, std::numbers::pi});
  EXPECT_NEAR(std::abs(s[4]), 1.0, 1e-15);
  EXPECT_NEAR(distribution(s).at("100"), 1.0, 1e-15);
}

TEST(RunCircuit, MatchesDenseGateProduct) {
  std::mt19937_64 rng(51);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      auto c = random_circuit(n, 25, rng);
      auto s0 = initial_plus_state(n);
      const Eigen::VectorXcd expect = testing::circuit_matrix(c) * s0.to_eigen();
      auto out = run_circuit(c, s0);
      auto oracle = Statevector::from_amplitudes(n, {expect.data(), expect.data() + expect.size()});
      EXPECT_GE(fidelity(out, oracle), 1.0 - 1e-10);
      EXPECT_NEAR(out.norm(), 1.0, 1e-10);
    }
  }
}

TEST(RunCircuit, RejectsWidthMismatch) {
  CircuitIR c;
  c.n = 2;
  EXPECT_THROW(run_circuit(c, Statevector(3)), Error);
  Statevector s(2);
  EXPECT_THROW(s.apply(Gate{GateKind::kRZ, {2}, 0.1}), Error);
}

TEST(DensePropagator, MatchesPade) {
  std::mt19937_64 rng(52);
  auto h = testing::random_sum(3, 10, rng, true);
  EXPECT_LT((dense_propagator(h, 0.3) - testing::pade_propagator(testing::kron_sum(h), 0.3)).norm(), 1e-12);
}

TEST(ExactEvolve, AdiabaticLimit) {
  ProtocolConfig cfg;
  cfg.mode = DriveMode::kAdiabatic;
  cfg.total_time = 50.0;
  cfg.dt = 0.05;
  auto state = exact_evolve(builtin_instance("yan26"), cfg);
  EXPECT_GE(distribution(state).at("00000"), 0.99);
}

TEST(ExactEvolve, ImpulseWithoutFieldsIsStatic) {
  IsingInstance flat{3, {0.0, 0.0, 0.0}, {{{0, 1}, 1.0}}, 0.0};
  ProtocolConfig cfg;
  cfg.mode = DriveMode::kImpulse;
  auto state = exact_evolve(flat, cfg);
  EXPECT_GE(fidelity(state, initial_plus_state(3)), 1.0 - 1e-12);
}

TEST(ExactEvolve, CompiledRunConvergesAsDtShrinks) {
  std::mt19937_64 rng(53);
  auto inst = testing::random_instance(3, rng);
  CounterdiabaticModel model(inst);
  double prev = 1.0;
  for (double dt : {0.1, 0.05, 0.025, 0.0125}) {
    ProtocolConfig cfg;
    cfg.dt = dt;
    auto exact = exact_evolve(model, cfg);
    auto digital = run_circuit(compile_protocol(model, cfg), initial_plus_state(3));
    const double err = 1.0 - fidelity(exact, digital);
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_LT(prev, 1e-4);
}

TEST(Distribution, Examples) {
  Statevector s(2);
  s.apply(Gate{GateKind::kRY, {0}, std::numbers::pi / 2});
  auto d = distribution(s);
  EXPECT_NEAR(d.at("00"), 0.5, 1e-15);
  EXPECT_NEAR(d.at("10"), 0.5, 1e-15);
  EXPECT_NEAR(d.at("01"), 0.0, 1e-15);

  auto basis = distribution(Statevector(3));
  EXPECT_EQ(basis.size(), 8u);
  EXPECT_EQ(basis.at("000"), 1.0);
  for (const auto& [bits, p] : basis) {
    if (bits != "000") EXPECT_EQ(p, 0.0);
  }

  std::mt19937_64 rng(54);
  auto r = run_circuit(random_circuit(4, 30, rng), initial_plus_state(4));
  double total = 0.0;
  for (const auto& [k, p] : distribution(r)) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Sample, Deterministic) {
  EXPECT_EQ(sample({{"0", 1.0}}, 100, 3), (Counts{{"0", 100}}));
  Distribution d{{"00", 0.1}, {"01", 0.2}, {"10", 0.3}, {"11", 0.4}};
  EXPECT_EQ(sample(d, 1000, 9), sample(d, 1000, 9));
  EXPECT_NE(sample(d, 1000, 9), sample(d, 1000, 10));
  std::uint64_t total = 0;
  for (const auto& [k, c] : sample(d, 777, 1)) total += c;
  EXPECT_EQ(total, 777u);
}

TEST(Sample, BinomialFrequencies) {
  const double p = 0.3;
  const std::uint64_t shots = 100000;
  auto counts = sample({{"0", 1.0 - p}, {"1", p}}, shots, 2024);
  const double sigma = std::sqrt(shots * p * (1.0 - p));
  EXPECT_LT(std::abs(static_cast<double>(counts["1"]) - shots * p), 3.0 * sigma);
}

TEST(SuccessProbability, Lookups) {
  RunResult r;
  r.final_state = initial_plus_state(3);
  r.distribution = distribution(r.final_state);
  EXPECT_NEAR(success_probability(r, "101"), 0.125, 1e-15);
  EXPECT_THROW(success_probability(r, "10"), Error);
  r.distribution.erase("101");
  EXPECT_EQ(success_probability(r, "101"), 0.0);
}

TEST(SuccessProbability, Yan26Reference) {
  ProtocolConfig cfg;
  auto circuit = compile_protocol(builtin_instance("yan26"), cfg);
  RunResult r;
  r.final_state = run_circuit(circuit, initial_plus_state(5));
  r.distribution = distribution(r.final_state);
  EXPECT_NEAR(success_probability(r, "00000"), 0.5448, 5e-4);
}

TEST(RunResultJson, Schema) {
  RunResult r;
  r.final_state = initial_plus_state(2);
  r.distribution = distribution(r.final_state);
  r.shot_counts = sample(r.distribution, 10, 5);
  r.seed = 5;
  r.config = {{"mode", "full-cd"}};
  auto doc = run_result_to_json(r, "00");
  EXPECT_EQ(doc["seed"], 5);
  EXPECT_EQ(doc["success"]["target"], "00");
  EXPECT_NEAR(doc["success"]["p"].get<double>(), 0.25, 1e-15);
  EXPECT_EQ(doc["distribution"].size(), 4u);
  EXPECT_TRUE(doc.contains("counts"));
  EXPECT_TRUE(doc.contains("config"));
}

}  // namespace
}  // namespace dcqf
