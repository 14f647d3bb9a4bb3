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

#include <algorithm>
#include <cmath>
#include <random>

namespace dcqf {

Statevector::Statevector(std::size_t n) : n_(n) {
  require_dense(n, "statevector");
  amps_.assign(std::size_t{1} << n, Complex{});
  amps_[0] = 1.0;
}

Statevector Statevector::from_amplitudes(std::size_t n, std::vector<Complex> amplitudes) {
  Statevector s(n);
  if (amplitudes.size() != s.amps_.size()) {
    throw Error("statevector: expected " + std::to_string(s.amps_.size()) + " amplitudes, got " +
                std::to_string(amplitudes.size()));
  }
  s.amps_ = std::move(amplitudes);
  return s;
}

double Statevector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void Statevector::apply_single(std::size_t site, const Eigen::Matrix2cd& u) {
  if (site >= n_) throw Error("statevector: site " + std::to_string(site) + " out of range");
  const std::size_t stride = std::size_t{1} << (n_ - 1 - site);
  for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
    for (std::size_t k = base; k < base + stride; ++k) {
      const Complex a0 = amps_[k];
      const Complex a1 = amps_[k + stride];
      amps_[k] = u(0, 0) * a0 + u(0, 1) * a1;
      amps_[k + stride] = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
}

void Statevector::apply_zz(std::size_t a, std::size_t b, double theta) {
  if (a >= n_ || b >= n_ || a == b) throw Error("statevector: invalid ZZ sites");
  const std::size_t ma = std::size_t{1} << (n_ - 1 - a);
  const std::size_t mb = std::size_t{1} << (n_ - 1 - b);
  const Complex same = std::polar(1.0, -0.5 * theta);
  const Complex diff = std::polar(1.0, 0.5 * theta);
  for (std::size_t k = 0; k < amps_.size(); ++k) {
    const bool parity = ((k & ma) != 0) != ((k & mb) != 0);
    amps_[k] *= parity ? diff : same;
  }
}

void Statevector::apply(const Gate& gate) {
  const double c = std::cos(0.5 * gate.theta);
  const double s = std::sin(0.5 * gate.theta);
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd u;
  switch (gate.kind) {
    case GateKind::kRX:
      u << c, -i * s, -i * s, c;
      break;
    case GateKind::kRY:
      u << c, -s, s, c;
      break;
    case GateKind::kRZ:
      u << std::polar(1.0, -0.5 * gate.theta), 0.0, 0.0, std::polar(1.0, 0.5 * gate.theta);
      break;
    case GateKind::kZZ:
      if (gate.sites.size() != 2) throw Error("statevector: ZZ gate needs two sites");
      apply_zz(gate.sites[0], gate.sites[1], gate.theta);
      return;
  }
  if (gate.sites.size() != 1) throw Error("statevector: rotation gate needs one site");
  apply_single(gate.sites[0], u);
}

void Statevector::apply_dense(const Eigen::MatrixXcd& u) {
  if (static_cast<std::size_t>(u.rows()) != amps_.size() || u.rows() != u.cols()) {
    throw Error("statevector: dense operator has the wrong dimension");
  }
  const Eigen::VectorXcd out = u * to_eigen();
  for (std::size_t k = 0; k < amps_.size(); ++k) amps_[k] = out(static_cast<Eigen::Index>(k));
}

Eigen::VectorXcd Statevector::to_eigen() const {
  return Eigen::Map<const Eigen::VectorXcd>(amps_.data(), static_cast<Eigen::Index>(amps_.size()));
}

Statevector initial_plus_state(std::size_t n) {
  require_dense(n, "initial_plus_state");
  const std::size_t dim = std::size_t{1} << n;
  return Statevector::from_amplitudes(n, std::vector<Complex>(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0)));
}

Statevector run_circuit(const CircuitIR& circuit, Statevector state) {
  if (circuit.n != state.num_sites()) {
    throw Error("run_circuit: circuit has " + std::to_string(circuit.n) + " sites, state has " +
                std::to_string(state.num_sites()));
  }
  circuit.validate();
  for (const auto& g : circuit.gates) state.apply(g);
  return state;
}

Eigen::MatrixXcd dense_propagator(const PauliSum& H, double dt) {
  const Eigen::MatrixXcd m = to_dense(H);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m);
  if (eig.info() != Eigen::Success) throw Error("dense_propagator: eigendecomposition failed");
  Eigen::VectorXcd phases(m.rows());
  for (Eigen::Index k = 0; k < m.rows(); ++k) phases(k) = std::polar(1.0, -eig.eigenvalues()(k) * dt);
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

Statevector exact_evolve(const std::vector<DigitizedStep>& steps, Statevector state) {
  for (const auto& step : steps) {
    if (step.hamiltonian.empty()) continue;
    if (step.hamiltonian.num_sites() != state.num_sites()) throw Error("exact_evolve: site count mismatch");
    state.apply_dense(dense_propagator(step.hamiltonian, step.t_end - step.t_begin));
  }
  return state;
}

Statevector exact_evolve(const CounterdiabaticModel& model, const ProtocolConfig& cfg) {
  require_dense(model.num_sites(), "exact_evolve");
  return exact_evolve(digitize(model, cfg), initial_plus_state(model.num_sites()));
}

Statevector exact_evolve(const IsingInstance& inst, const ProtocolConfig& cfg) {
  return exact_evolve(CounterdiabaticModel(inst), cfg);
}

double fidelity(const Statevector& a, const Statevector& b) {
  if (a.dim() != b.dim()) throw Error("fidelity: dimension mismatch");
  Complex overlap{};
  for (std::size_t k = 0; k < a.dim(); ++k) overlap += std::conj(a[k]) * b[k];
  return std::norm(overlap);
}

Distribution distribution(const Statevector& state) {
  Distribution dist;
  for (std::size_t k = 0; k < state.dim(); ++k) {
    dist.emplace_hint(dist.end(), index_to_bits(k, state.num_sites()), std::norm(state[k]));
  }
  return dist;
}

Counts sample(const Distribution& dist, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw Error("sample: shots must be >= 1");
  if (dist.empty()) throw Error("sample: empty distribution");
  std::vector<const std::string*> keys;
  std::vector<double> cumulative;
  double total = 0.0;
  for (const auto& [bits, p] : dist) {
    if (!(p >= 0.0)) throw Error("sample: negative or NaN probability for " + bits);
    total += p;
    keys.push_back(&bits);
    cumulative.push_back(total);
  }
  if (!(total > 0.0)) throw Error("sample: distribution has zero mass");

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> hits(keys.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    ++hits[static_cast<std::size_t>(it - cumulative.begin())];
  }
  Counts counts;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    if (hits[k] != 0) counts.emplace(*keys[k], hits[k]);
  }
  return counts;
}

double success_probability(const RunResult& result, std::string_view target) {
  if (target.size() != result.final_state.num_sites()) {
    throw Error("success_probability: target length " + std::to_string(target.size()) + " does not match n=" +
                std::to_string(result.final_state.num_sites()));
  }
  auto it = result.distribution.find(std::string(target));
  return it == result.distribution.end() ? 0.0 : it->second;
}

nlohmann::json run_result_to_json(const RunResult& result, std::string_view target) {
  nlohmann::json j;
  j["config"] = result.config;
  j["seed"] = result.seed;
  j["rng"] = kSamplerName;
  j["distribution"] = result.distribution;
  j["counts"] = result.shot_counts ? nlohmann::json(*result.shot_counts) : nlohmann::json::object();
  j["success"] = {{"target", std::string(target)}, {"p", success_probability(result, target)}};
  return j;
}

}  // namespace dcqf
