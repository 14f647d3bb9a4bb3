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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "dcqf/trotter.hpp"

namespace dcqf {

/// Dense 2^n amplitude vector. Basis index b holds site i in bit (n - 1 - i).
class Statevector {
 public:
  /// |0...0>.
  explicit Statevector(std::size_t n);
  static Statevector from_amplitudes(std::size_t n, std::vector<Complex> amplitudes);

  std::size_t num_sites() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex operator[](std::size_t index) const { return amps_[index]; }

  double norm() const;

  void apply(const Gate& gate);
  void apply_single(std::size_t site, const Eigen::Matrix2cd& u);
  void apply_zz(std::size_t a, std::size_t b, double theta);
  /// Multiplies by a full 2^n x 2^n matrix (oracle paths only).
  void apply_dense(const Eigen::MatrixXcd& u);

  Eigen::VectorXcd to_eigen() const;

 private:
  std::size_t n_;
  std::vector<Complex> amps_;
};

/// Uniform superposition |+>^n, the ground state of -sum X_i.
Statevector initial_plus_state(std::size_t n);

Statevector run_circuit(const CircuitIR& circuit, Statevector state);

/// exp(-i H dt) from a Hermitian eigendecomposition of dense(H).
Eigen::MatrixXcd dense_propagator(const PauliSum& H, double dt);

/// Applies exp(-i dense(H_k) dt_k) for each digitised step, with no Trotter
/// splitting. Starts from |+>^n.
Statevector exact_evolve(const CounterdiabaticModel& model, const ProtocolConfig& cfg);
Statevector exact_evolve(const IsingInstance& inst, const ProtocolConfig& cfg);
Statevector exact_evolve(const std::vector<DigitizedStep>& steps, Statevector state);

/// |<a|b>|^2.
double fidelity(const Statevector& a, const Statevector& b);

using Distribution = std::map<std::string, double>;
using Counts = std::map<std::string, std::uint64_t>;

/// |amplitude|^2 for every basis state, keyed by bitstring.
Distribution distribution(const Statevector& state);

inline constexpr const char* kSamplerName = "mt19937_64/inverse-cdf";

/// Multinomial draw of `shots` outcomes. A pure function of (dist, shots, seed):
/// each shot consumes one 64-bit word of std::mt19937_64, mapped to a uniform
/// double in [0, 1) and inverted through the cumulative distribution in key order.
Counts sample(const Distribution& dist, std::uint64_t shots, std::uint64_t seed);

struct RunResult {
  Statevector final_state{1};
  Distribution distribution;
  std::optional<Counts> shot_counts;
  nlohmann::json config;
  std::uint64_t seed = 0;
};

/// Probability of `target` (0 when absent). Throws on a length mismatch.
double success_probability(const RunResult& result, std::string_view target);

nlohmann::json run_result_to_json(const RunResult& result, std::string_view target);

}  // namespace dcqf
