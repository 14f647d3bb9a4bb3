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

// First-order product-formula digitisation of a drive protocol and lowering
// onto the native gate set {RX, RY, RZ, ZZ}.
//
// Conventions: R_P(theta) = exp(-i theta P / 2), ZZ(theta) = exp(-i theta Z(x)Z / 2).
// A term c * P evolved for dt becomes a rotation by theta = 2 c dt.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dcqf/agp.hpp"

namespace dcqf {

/// How each Trotter step's Hamiltonian is formed from the continuous drive.
enum class Sampling {
  /// Coefficients averaged over the step, (1/dt) * integral of H(t) over it.
  kIntegrated,
  /// H evaluated at the step midpoint.
  kMidpoint,
  /// H evaluated at the step's left endpoint.
  kLeft,
};

std::string to_string(Sampling s);
Sampling parse_sampling(std::string_view text);

struct ProtocolConfig {
  DriveMode mode = DriveMode::kFullCD;
  CDVariant variant = CDVariant::local();
  double total_time = 0.4;
  double dt = 0.1;
  Sampling sampling = Sampling::kIntegrated;
  /// Terms whose rotation angle |2 c dt| is below this are dropped (radians).
  double prune_threshold = 0.0;
  /// Keep only this many largest 2-local terms of the CD part per step.
  std::optional<std::size_t> truncate_2local;

  /// Throws unless T/dt is a positive integer within 1e-9.
  void validate() const;
  std::size_t steps() const;

  nlohmann::json to_json() const;
};

struct DigitizedStep {
  double t = 0.0;  // representative time: midpoint, or left endpoint under kLeft
  double t_begin = 0.0;
  double t_end = 0.0;
  PauliSum hamiltonian;
};

/// Hamiltonian applied over [t_begin, t_end] under the config's sampling rule.
PauliSum interval_hamiltonian(const CounterdiabaticModel& model, const ProtocolConfig& cfg, double t_begin,
                              double t_end);

std::vector<DigitizedStep> digitize(const CounterdiabaticModel& model, const ProtocolConfig& cfg);
std::vector<DigitizedStep> digitize(const IsingInstance& inst, const ProtocolConfig& cfg);

enum class GateKind { kRX, kRY, kRZ, kZZ };

std::string to_string(GateKind kind);
GateKind parse_gate_kind(std::string_view text);

struct Gate {
  GateKind kind = GateKind::kRZ;
  std::vector<std::size_t> sites;
  double theta = 0.0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Where a gate came from. Gates lowered from one Pauli term share a term id;
/// basis-change gates are the fixed +-pi/2 rotations around a ZY/YZ term.
struct GateOrigin {
  int step = 0;
  int term = 0;
  std::string pauli;
  bool basis_change = false;

  friend bool operator==(const GateOrigin&, const GateOrigin&) = default;
};

struct PruneRecord {
  std::size_t removed_terms = 0;
  std::size_t removed_gates = 0;
  double max_removed_angle = 0.0;
  double threshold = 0.0;
};

struct CircuitIR {
  std::size_t n = 0;
  std::vector<Gate> gates;
  std::vector<GateOrigin> origins;  // parallel to gates
  PruneRecord pruned;

  void validate() const;
  void append(const CircuitIR& other);
};

/// Lowers exp(-i H dt) to gates, one exponential per term in canonical order:
/// X, Z, ZZ, Y, then ZY/YZ; within a class, ascending site order. Identity
/// terms are a global phase and are skipped. Any other string is rejected.
CircuitIR compile_step(const PauliSum& H, double dt, int step = 0);

CircuitIR compile_protocol(const CounterdiabaticModel& model, const ProtocolConfig& cfg);
CircuitIR compile_protocol(const IsingInstance& inst, const ProtocolConfig& cfg);

/// Drops every term whose generating angle is below the threshold, together
/// with its basis-change gates. Survivors keep their order.
CircuitIR prune(const CircuitIR& circuit, double threshold);

/// Keeps all terms that are not 2-local, plus the k 2-local terms of largest
/// |coefficient| (ties broken by the lexicographic order of the string).
PauliSum truncate_2local(const PauliSum& H, std::size_t k);

struct CircuitStats {
  std::map<std::string, std::size_t> counts;  // by gate kind name
  std::size_t total = 0;
  std::size_t two_qubit = 0;
  std::size_t depth = 0;

  friend bool operator==(const CircuitStats&, const CircuitStats&) = default;
  nlohmann::json to_json() const;
};

CircuitStats stats(const CircuitIR& circuit);

nlohmann::json circuit_to_json(const CircuitIR& circuit);
CircuitIR circuit_from_json(const nlohmann::json& doc);

}  // namespace dcqf
