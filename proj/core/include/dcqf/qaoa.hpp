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
#include <vector>

#include <nlohmann/json.hpp>

#include "dcqf/trotter.hpp"

namespace dcqf {

struct QaoaParams {
  std::vector<double> gammas;  // cost angles
  std::vector<double> betas;   // mixer angles

  std::size_t p() const { return gammas.size(); }
  void validate() const;
  nlohmann::json to_json() const;

  friend bool operator==(const QaoaParams&, const QaoaParams&) = default;
};

/// Layers of exp(-i gamma_k H_problem) followed by exp(-i beta_k sum(-X_i)),
/// lowered with compile_step. The cost of layer k is step 2k, its mixer 2k+1.
/// The simulator supplies |+>^n as input.
CircuitIR qaoa_circuit(const IsingInstance& inst, const QaoaParams& params);

enum class QaoaObjective { kSuccessProbability, kEnergy };

struct QaoaResult {
  QaoaParams params;
  double success = 0.0;  // probability on the brute-force ground space
  double energy = 0.0;   // <H_problem>
  std::size_t evaluations = 0;
};

/// Deterministic bounded search: a uniform grid over [0, pi)^{2p} using at most
/// half the budget (always including the all-zero point), then seeded
/// coordinate pattern search with step halving and random restarts until the
/// budget is spent. Ties keep the lexicographically first angles.
QaoaResult optimize_angles(const IsingInstance& inst, std::size_t p, std::size_t budget, std::uint64_t seed,
                           QaoaObjective objective = QaoaObjective::kSuccessProbability);

}  // namespace dcqf
