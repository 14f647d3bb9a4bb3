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

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcqf/pauli.hpp"

namespace dcqf {

/// H = offset + sum_i h_i Z_i + sum_{i<j} J_ij Z_i Z_j.
///
/// Bitstrings use character i for site i; '0' is the Z = +1 eigenvalue and
/// '1' is Z = -1. Read as a binary number, a bitstring is its basis index.
struct IsingInstance {
  using Pair = std::pair<std::size_t, std::size_t>;

  std::size_t n = 0;
  std::vector<double> h;
  std::map<Pair, double> J;
  double offset = 0.0;

  /// Throws Error if any invariant (sizes, i < j < n, finiteness) fails.
  void validate() const;

  double coupling(std::size_t i, std::size_t j) const;
  /// Sum over j != i of J_ij^2.
  double incident_coupling_sq(std::size_t i) const;

  friend bool operator==(const IsingInstance&, const IsingInstance&) = default;
};

inline constexpr std::size_t kBruteForceLimit = 24;

/// Reads the JSON instance format {"n", "h", "J": [[i, j, value], ...], "offset"}.
/// Pairs given as (j, i) are folded onto (i, j).
IsingInstance parse_instance(std::string_view text);
std::string serialize_instance(const IsingInstance& inst);

/// Named instances shipped with the library. Currently only "yan26": the
/// 5-qubit Hamiltonian whose ground state encodes the factors of 48567227.
IsingInstance builtin_instance(std::string_view name);
std::vector<std::string> builtin_names();

PauliSum to_hamiltonian(const IsingInstance& inst);

double energy(const IsingInstance& inst, std::string_view bits);

std::string index_to_bits(std::uint64_t index, std::size_t n);
std::uint64_t bits_to_index(std::string_view bits);

struct GroundStates {
  std::vector<std::string> bitstrings;
  double energy = 0.0;
};

/// Exhaustive minimisation over all 2^n configurations (n <= 24). Minimisers
/// are returned in ascending bitstring order; ties are exact within 1e-9
/// relative to the energy scale.
GroundStates brute_force_ground(const IsingInstance& inst);

}  // namespace dcqf
