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

#include "dcqf/ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

namespace dcqf {
namespace {

using nlohmann::json;

double finite_number(const json& v, const std::string& field) {
  if (!v.is_number()) {
    throw Error("instance field " + field + ": expected a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw Error("instance field " + field + ": non-finite number");
  }
  return x;
}

std::size_t site_index(const json& v, std::size_t n, const std::string& field) {
  if (!v.is_number_integer()) {
    throw Error("instance field " + field + ": expected an integer site index");
  }
  const auto idx = v.get<long long>();
  if (idx < 0 || static_cast<unsigned long long>(idx) >= n) {
    throw Error("instance field " + field + ": index " + std::to_string(idx) + " out of range for n=" +
                std::to_string(n));
  }
  return static_cast<std::size_t>(idx);
}

}  // namespace

void IsingInstance::validate() const {
  if (n == 0) throw Error("instance: n must be positive");
  if (n > PauliString::kMaxSites) throw Error("instance: n exceeds 64 sites");
  if (h.size() != n) {
    throw Error("instance: h has " + std::to_string(h.size()) + " entries, expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(h[i])) throw Error("instance: h[" + std::to_string(i) + "] is not finite");
  }
  for (const auto& [p, v] : J) {
    if (!(p.first < p.second && p.second < n)) {
      throw Error("instance: invalid pair (" + std::to_string(p.first) + "," + std::to_string(p.second) + ")");
    }
    if (!std::isfinite(v)) throw Error("instance: non-finite coupling");
  }
  if (!std::isfinite(offset)) throw Error("instance: offset is not finite");
}

double IsingInstance::coupling(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  auto it = J.find({i, j});
  return it == J.end() ? 0.0 : it->second;
}

double IsingInstance::incident_coupling_sq(std::size_t i) const {
  double acc = 0.0;
  for (const auto& [p, v] : J) {
    if (p.first == i || p.second == i) acc += v * v;
  }
  return acc;
}

IsingInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("instance: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("instance: top level must be a JSON object");
  for (const char* key : {"n", "h", "J", "offset"}) {
    if (!doc.contains(key)) throw Error(std::string("instance: missing field \"") + key + "\"");
  }

  IsingInstance inst;
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() <= 0) {
    throw Error("instance field n: expected a positive integer");
  }
  inst.n = doc["n"].get<std::size_t>();
  if (inst.n > PauliString::kMaxSites) throw Error("instance field n: at most 64 sites supported");

  const json& h = doc["h"];
  if (!h.is_array()) throw Error("instance field h: expected an array");
  if (h.size() != inst.n) {
    throw Error("instance field h: has " + std::to_string(h.size()) + " entries, expected n=" +
                std::to_string(inst.n));
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    inst.h.push_back(finite_number(h[i], "h[" + std::to_string(i) + "]"));
  }

  const json& couplings = doc["J"];
  if (!couplings.is_array()) throw Error("instance field J: expected an array");
  for (std::size_t k = 0; k < couplings.size(); ++k) {
    const std::string field = "J[" + std::to_string(k) + "]";
    const json& entry = couplings[k];
    if (!entry.is_array() || entry.size() != 3) throw Error("instance field " + field + ": expected [i, j, value]");
    std::size_t i = site_index(entry[0], inst.n, field + "[0]");
    std::size_t j = site_index(entry[1], inst.n, field + "[1]");
    const double v = finite_number(entry[2], field + "[2]");
    if (i == j) throw Error("instance field " + field + ": self-coupling on site " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (!inst.J.emplace(IsingInstance::Pair{i, j}, v).second) {
      throw Error("instance field " + field + ": duplicate pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  inst.offset = finite_number(doc["offset"], "offset");
  return inst;
}

std::string serialize_instance(const IsingInstance& inst) {
  inst.validate();
  json couplings = json::array();
  for (const auto& [p, v] : inst.J) couplings.push_back({p.first, p.second, v});
  json doc = {{"n", inst.n}, {"h", inst.h}, {"J", couplings}, {"offset", inst.offset}};
  return doc.dump();
}

IsingInstance builtin_instance(std::string_view name) {
  if (name == "yan26") {
    // 26-bit factoring instance (N = 48567227); sites 1..5 of the source are 0..4 here.
    IsingInstance inst;
    inst.n = 5;
    inst.offset = 781.0;
    inst.h = {-142.0, -64.0, -81.0, -213.0, -4.5};
    inst.J = {
        {{0, 1}, -13.5}, {{0, 2}, 3.5},  {{0, 3}, 18.0},  {{0, 4}, 17.5}, {{1, 2}, -29.0},
        {{1, 3}, 19.5},  {{1, 4}, -34.0}, {{2, 3}, -31.5}, {{2, 4}, -2.5}, {{3, 4}, 4.5},
    };
    return inst;
  }
  throw Error("unknown builtin instance '" + std::string(name) + "' (available: yan26)");
}

std::vector<std::string> builtin_names() { return {"yan26"}; }

PauliSum to_hamiltonian(const IsingInstance& inst) {
  inst.validate();
  PauliSum H(inst.n);
  H.add(PauliString(inst.n), inst.offset);
  for (std::size_t i = 0; i < inst.n; ++i) H.add(PauliString::single(inst.n, i, Axis::Z), inst.h[i]);
  for (const auto& [p, v] : inst.J) {
    H.add(PauliString::pair(inst.n, p.first, Axis::Z, p.second, Axis::Z), v);
  }
  return H;
}

double energy(const IsingInstance& inst, std::string_view bits) {
  if (bits.size() != inst.n) {
    throw Error("energy: bitstring length " + std::to_string(bits.size()) + " does not match n=" +
                std::to_string(inst.n));
  }
  std::vector<double> spin(inst.n);
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw Error("energy: bitstring must contain only '0'/'1'");
    spin[i] = bits[i] == '0' ? 1.0 : -1.0;
  }
  double e = inst.offset;
  for (std::size_t i = 0; i < inst.n; ++i) e += inst.h[i] * spin[i];
  for (const auto& [p, v] : inst.J) e += v * spin[p.first] * spin[p.second];
  return e;
}

std::string index_to_bits(std::uint64_t index, std::size_t n) {
  std::string bits(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if ((index >> (n - 1 - i)) & 1U) bits[i] = '1';
  }
  return bits;
}

std::uint64_t bits_to_index(std::string_view bits) {
  std::uint64_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error("bitstring must contain only '0'/'1'");
    idx = (idx << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return idx;
}

GroundStates brute_force_ground(const IsingInstance& inst) {
  inst.validate();
  if (inst.n > kBruteForceLimit) {
    throw Error("brute_force_ground: n=" + std::to_string(inst.n) + " exceeds limit " +
                std::to_string(kBruteForceLimit));
  }
  const std::size_t n = inst.n;
  const std::uint64_t dim = std::uint64_t{1} << n;

  double scale = std::abs(inst.offset);
  for (double v : inst.h) scale += std::abs(v);
  for (const auto& [p, v] : inst.J) scale += std::abs(v);
  const double tie = 1e-9 * std::max(1.0, scale);

  // Gray-code walk: one spin flip per step keeps each update O(n).
  std::vector<double> spin(n, 1.0);
  double e = inst.offset;
  for (std::size_t i = 0; i < n; ++i) e += inst.h[i];
  for (const auto& [p, v] : inst.J) e += v;
  std::vector<std::vector<std::pair<std::size_t, double>>> nbr(n);
  for (const auto& [p, v] : inst.J) {
    nbr[p.first].emplace_back(p.second, v);
    nbr[p.second].emplace_back(p.first, v);
  }

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::uint64_t> argmin;
  std::uint64_t index = 0;
  for (std::uint64_t k = 0; k < dim; ++k) {
    if (k > 0) {
      const auto flip_bit = static_cast<std::size_t>(std::countr_zero(k));
      const std::size_t site = n - 1 - flip_bit;
      double local = inst.h[site];
      for (const auto& [j, v] : nbr[site]) local += v * spin[j];
      e -= 2.0 * spin[site] * local;
      spin[site] = -spin[site];
      index ^= std::uint64_t{1} << flip_bit;
    }
    if (e < best - tie) {
      best = e;
      argmin.assign(1, index);
    } else if (std::abs(e - best) <= tie) {
      argmin.push_back(index);
      best = std::min(best, e);
    }
  }

  GroundStates out;
  std::sort(argmin.begin(), argmin.end());
  for (auto idx : argmin) out.bitstrings.push_back(index_to_bits(idx, n));
  // Report the energy by direct evaluation so accumulated Gray-code drift never leaks out.
  out.energy = energy(inst, out.bitstrings.front());
  return out;
}

}  // namespace dcqf
