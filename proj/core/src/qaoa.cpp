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

#include "dcqf/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <random>

#include "dcqf/statevector.hpp"

namespace dcqf {

void QaoaParams::validate() const {
  if (gammas.empty()) throw Error("QAOA: p must be >= 1");
  if (gammas.size() != betas.size()) throw Error("QAOA: gamma and beta lists differ in length");
  for (double a : gammas) {
    if (!std::isfinite(a)) throw Error("QAOA: non-finite gamma");
  }
  for (double a : betas) {
    if (!std::isfinite(a)) throw Error("QAOA: non-finite beta");
  }
}

nlohmann::json QaoaParams::to_json() const { return {{"p", p()}, {"gammas", gammas}, {"betas", betas}}; }

CircuitIR qaoa_circuit(const IsingInstance& inst, const QaoaParams& params) {
  params.validate();
  const PauliSum cost = to_hamiltonian(inst);
  PauliSum mixer(inst.n);
  for (std::size_t i = 0; i < inst.n; ++i) mixer.add(PauliString::single(inst.n, i, Axis::X), -1.0);

  CircuitIR circuit;
  circuit.n = inst.n;
  for (std::size_t k = 0; k < params.p(); ++k) {
    circuit.append(compile_step(cost, params.gammas[k], static_cast<int>(2 * k)));
    circuit.append(compile_step(mixer, params.betas[k], static_cast<int>(2 * k + 1)));
  }
  return circuit;
}

namespace {

class Evaluator {
 public:
  Evaluator(const IsingInstance& inst, QaoaObjective objective) : inst_(inst), objective_(objective) {
    const auto ground = brute_force_ground(inst);
    for (const auto& b : ground.bitstrings) targets_.push_back(bits_to_index(b));
    const std::size_t dim = std::size_t{1} << inst.n;
    energies_.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) energies_[k] = energy(inst, index_to_bits(k, inst.n));
  }

  // Returns the objective (larger is better) and fills the result fields.
  double operator()(const std::vector<double>& angles, QaoaResult& out) {
    ++count_;
    const std::size_t p = angles.size() / 2;
    QaoaParams params{{angles.begin(), angles.begin() + static_cast<std::ptrdiff_t>(p)},
                      {angles.begin() + static_cast<std::ptrdiff_t>(p), angles.end()}};
    const Statevector psi = run_circuit(qaoa_circuit(inst_, params), initial_plus_state(inst_.n));
    double success = 0.0;
    for (auto t : targets_) success += std::norm(psi[t]);
    double e = 0.0;
    for (std::size_t k = 0; k < psi.dim(); ++k) e += std::norm(psi[k]) * energies_[k];
    out.params = std::move(params);
    out.success = success;
    out.energy = e;
    return objective_ == QaoaObjective::kSuccessProbability ? success : -e;
  }

  std::size_t count() const { return count_; }

 private:
  const IsingInstance& inst_;
  QaoaObjective objective_;
  std::vector<std::uint64_t> targets_;
  std::vector<double> energies_;
  std::size_t count_ = 0;
};

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

QaoaResult optimize_angles(const IsingInstance& inst, std::size_t p, std::size_t budget, std::uint64_t seed,
                           QaoaObjective objective) {
  if (p < 1) throw Error("QAOA: p must be >= 1");
  if (budget < 1) throw Error("QAOA: evaluation budget must be >= 1");
  constexpr double pi = std::numbers::pi;
  const std::size_t dims = 2 * p;
  Evaluator eval(inst, objective);

  // Grid resolution: largest g with g^dims <= max(1, budget / 2).
  const std::size_t grid_budget = std::max<std::size_t>(1, budget / 2);
  std::size_t g = 1;
  while (std::pow(static_cast<double>(g + 1), static_cast<double>(dims)) <= static_cast<double>(grid_budget)) ++g;
  std::size_t grid_total = 1;
  for (std::size_t d = 0; d < dims; ++d) grid_total *= g;

  QaoaResult best;
  double best_score = -std::numeric_limits<double>::infinity();
  std::vector<double> best_angles;
  QaoaResult scratch;

  std::vector<std::size_t> digits(dims, 0);
  for (std::size_t idx = 0; idx < grid_total; ++idx) {
    std::vector<double> angles(dims);
    // Lexicographic enumeration: the first coordinate varies slowest.
    std::size_t rest = idx;
    for (std::size_t d = dims; d-- > 0;) {
      digits[d] = rest % g;
      rest /= g;
    }
    for (std::size_t d = 0; d < dims; ++d) angles[d] = pi * static_cast<double>(digits[d]) / static_cast<double>(g);
    const double score = eval(angles, scratch);
    if (score > best_score) {
      best_score = score;
      best = scratch;
      best_angles = angles;
    }
  }

  std::mt19937_64 rng(seed);
  const double initial_step = pi / (2.0 * static_cast<double>(g));
  std::vector<double> x = best_angles;
  double fx = best_score;
  double step = initial_step;
  std::vector<std::size_t> order(dims);
  for (std::size_t d = 0; d < dims; ++d) order[d] = d;

  while (eval.count() < budget) {
    // Fisher-Yates with raw engine output keeps the order identical across standard libraries.
    for (std::size_t d = dims; d > 1; --d) std::swap(order[d - 1], order[rng() % d]);
    bool improved = false;
    for (std::size_t d : order) {
      for (double sign : {1.0, -1.0}) {
        if (eval.count() >= budget) break;
        std::vector<double> y = x;
        y[d] += sign * step;
        const double fy = eval(y, scratch);
        if (fy > fx) {
          x = std::move(y);
          fx = fy;
          improved = true;
          if (fy > best_score) {
            best_score = fy;
            best = scratch;
            best_angles = x;
          }
          break;
        }
      }
    }
    if (!improved) {
      step *= 0.5;
      if (step < 1e-9) {
        for (auto& a : x) a = pi * uniform01(rng);
        if (eval.count() >= budget) break;
        fx = eval(x, scratch);
        if (fx > best_score) {
          best_score = fx;
          best = scratch;
          best_angles = x;
        }
        step = initial_step;
      }
    }
  }
  best.evaluations = eval.count();
  return best;
}

}  // namespace dcqf
