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

// Counterdiabatic driving for the interpolation
//   H_ad(lambda) = (1 - lambda) H_i + lambda H_problem,  H_i = -sum_i X_i.
//
// Two gauge-potential ansatzes are supported:
//   local-y:            A = sum_i beta_i(lambda) Y_i with the closed-form beta_i.
//   nested-commutator:  A = sum_k alpha_k O_k, O_k = i ad_{H_ad}^{2k-1}(dH/dlambda),
//                       with alpha minimising the action Tr[G^2],
//                       G = dH/dlambda + i[A, H_ad].

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "dcqf/ising.hpp"
#include "dcqf/pauli.hpp"
#include "dcqf/schedule.hpp"

namespace dcqf {

enum class CDKind { kLocalY, kNestedCommutator };

struct CDVariant {
  CDKind kind = CDKind::kLocalY;
  int order = 1;  // expansion order l, nested-commutator only

  static CDVariant local() { return {CDKind::kLocalY, 1}; }
  static CDVariant nested(int order = 1) { return {CDKind::kNestedCommutator, order}; }

  void validate() const;
  std::string name() const;

  friend bool operator==(const CDVariant&, const CDVariant&) = default;
};

enum class DriveMode { kAdiabatic, kFullCD, kImpulse };

std::string to_string(DriveMode mode);
DriveMode parse_drive_mode(std::string_view text);

struct AlphaSolution {
  std::vector<double> alphas;
  /// Set when the normal matrix is singular: alphas are then the minimum-norm
  /// minimiser (all zero when nothing can be corrected).
  bool degenerate = false;
};

/// Normal equations of the action: gram(k, j) = <C_k, C_j>, rhs(k) = <C_k, dH>,
/// where C_k = ad_{H_ad}^{2k}(dH) and <,> is the normalised HS inner product.
/// The minimiser solves gram * alpha = -rhs.
struct ActionSystem {
  Eigen::MatrixXd gram;
  Eigen::VectorXd rhs;
  double base = 0.0;  // <dH, dH>, the action at alpha = 0
};

AlphaSolution solve_action_system(const ActionSystem& system);

inline constexpr std::size_t kDefaultMaxTerms = 1'000'000;

/// Precomputes the fixed operators of one instance and builds every
/// counterdiabatic quantity from them.
class CounterdiabaticModel {
 public:
  explicit CounterdiabaticModel(IsingInstance inst, std::size_t max_terms = kDefaultMaxTerms);

  const IsingInstance& instance() const { return inst_; }
  std::size_t num_sites() const { return inst_.n; }
  const PauliSum& initial_hamiltonian() const { return initial_; }
  const PauliSum& problem_hamiltonian() const { return problem_; }
  /// dH_ad/dlambda = H_problem - H_i.
  const PauliSum& lambda_derivative() const { return derivative_; }

  PauliSum adiabatic(double lam) const;

  std::vector<double> local_beta(double lam) const;
  /// Exact integral of beta_i over [lam_a, lam_b].
  std::vector<double> local_beta_integral(double lam_a, double lam_b) const;

  /// O_1..O_l at lam. Throws Error if any intermediate commutator exceeds the term cap.
  std::vector<PauliSum> nc_basis(double lam, int order) const;
  ActionSystem action_system(double lam, int order) const;
  AlphaSolution solve_alpha(double lam, int order) const;

  /// The gauge potential A(lambda), without the lambda-dot factor.
  PauliSum gauge_potential(double lam, const CDVariant& variant) const;
  /// Integral of A over lambda in [lam_a, lam_b]. Equals the time integral of
  /// lambda_dot * A over the matching time interval.
  PauliSum gauge_potential_integral(double lam_a, double lam_b, const CDVariant& variant) const;

  /// lambda_dot(t) * A(lambda(t)).
  PauliSum cd_term(double t, const Schedule& schedule, const CDVariant& variant) const;
  PauliSum total(double t, const Schedule& schedule, DriveMode mode, const CDVariant& variant) const;

 private:
  // c_0 = dH, c_m = [H_ad, c_{m-1}] for m = 1..depth.
  std::vector<PauliSum> commutator_chain(double lam, int depth) const;

  IsingInstance inst_;
  std::size_t max_terms_;
  PauliSum initial_;
  PauliSum problem_;
  PauliSum derivative_;
};

// Free-function forms of the model operations for one-off use.
std::vector<double> local_beta(const IsingInstance& inst, double lam);
std::vector<PauliSum> nc_basis(const IsingInstance& inst, double lam, int order);
AlphaSolution solve_alpha(const IsingInstance& inst, double lam, int order);
PauliSum cd_pauli_sum(const IsingInstance& inst, double t, double total_time, const CDVariant& variant);
PauliSum total_hamiltonian(const IsingInstance& inst, double t, double total_time, DriveMode mode,
                           const CDVariant& variant);

/// The compact first-order form -4 lambda_dot alpha_1 [sum h_i Y_i + sum_{i<j} J_ij Z_i Y_j],
/// kept for comparison against the commutator-derived term.
PauliSum first_order_shorthand(const IsingInstance& inst, double lambda_dot, double alpha1);

struct FirstOrderFormReport {
  double t = 0.0;
  double lambda = 0.0;
  double alpha1 = 0.0;
  double derived_norm = 0.0;
  double shorthand_norm = 0.0;
  /// ||shorthand - derived|| / ||derived||, HS norm.
  double relative_difference = 0.0;
};

FirstOrderFormReport compare_first_order_forms(const CounterdiabaticModel& model, double t,
                                               const Schedule& schedule);

}  // namespace dcqf
