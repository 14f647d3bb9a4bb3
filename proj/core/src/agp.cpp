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

#include "dcqf/agp.hpp"

#include <cmath>

#include "quadrature.hpp"

namespace dcqf {

void CDVariant::validate() const {
  if (order < 1) throw Error("CD variant: expansion order must be >= 1, got " + std::to_string(order));
  if (kind == CDKind::kLocalY && order != 1) throw Error("CD variant: local-y has no expansion order");
}

std::string CDVariant::name() const {
  return kind == CDKind::kLocalY ? "local-y" : "nested-commutator(l=" + std::to_string(order) + ")";
}

std::string to_string(DriveMode mode) {
  switch (mode) {
    case DriveMode::kAdiabatic: return "adiabatic";
    case DriveMode::kFullCD: return "full-cd";
    case DriveMode::kImpulse: return "impulse";
  }
  return "unknown";
}

DriveMode parse_drive_mode(std::string_view text) {
  if (text == "adiabatic") return DriveMode::kAdiabatic;
  if (text == "full-cd") return DriveMode::kFullCD;
  if (text == "impulse") return DriveMode::kImpulse;
  throw Error("unknown mode '" + std::string(text) + "' (expected adiabatic, full-cd or impulse)");
}

AlphaSolution solve_action_system(const ActionSystem& system) {
  const auto l = system.gram.rows();
  AlphaSolution out;
  out.alphas.assign(static_cast<std::size_t>(l), 0.0);

  // Columns with C_k = 0 cannot lower the action; drop them and rescale the
  // rest to unit diagonal before solving.
  std::vector<Eigen::Index> active;
  for (Eigen::Index k = 0; k < l; ++k) {
    if (system.gram(k, k) > 0.0) active.push_back(k);
  }
  if (active.empty()) {
    out.degenerate = true;
    return out;
  }
  const auto m = static_cast<Eigen::Index>(active.size());
  Eigen::MatrixXd scaled(m, m);
  Eigen::VectorXd rhs(m);
  Eigen::VectorXd scale(m);
  for (Eigen::Index a = 0; a < m; ++a) scale(a) = std::sqrt(system.gram(active[a], active[a]));
  for (Eigen::Index a = 0; a < m; ++a) {
    rhs(a) = -system.rhs(active[a]) / scale(a);
    for (Eigen::Index b = 0; b < m; ++b) {
      scaled(a, b) = system.gram(active[a], active[b]) / (scale(a) * scale(b));
    }
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(scaled);
  cod.setThreshold(1e-12);
  const Eigen::VectorXd y = cod.solve(rhs);
  if (cod.rank() < m || static_cast<Eigen::Index>(active.size()) < l) out.degenerate = true;
  for (Eigen::Index a = 0; a < m; ++a) {
    out.alphas[static_cast<std::size_t>(active[a])] = y(a) / scale(a);
  }
  return out;
}

CounterdiabaticModel::CounterdiabaticModel(IsingInstance inst, std::size_t max_terms)
    : inst_(std::move(inst)), max_terms_(max_terms) {
  inst_.validate();
  problem_ = to_hamiltonian(inst_);
  initial_ = PauliSum(inst_.n);
  for (std::size_t i = 0; i < inst_.n; ++i) initial_.add(PauliString::single(inst_.n, i, Axis::X), -1.0);
  derivative_ = problem_ - initial_;
}

PauliSum CounterdiabaticModel::adiabatic(double lam) const {
  return (1.0 - lam) * initial_ + lam * problem_;
}

std::vector<double> CounterdiabaticModel::local_beta(double lam) const {
  std::vector<double> beta(inst_.n);
  const double off = (lam - 1.0) * (lam - 1.0);
  for (std::size_t i = 0; i < inst_.n; ++i) {
    const double h = inst_.h[i];
    if (h == 0.0) continue;
    const double denom = 2.0 * (off + lam * lam * (h * h + inst_.incident_coupling_sq(i)));
    beta[i] = h / denom;
  }
  return beta;
}

std::vector<double> CounterdiabaticModel::local_beta_integral(double lam_a, double lam_b) const {
  // Denominator (1 + a^2) lam^2 - 2 lam + 1 with a^2 = h^2 + sum J^2 integrates to
  // arctan(((1 + a^2) lam - 1) / a) / a.
  std::vector<double> out(inst_.n);
  for (std::size_t i = 0; i < inst_.n; ++i) {
    const double h = inst_.h[i];
    if (h == 0.0) continue;
    const double a = std::sqrt(h * h + inst_.incident_coupling_sq(i));
    const double c = 1.0 + a * a;
    const double antideriv_b = std::atan((c * lam_b - 1.0) / a);
    const double antideriv_a = std::atan((c * lam_a - 1.0) / a);
    out[i] = h / (2.0 * a) * (antideriv_b - antideriv_a);
  }
  return out;
}

std::vector<PauliSum> CounterdiabaticModel::commutator_chain(double lam, int depth) const {
  const PauliSum H = adiabatic(lam);
  std::vector<PauliSum> chain;
  chain.reserve(static_cast<std::size_t>(depth) + 1);
  chain.push_back(derivative_);
  for (int m = 1; m <= depth; ++m) {
    chain.push_back(commutator(H, chain.back()));
    if (chain.back().size() > max_terms_) {
      throw Error("nested commutator of depth " + std::to_string(m) + " has " +
                  std::to_string(chain.back().size()) + " strings, over the cap of " +
                  std::to_string(max_terms_));
    }
  }
  return chain;
}

std::vector<PauliSum> CounterdiabaticModel::nc_basis(double lam, int order) const {
  CDVariant::nested(order).validate();
  const auto chain = commutator_chain(lam, 2 * order - 1);
  std::vector<PauliSum> basis;
  for (int k = 1; k <= order; ++k) {
    basis.push_back(Complex(0.0, 1.0) * chain[static_cast<std::size_t>(2 * k - 1)]);
  }
  return basis;
}

ActionSystem CounterdiabaticModel::action_system(double lam, int order) const {
  CDVariant::nested(order).validate();
  const auto chain = commutator_chain(lam, 2 * order);
  ActionSystem sys;
  sys.gram.resize(order, order);
  sys.rhs.resize(order);
  sys.base = hs_inner(derivative_, derivative_).real();
  for (int k = 0; k < order; ++k) {
    const PauliSum& ck = chain[static_cast<std::size_t>(2 * k + 2)];
    sys.rhs(k) = hs_inner(ck, derivative_).real();
    for (int j = 0; j <= k; ++j) {
      const double g = hs_inner(ck, chain[static_cast<std::size_t>(2 * j + 2)]).real();
      sys.gram(k, j) = g;
      sys.gram(j, k) = g;
    }
  }
  return sys;
}

AlphaSolution CounterdiabaticModel::solve_alpha(double lam, int order) const {
  return solve_action_system(action_system(lam, order));
}

PauliSum CounterdiabaticModel::gauge_potential(double lam, const CDVariant& variant) const {
  variant.validate();
  PauliSum A(inst_.n);
  if (variant.kind == CDKind::kLocalY) {
    const auto beta = local_beta(lam);
    for (std::size_t i = 0; i < inst_.n; ++i) A.add(PauliString::single(inst_.n, i, Axis::Y), beta[i]);
    return A;
  }
  // One chain serves both the basis (odd depths) and the action system (even depths).
  const auto chain = commutator_chain(lam, 2 * variant.order);
  ActionSystem sys;
  sys.gram.resize(variant.order, variant.order);
  sys.rhs.resize(variant.order);
  for (int k = 0; k < variant.order; ++k) {
    const PauliSum& ck = chain[static_cast<std::size_t>(2 * k + 2)];
    sys.rhs(k) = hs_inner(ck, derivative_).real();
    for (int j = 0; j <= k; ++j) {
      sys.gram(k, j) = sys.gram(j, k) = hs_inner(ck, chain[static_cast<std::size_t>(2 * j + 2)]).real();
    }
  }
  const AlphaSolution alpha = solve_action_system(sys);
  for (int k = 0; k < variant.order; ++k) {
    A += Complex(0.0, alpha.alphas[static_cast<std::size_t>(k)]) * chain[static_cast<std::size_t>(2 * k + 1)];
  }
  return A;
}

PauliSum CounterdiabaticModel::gauge_potential_integral(double lam_a, double lam_b,
                                                        const CDVariant& variant) const {
  variant.validate();
  if (lam_a == lam_b) return PauliSum(inst_.n);
  if (variant.kind == CDKind::kLocalY) {
    const auto integral = local_beta_integral(lam_a, lam_b);
    PauliSum A(inst_.n);
    for (std::size_t i = 0; i < inst_.n; ++i) A.add(PauliString::single(inst_.n, i, Axis::Y), integral[i]);
    return A;
  }
  const PauliSum mid = gauge_potential(0.5 * (lam_a + lam_b), variant);
  const double scale = std::max(mid.norm(), 1.0);
  return detail::integrate_adaptive<PauliSum>(
      [&](double lam) { return gauge_potential(lam, variant); }, lam_a, lam_b,
      1e-12 * scale * std::abs(lam_b - lam_a), 1e-10);
}

PauliSum CounterdiabaticModel::cd_term(double t, const Schedule& schedule, const CDVariant& variant) const {
  const double lam_dot = schedule.lambda_dot(t);
  if (lam_dot == 0.0) return PauliSum(inst_.n);
  return lam_dot * gauge_potential(schedule.lambda(t), variant);
}

PauliSum CounterdiabaticModel::total(double t, const Schedule& schedule, DriveMode mode,
                                     const CDVariant& variant) const {
  switch (mode) {
    case DriveMode::kAdiabatic: return adiabatic(schedule.lambda(t));
    case DriveMode::kFullCD: return adiabatic(schedule.lambda(t)) + cd_term(t, schedule, variant);
    case DriveMode::kImpulse: return cd_term(t, schedule, variant);
  }
  throw Error("unreachable drive mode");
}

std::vector<double> local_beta(const IsingInstance& inst, double lam) {
  return CounterdiabaticModel(inst).local_beta(lam);
}

std::vector<PauliSum> nc_basis(const IsingInstance& inst, double lam, int order) {
  return CounterdiabaticModel(inst).nc_basis(lam, order);
}

AlphaSolution solve_alpha(const IsingInstance& inst, double lam, int order) {
  return CounterdiabaticModel(inst).solve_alpha(lam, order);
}

PauliSum cd_pauli_sum(const IsingInstance& inst, double t, double total_time, const CDVariant& variant) {
  return CounterdiabaticModel(inst).cd_term(t, Schedule(total_time), variant);
}

PauliSum total_hamiltonian(const IsingInstance& inst, double t, double total_time, DriveMode mode,
                           const CDVariant& variant) {
  return CounterdiabaticModel(inst).total(t, Schedule(total_time), mode, variant);
}

PauliSum first_order_shorthand(const IsingInstance& inst, double lambda_dot, double alpha1) {
  PauliSum bracket(inst.n);
  for (std::size_t i = 0; i < inst.n; ++i) bracket.add(PauliString::single(inst.n, i, Axis::Y), inst.h[i]);
  for (const auto& [p, v] : inst.J) {
    bracket.add(PauliString::pair(inst.n, p.first, Axis::Z, p.second, Axis::Y), v);
  }
  return (-4.0 * lambda_dot * alpha1) * bracket;
}

FirstOrderFormReport compare_first_order_forms(const CounterdiabaticModel& model, double t,
                                               const Schedule& schedule) {
  FirstOrderFormReport r;
  r.t = t;
  r.lambda = schedule.lambda(t);
  r.alpha1 = model.solve_alpha(r.lambda, 1).alphas.front();
  const PauliSum derived = model.cd_term(t, schedule, CDVariant::nested(1));
  const PauliSum shorthand = first_order_shorthand(model.instance(), schedule.lambda_dot(t), r.alpha1);
  r.derived_norm = derived.norm();
  r.shorthand_norm = shorthand.norm();
  const double diff = (shorthand - derived).norm();
  r.relative_difference = r.derived_norm > 0.0 ? diff / r.derived_norm : diff;
  return r;
}

}  // namespace dcqf
