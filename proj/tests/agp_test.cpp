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
#include <functional>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace dcqf {
namespace {

using testing::Mat;
using testing::kron_sum;

const Complex kI(0.0, 1.0);

bool odd_y_only(const PauliSum& s) {
  for (const auto& [p, c] : s) {
    if (p.y_weight() % 2 == 0) return false;
  }
  return true;
}

// Tr[G^2] / 2^n for G = dH + i[A, H], all formed densely.
double dense_action(const Mat& H, const Mat& dH, const Mat& A) {
  const Mat G = dH + kI * testing::dense_comm(A, H);
  return testing::dense_hs(G, G).real();
}

// Normal equations assembled from dense matrices only.
Eigen::VectorXd dense_alpha(const IsingInstance& inst, double lam, int order) {
  CounterdiabaticModel m(inst);
  const Mat H = kron_sum(m.adiabatic(lam));
  const Mat dH = kron_sum(m.lambda_derivative());
  std::vector<Mat> chain{dH};
  for (int k = 1; k <= 2 * order; ++k) chain.push_back(testing::dense_comm(H, chain.back()));
  Eigen::MatrixXd gram(order, order);
  Eigen::VectorXd rhs(order);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) gram(a, b) = testing::dense_hs(chain[2 * a + 2], chain[2 * b + 2]).real();
    rhs(a) = testing::dense_hs(chain[2 * a + 2], dH).real();
  }
  return gram.colPivHouseholderQr().solve(-rhs);
}

double simpson(const std::function<double(double)>& f, double a, double b, int n = 2000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  return s * h / 3.0;
}

TEST(Variant, NamesAndValidation) {
  EXPECT_EQ(CDVariant::local().name(), "local-y");
  EXPECT_NO_THROW(CDVariant::nested(2).validate());
  EXPECT_THROW(CDVariant::nested(0).validate(), Error);
  for (auto mode : {DriveMode::kAdiabatic, DriveMode::kFullCD, DriveMode::kImpulse}) {
    EXPECT_EQ(parse_drive_mode(to_string(mode)), mode);
  }
  EXPECT_THROW(parse_drive_mode("sideways"), Error);
}

TEST(LocalBeta, ClosedFormValues) {
  auto yan = builtin_instance("yan26");
  auto beta0 = local_beta(yan, 0.0);
  for (std::size_t i = 0; i < yan.n; ++i) EXPECT_DOUBLE_EQ(beta0[i], yan.h[i] / 2.0);

  IsingInstance one{1, {2.0}, {}, 0.0};
  EXPECT_DOUBLE_EQ(local_beta(one, 1.0)[0], 0.25);
}

TEST(LocalBeta, IntegralMatchesQuadrature) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto inst = testing::random_instance(4, rng, 2.0);
    CounterdiabaticModel m(inst);
    const double a = 0.1 * trial / 2.0, b = a + 0.3;
    auto exact = m.local_beta_integral(a, b);
    for (std::size_t i = 0; i < inst.n; ++i) {
      const double q = simpson([&](double l) { return m.local_beta(l)[i]; }, a, b);
      EXPECT_NEAR(exact[i], q, 1e-10);
    }
  }
}

TEST(NcBasis, SingleQubit) {
  for (double h : {-3.0, 0.5, 2.0}) {
    IsingInstance one{1, {h}, {}, 0.0};
    for (double lam : {0.0, 0.3, 1.0}) {
      auto basis = nc_basis(one, lam, 1);
      ASSERT_EQ(basis.size(), 1u);
      ASSERT_EQ(basis[0].size(), 1u);
      EXPECT_NEAR(std::abs(basis[0].coeff("Y") - Complex(-2.0 * h)), 0.0, 1e-14);
    }
  }
}

TEST(NcBasis, MatchesSymbolicFirstOrderForm) {
  auto yan = builtin_instance("yan26");
  PauliSum expect(yan.n);
  for (std::size_t i = 0; i < yan.n; ++i) expect.add(PauliString::single(yan.n, i, Axis::Y), -2.0 * yan.h[i]);
  for (const auto& [p, v] : yan.J) {
    expect.add(PauliString::pair(yan.n, p.first, Axis::Y, p.second, Axis::Z), -2.0 * v);
    expect.add(PauliString::pair(yan.n, p.first, Axis::Z, p.second, Axis::Y), -2.0 * v);
  }
  auto o1 = nc_basis(yan, 0.37, 1)[0];
  EXPECT_LT((o1 - expect).norm(), 1e-12);
}

TEST(NcBasis, HermitianOddYAndLambdaIndependent) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = testing::random_instance(3, rng);
    auto ref = nc_basis(inst, 0.0, 1)[0];
    for (double lam : {0.2, 0.5, 0.9}) {
      auto basis = nc_basis(inst, lam, 2);
      for (const auto& o : basis) {
        EXPECT_TRUE(o.is_hermitian());
        EXPECT_TRUE(odd_y_only(o));
      }
      EXPECT_LT((basis[0] - ref).norm(), 1e-12 * (1.0 + ref.norm()));
    }
  }
}

TEST(NcBasis, MatchesDenseNestedCommutator) {
  std::mt19937_64 rng(33);
  auto inst = testing::random_instance(3, rng);
  CounterdiabaticModel m(inst);
  const double lam = 0.42;
  const Mat H = kron_sum(m.adiabatic(lam));
  Mat c = kron_sum(m.lambda_derivative());
  auto basis = m.nc_basis(lam, 2);
  for (int k = 0; k < 2; ++k) {
    c = testing::dense_comm(H, c);
    const Mat o = kI * c;
    EXPECT_LT((kron_sum(basis[k]) - o).norm(), 1e-9 * (1.0 + o.norm()));
    c = testing::dense_comm(H, c);
  }
}

TEST(NcBasis, TermCapIsEnforced) {
  std::mt19937_64 rng(34);
  CounterdiabaticModel capped(testing::random_instance(5, rng), 20);
  EXPECT_THROW(capped.nc_basis(0.5, 2), Error);
}

TEST(SolveAlpha, SingleQubitValues) {
  for (double h : {-2.0, 0.7, 5.0}) {
    IsingInstance one{1, {h}, {}, 0.0};
    auto sol = solve_alpha(one, 0.0, 1);
    EXPECT_FALSE(sol.degenerate);
    EXPECT_NEAR(sol.alphas[0], -0.25, 1e-12);
    EXPECT_NEAR(dense_alpha(one, 0.0, 1)(0), -0.25, 1e-12);
  }
}

TEST(SolveAlpha, SingleQubitAgreesWithLocalBeta) {
  for (double h : {-1.5, 0.3, 4.0}) {
    IsingInstance one{1, {h}, {}, 0.0};
    CounterdiabaticModel m(one);
    for (int k = 0; k < 20; ++k) {
      const double lam = k / 19.0;
      const double nested = m.gauge_potential(lam, CDVariant::nested(1)).coeff("Y").real();
      EXPECT_NEAR(nested, m.local_beta(lam)[0], 1e-10);
      EXPECT_NEAR(-2.0 * h * m.solve_alpha(lam, 1).alphas[0], m.local_beta(lam)[0], 1e-10);
    }
  }
}

TEST(SolveAlpha, DegenerateBranch) {
  IsingInstance flat{3, {0.0, 0.0, 0.0}, {}, 1.0};
  auto sol = solve_alpha(flat, 0.5, 1);
  EXPECT_TRUE(sol.degenerate);
  EXPECT_EQ(sol.alphas, std::vector<double>{0.0});
  EXPECT_TRUE(cd_pauli_sum(flat, 0.2, 0.4, CDVariant::nested(1)).empty());
}

TEST(SolveAlpha, SymbolicMatchesDenseTraces) {
  std::mt19937_64 rng(35);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      auto inst = testing::random_instance(n, rng);
      for (int order : {1, 2}) {
        const double lam = 0.15 + 0.2 * trial;
        auto sym = solve_alpha(inst, lam, order);
        auto dense = dense_alpha(inst, lam, order);
        for (int k = 0; k < order; ++k) {
          EXPECT_NEAR(sym.alphas[k], dense(k), 1e-9 * (1.0 + std::abs(dense(k))));
        }
      }
    }
  }
}

TEST(SolveAlpha, MinimisesDenseAction) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = testing::random_instance(1 + trial % 3, rng);
    CounterdiabaticModel m(inst);
    const double lam = 0.05 * trial;
    const Mat H = kron_sum(m.adiabatic(lam));
    const Mat dH = kron_sum(m.lambda_derivative());
    const Mat O = kron_sum(m.nc_basis(lam, 1)[0]);
    const double a = m.solve_alpha(lam, 1).alphas[0];
    const double s0 = dense_action(H, dH, a * O);
    EXPECT_GT(dense_action(H, dH, (a + 1e-3) * O), s0);
    EXPECT_GT(dense_action(H, dH, (a - 1e-3) * O), s0);
  }
}

TEST(CdTerm, VanishesAtEndpoints) {
  auto yan = builtin_instance("yan26");
  for (auto v : {CDVariant::local(), CDVariant::nested(1)}) {
    EXPECT_TRUE(cd_pauli_sum(yan, 0.0, 0.4, v).empty());
    EXPECT_TRUE(cd_pauli_sum(yan, 0.4, 0.4, v).empty());
  }
}

TEST(CdTerm, LocalMidpointCoefficients) {
  auto yan = builtin_instance("yan26");
  Schedule s(0.4);
  auto cd = cd_pauli_sum(yan, 0.2, 0.4, CDVariant::local());
  auto beta = local_beta(yan, 0.5);
  for (std::size_t i = 0; i < yan.n; ++i) {
    EXPECT_NEAR(cd.coeff(PauliString::single(yan.n, i, Axis::Y)).real(), s.lambda_dot(0.2) * beta[i], 1e-10);
  }
  EXPECT_EQ(cd.size(), yan.n);
}

TEST(CdTerm, NestedEqualsLocalForUniformFreeSpins) {
  for (std::size_t n : {1u, 3u, 4u}) {
    IsingInstance inst{n, std::vector<double>(n, 1.3), {}, 0.0};
    for (double t : {0.05, 0.2, 0.33}) {
      auto nested = cd_pauli_sum(inst, t, 0.4, CDVariant::nested(1));
      auto local = cd_pauli_sum(inst, t, 0.4, CDVariant::local());
      EXPECT_LT((kron_sum(nested) - kron_sum(local)).norm(), 1e-9);
    }
  }
}

TEST(CdTerm, HermitianWithOddYWeight) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    auto inst = testing::random_instance(4, rng);
    for (auto v : {CDVariant::local(), CDVariant::nested(1), CDVariant::nested(2)}) {
      auto cd = cd_pauli_sum(inst, 0.13, 0.4, v);
      EXPECT_TRUE(cd.is_hermitian());
      EXPECT_TRUE(odd_y_only(cd));
    }
  }
}

TEST(GaugePotentialIntegral, MatchesQuadrature) {
  std::mt19937_64 rng(38);
  auto inst = testing::random_instance(3, rng);
  CounterdiabaticModel m(inst);
  for (auto v : {CDVariant::local(), CDVariant::nested(1)}) {
    auto integral = m.gauge_potential_integral(0.2, 0.6, v);
    for (const auto& [p, c] : integral) {
      const double q = simpson([&](double l) { return m.gauge_potential(l, v).coeff(p).real(); }, 0.2, 0.6);
      EXPECT_NEAR(c.real(), q, 1e-9);
    }
  }
}

TEST(TotalHamiltonian, Modes) {
  auto yan = builtin_instance("yan26");
  PauliSum minus_x(5);
  for (std::size_t i = 0; i < 5; ++i) minus_x.add(PauliString::single(5, i, Axis::X), -1.0);
  auto v = CDVariant::local();
  EXPECT_EQ(total_hamiltonian(yan, 0.0, 0.4, DriveMode::kAdiabatic, v), minus_x);
  EXPECT_EQ(total_hamiltonian(yan, 0.4, 0.4, DriveMode::kAdiabatic, v), to_hamiltonian(yan));
  EXPECT_TRUE(total_hamiltonian(yan, 0.0, 0.4, DriveMode::kImpulse, v).empty());

  auto full = total_hamiltonian(yan, 0.1, 0.4, DriveMode::kFullCD, v);
  auto ad = total_hamiltonian(yan, 0.1, 0.4, DriveMode::kAdiabatic, v);
  auto imp = total_hamiltonian(yan, 0.1, 0.4, DriveMode::kImpulse, v);
  EXPECT_LT((full - ad - imp).norm(), 1e-10);
  EXPECT_TRUE(full.is_hermitian());
}

TEST(FirstOrderForms, ShorthandDiffersFromDerived) {
  CounterdiabaticModel m(builtin_instance("yan26"));
  Schedule s(0.4);
  auto report = compare_first_order_forms(m, 0.15, s);
  EXPECT_GT(report.derived_norm, 0.0);
  EXPECT_GT(report.relative_difference, 0.0);
  auto derived = m.cd_term(0.15, s, CDVariant::nested(1));
  EXPECT_NEAR(derived.norm(), report.derived_norm, 1e-9 * report.derived_norm);
}

}  // namespace
}  // namespace dcqf
