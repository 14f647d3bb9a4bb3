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

#include "dcqf/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "dcqf/statevector.hpp"

namespace dcqf {
namespace {

void check_spectrum_size(std::size_t n) {
  if (n > kSpectrumLimit) {
    throw Error("spectrum: n=" + std::to_string(n) + " exceeds limit " + std::to_string(kSpectrumLimit));
  }
  require_dense(n, "spectrum");
}

double grid_time(std::size_t j, std::size_t points, double total) {
  if (j + 1 == points) return total;
  return total * static_cast<double>(j) / static_cast<double>(points - 1);
}

std::size_t count_ground(const Eigen::VectorXd& values) {
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  std::size_t deg = 1;
  while (deg < static_cast<std::size_t>(values.size()) &&
         values(static_cast<Eigen::Index>(deg)) - values(0) <= 1e-9 * scale) {
    ++deg;
  }
  return deg;
}

}  // namespace

SpectrumReport instantaneous_spectrum(const CounterdiabaticModel& model, const ProtocolConfig& cfg,
                                      std::size_t grid_points, std::size_t levels) {
  check_spectrum_size(model.num_sites());
  if (grid_points < 2) throw Error("spectrum: grid needs at least 2 points");
  const std::size_t dim = std::size_t{1} << model.num_sites();
  if (levels < 2 || levels > dim) throw Error("spectrum: levels must be in [2, 2^n]");
  cfg.variant.validate();

  const Schedule schedule(cfg.total_time);
  SpectrumReport report;
  report.mode = cfg.mode;
  report.variant = cfg.variant;
  for (std::size_t j = 0; j < grid_points; ++j) {
    SpectrumPoint p;
    p.t = grid_time(j, grid_points, cfg.total_time);
    p.lambda = schedule.lambda(p.t);
    PauliSum H = model.total(p.t, schedule, cfg.mode, cfg.variant);
    if (H.empty()) H = PauliSum::identity(model.num_sites(), 0.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(to_dense(H), Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) throw Error("spectrum: eigensolver failed");
    const Eigen::VectorXd& values = eig.eigenvalues();
    p.levels.assign(values.data(), values.data() + levels);
    p.gap = values(1) - values(0);
    p.ground_degeneracy = count_ground(values);
    report.grid.push_back(std::move(p));
  }
  const auto it = std::min_element(report.grid.begin(), report.grid.end(),
                                   [](const SpectrumPoint& a, const SpectrumPoint& b) { return a.gap < b.gap; });
  report.min_gap = {it->t, it->lambda, it->gap};
  return report;
}

SpectrumReport instantaneous_spectrum(const IsingInstance& inst, const ProtocolConfig& cfg,
                                      std::size_t grid_points, std::size_t levels) {
  return instantaneous_spectrum(CounterdiabaticModel(inst), cfg, grid_points, levels);
}

std::string spectrum_to_csv(const SpectrumReport& report, const std::vector<std::string>& comments) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& c : comments) os << "# " << c << '\n';
  const std::size_t m = report.grid.empty() ? 0 : report.grid.front().levels.size();
  os << "t,lambda";
  for (std::size_t k = 0; k < m; ++k) os << ",E" << k;
  os << ",gap\n";
  for (const auto& p : report.grid) {
    os << p.t << ',' << p.lambda;
    for (double e : p.levels) os << ',' << e;
    os << ',' << p.gap << '\n';
  }
  return os.str();
}

std::vector<std::pair<double, double>> ground_overlap_track(const CounterdiabaticModel& model,
                                                            const ProtocolConfig& cfg, std::size_t grid_points) {
  check_spectrum_size(model.num_sites());
  if (grid_points < 2) throw Error("overlap track: grid needs at least 2 points");
  cfg.validate();
  const Schedule schedule(cfg.total_time);
  const std::size_t n = model.num_sites();

  auto ground_overlap = [&](const Statevector& psi, double t) {
    const Eigen::MatrixXcd H = to_dense(model.adiabatic(schedule.lambda(t)));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(H);
    if (eig.info() != Eigen::Success) throw Error("overlap track: eigensolver failed");
    const std::size_t deg = count_ground(eig.eigenvalues());
    // Weight on the whole ground eigenspace when it is degenerate.
    const Eigen::VectorXcd amps = eig.eigenvectors().leftCols(static_cast<Eigen::Index>(deg)).adjoint() * psi.to_eigen();
    return amps.squaredNorm();
  };

  std::vector<std::pair<double, double>> track;
  Statevector psi = initial_plus_state(n);
  track.emplace_back(0.0, ground_overlap(psi, 0.0));
  double prev = 0.0;
  for (std::size_t j = 1; j < grid_points; ++j) {
    const double t = grid_time(j, grid_points, cfg.total_time);
    const auto substeps = static_cast<std::size_t>(std::max(1.0, std::ceil((t - prev) / cfg.dt - 1e-9)));
    const double h = (t - prev) / static_cast<double>(substeps);
    for (std::size_t s = 0; s < substeps; ++s) {
      const double a = prev + static_cast<double>(s) * h;
      const double b = s + 1 == substeps ? t : a + h;
      const PauliSum H = interval_hamiltonian(model, cfg, a, b);
      if (!H.empty()) psi.apply_dense(dense_propagator(H, b - a));
    }
    track.emplace_back(t, ground_overlap(psi, t));
    prev = t;
  }
  return track;
}

}  // namespace dcqf
