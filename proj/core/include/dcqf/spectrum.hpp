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

#include <string>
#include <utility>
#include <vector>

#include "dcqf/trotter.hpp"

namespace dcqf {

inline constexpr std::size_t kSpectrumLimit = 12;

struct SpectrumPoint {
  double t = 0.0;
  double lambda = 0.0;
  std::vector<double> levels;  // lowest m eigenvalues, ascending
  double gap = 0.0;            // E_1 - E_0 of the sorted spectrum
  std::size_t ground_degeneracy = 1;
};

struct MinGap {
  double t = 0.0;
  double lambda = 0.0;
  double gap = 0.0;
};

struct SpectrumReport {
  std::vector<SpectrumPoint> grid;
  MinGap min_gap;
  DriveMode mode = DriveMode::kAdiabatic;
  CDVariant variant;
};

/// Dense eigenvalues of the instantaneous drive Hamiltonian (cfg.mode and
/// cfg.variant, evaluated pointwise) on a uniform grid of t in [0, T].
SpectrumReport instantaneous_spectrum(const CounterdiabaticModel& model, const ProtocolConfig& cfg,
                                      std::size_t grid_points, std::size_t levels);
SpectrumReport instantaneous_spectrum(const IsingInstance& inst, const ProtocolConfig& cfg,
                                      std::size_t grid_points, std::size_t levels);

/// Columns t, lambda, E0..E{m-1}, gap. Lines starting with '#' are comments.
std::string spectrum_to_csv(const SpectrumReport& report, const std::vector<std::string>& comments = {});

/// Overlap of the exactly evolved state with the ground space of H_ad(lambda(t))
/// at each grid time. Between grid points the state is propagated with exact
/// per-step exponentials of step length <= cfg.dt under cfg.sampling.
std::vector<std::pair<double, double>> ground_overlap_track(const CounterdiabaticModel& model,
                                                            const ProtocolConfig& cfg, std::size_t grid_points);

}  // namespace dcqf
