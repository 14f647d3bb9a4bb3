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

// Adaptive Gauss-Kronrod (7/15) quadrature over any vector-space value type
// that supports +, scalar * and a norm.

#include <array>
#include <cmath>

#include "dcqf/pauli.hpp"

namespace dcqf::detail {

inline double value_norm(double x) { return std::abs(x); }
inline double value_norm(const PauliSum& s) { return s.norm(); }

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (and the centre).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class V, class F>
V integrate_adaptive(const F& f, double a, double b, double abs_tol, double rel_tol, int depth = 0) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const V centre = f(mid);
  V kronrod = kKronrodWeights[7] * centre;
  V gauss = kGaussWeights[3] * centre;
  for (int k = 0; k < 7; ++k) {
    const double dx = half * kKronrodNodes[k];
    V pair = f(mid - dx);
    pair = pair + f(mid + dx);
    kronrod = kronrod + kKronrodWeights[k] * pair;
    if (k % 2 == 1) gauss = gauss + kGaussWeights[k / 2] * pair;
  }
  kronrod = half * kronrod;
  gauss = half * gauss;

  const V diff = kronrod + (-1.0) * gauss;
  const double err = value_norm(diff);
  const double tol = std::max(abs_tol, rel_tol * value_norm(kronrod));
  if (err <= tol || depth >= 40 || half < 1e-14) {
    return kronrod;
  }
  V left = integrate_adaptive<V>(f, a, mid, 0.5 * abs_tol, rel_tol, depth + 1);
  V right = integrate_adaptive<V>(f, mid, b, 0.5 * abs_tol, rel_tol, depth + 1);
  return left + right;
}

}  // namespace dcqf::detail
