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

#include "dcqf/schedule.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dcqf/common.hpp"

namespace dcqf {

using std::numbers::pi;

Schedule::Schedule(double total_time) : total_time_(total_time) {
  if (!(total_time > 0.0) || !std::isfinite(total_time)) {
    throw Error("schedule: total time must be positive and finite, got " + std::to_string(total_time));
  }
}

double Schedule::clamp_time(double t) const {
  const double eps = 1e-12 * total_time_;
  if (!(t >= -eps && t <= total_time_ + eps)) {
    throw Error("schedule: t=" + std::to_string(t) + " outside [0, " + std::to_string(total_time_) + "]");
  }
  if (t < 0.0) return 0.0;
  if (t > total_time_) return total_time_;
  return t;
}

double Schedule::lambda(double t) const {
  t = clamp_time(t);
  if (t == 0.0) return 0.0;
  if (t == total_time_) return 1.0;
  const double inner = std::sin(pi * t / (2.0 * total_time_));
  const double outer = std::sin(0.5 * pi * inner * inner);
  return outer * outer;
}

double Schedule::lambda_dot(double t) const {
  t = clamp_time(t);
  if (t == 0.0 || t == total_time_) return 0.0;
  // With s = sin^2(pi t / 2T): d/dt sin^2(pi s / 2) = sin(pi s) * (pi/2) * ds/dt,
  // and ds/dt = (pi / 2T) sin(pi t / T).
  const double inner = std::sin(pi * t / (2.0 * total_time_));
  const double s = inner * inner;
  return std::sin(pi * s) * (pi * pi / (4.0 * total_time_)) * std::sin(pi * t / total_time_);
}

}  // namespace dcqf
