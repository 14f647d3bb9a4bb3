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

namespace dcqf {

/// lambda(t) = sin^2[(pi/2) sin^2(pi t / 2T)] on [0, T]. Its first and second
/// time derivatives vanish at both endpoints.
class Schedule {
 public:
  explicit Schedule(double total_time);

  double total_time() const { return total_time_; }

  /// Throws Error for t outside [0, T]; values within 1e-12 T of an endpoint
  /// are clamped onto it.
  double lambda(double t) const;
  /// Closed-form d(lambda)/dt.
  double lambda_dot(double t) const;

 private:
  double clamp_time(double t) const;

  double total_time_;
};

}  // namespace dcqf
