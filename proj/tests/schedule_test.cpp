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

#include <gtest/gtest.h>

#include "dcqf/common.hpp"

namespace dcqf {
namespace {

TEST(Schedule, EndpointsAndMidpoint) {
  for (double T : {0.4, 1.0, 50.0}) {
    Schedule s(T);
    EXPECT_EQ(s.lambda(0.0), 0.0);
    EXPECT_EQ(s.lambda(T), 1.0);
    EXPECT_NEAR(s.lambda(0.5 * T), 0.5, 1e-15);
    EXPECT_EQ(s.lambda_dot(0.0), 0.0);
    EXPECT_EQ(s.lambda_dot(T), 0.0);
  }
}

TEST(Schedule, MonotoneAndSymmetric) {
  Schedule s(0.4);
  double prev = 0.0;
  for (int k = 1; k <= 400; ++k) {
    const double t = 0.4 * k / 400.0;
    const double lam = s.lambda(t);
    EXPECT_GE(lam, prev);
    EXPECT_NEAR(lam + s.lambda(0.4 - t), 1.0, 1e-14);
    EXPECT_GE(s.lambda_dot(t), 0.0);
    prev = lam;
  }
}

TEST(Schedule, DerivativeMatchesFiniteDifference) {
  Schedule s(0.4);
  const double h = 1e-6;
  for (int k = 1; k < 40; ++k) {
    const double t = 0.01 * k;
    const double fd = (s.lambda(t + h) - s.lambda(t - h)) / (2 * h);
    EXPECT_NEAR(s.lambda_dot(t), fd, 1e-6 * std::max(1.0, std::abs(fd)));
  }
}

TEST(Schedule, SecondDerivativeVanishesAtEnds) {
  Schedule s(1.0);
  const double h = 1e-5;
  EXPECT_NEAR((s.lambda_dot(h) - s.lambda_dot(0.0)) / h, 0.0, 1e-3);
  EXPECT_NEAR((s.lambda_dot(1.0) - s.lambda_dot(1.0 - h)) / h, 0.0, 1e-3);
}

TEST(Schedule, ClosedFormValues) {
  Schedule s(2.0);
  const double t = 0.5;
  const double inner = std::pow(std::sin(std::numbers::pi * t / 4.0), 2);
  EXPECT_NEAR(s.lambda(t), std::pow(std::sin(std::numbers::pi / 2 * inner), 2), 1e-15);
}

TEST(Schedule, RejectsBadInput) {
  EXPECT_THROW(Schedule(0.0), Error);
  EXPECT_THROW(Schedule(-1.0), Error);
  EXPECT_THROW(Schedule(std::nan("")), Error);
  Schedule s(1.0);
  EXPECT_THROW(s.lambda(-0.1), Error);
  EXPECT_THROW(s.lambda_dot(1.1), Error);
  EXPECT_EQ(s.lambda(1.0 + 1e-14), 1.0);
  EXPECT_EQ(s.lambda(-1e-14), 0.0);
}

}  // namespace
}  // namespace dcqf
