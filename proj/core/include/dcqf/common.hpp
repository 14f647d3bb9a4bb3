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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcqf {

/// Raised for every contract violation in the library. The message is a
/// single line suitable for a CLI diagnostic.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficients with magnitude at or below this are dropped from operator sums.
inline constexpr double kDropTolerance = 1e-12;

inline constexpr std::size_t kDefaultDenseLimit = 14;

/// Largest qubit count for which dense matrices and statevectors are built.
/// Reads DCQF_DENSE_LIMIT on every call; falls back to kDefaultDenseLimit.
std::size_t dense_limit();

void require_dense(std::size_t n, const char* what);

}  // namespace dcqf
