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

#include "dcqf/common.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace dcqf {

std::size_t dense_limit() {
  const char* env = std::getenv("DCQF_DENSE_LIMIT");
  if (env == nullptr || *env == '\0') {
    return kDefaultDenseLimit;
  }
  std::size_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0 || value > 30) {
    throw Error("DCQF_DENSE_LIMIT must be an integer in [1, 30], got '" + std::string(env) + "'");
  }
  return value;
}

void require_dense(std::size_t n, const char* what) {
  const std::size_t limit = dense_limit();
  if (n > limit) {
    throw Error(std::string(what) + ": " + std::to_string(n) + " qubits exceeds dense limit " +
                std::to_string(limit));
  }
}

}  // namespace dcqf
