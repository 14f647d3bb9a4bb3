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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace dcqf::cli {

/// Echo of the invocation and everything needed to reproduce an output file.
/// Contains no timestamps or host data, so equal manifests mean equal outputs.
struct RunManifest {
  std::string command;
  nlohmann::json config;
  std::optional<std::uint64_t> seed;
  std::string version;
  std::string input_digest;

  nlohmann::json to_json() const;
};

/// FNV-1a 64-bit digest rendered as "fnv1a64:<16 hex digits>".
std::string digest(std::string_view bytes);

std::string join_command(const std::vector<std::string>& args);

}  // namespace dcqf::cli
