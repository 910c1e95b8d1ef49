// Copyright 2026 The spinqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spinqft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Raised for bad arguments found after option parsing; maps to exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default seed for every randomized command.
inline constexpr std::uint64_t kDefaultSeed = 20020101;

/// Explicit flag, then SPINQFT_SEED, then kDefaultSeed.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag);

/// "1..10,12..14,20" -> sorted, disjoint inclusive ranges. Throws UsageError on
/// malformed text, empty or overlapping ranges.
std::vector<std::pair<int, int>> parse_ranges(const std::string& text);

/// Writes to `path` through a temporary file in the same directory and a
/// rename; "-" or empty writes to stdout.
void write_output(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace spinqft::cli
