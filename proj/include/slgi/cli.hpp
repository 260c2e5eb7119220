// Copyright 2026 The spatial-lgi Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace slgi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitValidation = 2;

/// Environment variable naming the directory for outputs given as relative
/// paths, or for the default file name when no --output is passed.
inline constexpr const char *kOutputDirEnv = "SLGI_OUTPUT_DIR";

/// Entry point of the `slgi` tool. Results go to `out` unless an output path
/// is configured; diagnostics go to `err`. Returns 0 on success, 2 on
/// validation errors and 1 on numerical failures.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// "2..7" -> {2,...,7}; "2,4,6" -> {2,4,6}; "5" -> {5}.
std::vector<std::size_t> parse_distance_list(const std::string &text);

}  // namespace slgi::cli
