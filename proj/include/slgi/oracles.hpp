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

#include <array>

namespace slgi {

/// K_n for J = 0 and sigma^x measurements on |+>^N, any n > 1:
/// [3 cos(ht) - 2 cos(2ht) + cos(3ht)] / 2. Never exceeds 1.
double noninteracting_k(double ht);

/// Single precessing spin, sigma^x at times 0, t, 2t: 2 cos(ht) - cos(2ht).
/// Peaks at 3/2 for ht = pi/3 (mod 2 pi) and 5 pi/3 (mod 2 pi).
double single_spin_k(double ht);

struct Bounds {
    double min;
    double max;
    bool operator==(const Bounds &) const = default;
};

/// Extremes of s0*ab + s1*bc + s2*ac over the eight deterministic
/// assignments (a, b, c) in {+-1}^3. Each sign must be +1 or -1
/// (ConfigError otherwise). The spatial LGI uses (+1, +1, -1) -> [-3, 1].
Bounds classical_bound(const std::array<int, 3> &signs);

}  // namespace slgi
