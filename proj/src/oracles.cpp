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

#include "slgi/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "slgi/errors.hpp"

namespace slgi {

double noninteracting_k(double ht) {
    return 0.5 * (3 * std::cos(ht) - 2 * std::cos(2 * ht) + std::cos(3 * ht));
}

double single_spin_k(double ht) {
    return 2 * std::cos(ht) - std::cos(2 * ht);
}

Bounds classical_bound(const std::array<int, 3> &signs) {
    for (int s : signs) {
        if (s != 1 && s != -1) {
            throw ConfigError("correlator weights must be +1 or -1");
        }
    }
    Bounds b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (int a : {1, -1}) {
        for (int bb : {1, -1}) {
            for (int c : {1, -1}) {
                double k = signs[0] * a * bb + signs[1] * bb * c + signs[2] * a * c;
                b.min = std::min(b.min, k);
                b.max = std::max(b.max, k);
            }
        }
    }
    return b;
}

}  // namespace slgi
