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

#include <cstddef>
#include <string>

namespace slgi {

enum class InteractionRange { NearestNeighbor, NextNearestNeighbor };
enum class Boundary { Open };

/// Isotropic Heisenberg chain of spin-1/2 sites in a longitudinal field:
///
///     H = J sum_i s_i . s_{i+1}  [+ J sum_i s_i . s_{i+2}]  - (h/2) sum_i s^z_i
///
/// with s the Pauli matrices (eigenvalues +-1). The next-nearest-neighbour
/// bonds use the same J and only exist when n_sites >= 3.
struct ChainSpec {
    std::size_t n_sites = 1;
    double coupling_j = 1.0;
    double field_h = 1.0;
    InteractionRange range = InteractionRange::NearestNeighbor;
    Boundary boundary = Boundary::Open;

    /// Throws ConfigError on n_sites == 0 or non-finite couplings.
    void validate() const;

    /// Chain of 2n-1 sites hosting parties at sites 1, n and 2n-1.
    static ChainSpec for_distance(std::size_t distance_n, double j, double h, InteractionRange range);

    bool operator==(const ChainSpec &) const = default;
};

std::string to_string(InteractionRange range);
/// Accepts "nn"/"nnn" (any case) as well as the long enum names.
InteractionRange parse_range(const std::string &text);

}  // namespace slgi
