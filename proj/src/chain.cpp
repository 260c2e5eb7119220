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

#include "slgi/chain.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "slgi/errors.hpp"

namespace slgi {

void ChainSpec::validate() const {
    if (n_sites == 0) {
        throw ConfigError("chain needs at least one site");
    }
    if (!std::isfinite(coupling_j) || !std::isfinite(field_h)) {
        throw ConfigError("couplings must be finite");
    }
}

ChainSpec ChainSpec::for_distance(std::size_t distance_n, double j, double h, InteractionRange range) {
    if (distance_n == 0) {
        throw ConfigError("party distance index n must be >= 1");
    }
    ChainSpec spec{2 * distance_n - 1, j, h, range, Boundary::Open};
    spec.validate();
    return spec;
}

std::string to_string(InteractionRange range) {
    return range == InteractionRange::NearestNeighbor ? "nn" : "nnn";
}

InteractionRange parse_range(const std::string &text) {
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "nn" || t == "nearestneighbor") {
        return InteractionRange::NearestNeighbor;
    }
    if (t == "nnn" || t == "nextnearestneighbor") {
        return InteractionRange::NextNearestNeighbor;
    }
    throw ConfigError("unknown interaction range '" + text + "' (expected nn or nnn)");
}

}  // namespace slgi
