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
#include <cstddef>
#include <span>

#include "slgi/state.hpp"

namespace slgi {

enum class Axis { X = 0, Y = 1, Z = 2 };

/// Unit measurement direction v; the measured observable is v . sigma.
class PauliAxis {
   public:
    /// Normalizes (x, y, z); throws ConfigError on a zero or non-finite vector.
    PauliAxis(double x, double y, double z);
    explicit PauliAxis(const std::array<double, 3> &v) : PauliAxis(v[0], v[1], v[2]) {}

    static PauliAxis x() {
        return {1, 0, 0};
    }
    static PauliAxis y() {
        return {0, 1, 0};
    }
    static PauliAxis z() {
        return {0, 0, 1};
    }
    static PauliAxis of(Axis a);

    double vx() const noexcept {
        return v_[0];
    }
    double vy() const noexcept {
        return v_[1];
    }
    double vz() const noexcept {
        return v_[2];
    }
    const std::array<double, 3> &components() const noexcept {
        return v_;
    }

    bool operator==(const PauliAxis &) const = default;

   private:
    std::array<double, 3> v_;
};

/// In-place (v . sigma_site) on raw amplitudes of an N-site chain; site is 0-based.
void apply_pauli_inplace(std::span<Complex> amplitudes, std::size_t site, const PauliAxis &axis);

/// (v . sigma_site)|state>, site 0-based. Throws IndexError when site >= n_sites.
StateVector apply_pauli(const StateVector &state, std::size_t site, const PauliAxis &axis);

/// <state| v . sigma_site |state>, site 0-based.
double pauli_expectation(const StateVector &state, std::size_t site, const PauliAxis &axis);

/// Projector (1 + q v.sigma_site)/2 applied in place, q = +1 or -1. Not renormalized.
void project_pauli_inplace(std::span<Complex> amplitudes, std::size_t site, const PauliAxis &axis, int outcome);

}  // namespace slgi
