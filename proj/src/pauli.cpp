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

#include "slgi/pauli.hpp"

#include <cmath>
#include <string>

#include "slgi/errors.hpp"

namespace slgi {

PauliAxis::PauliAxis(double x, double y, double z) {
    double n = std::sqrt(x * x + y * y + z * z);
    if (!std::isfinite(n) || n == 0) {
        throw ConfigError("measurement axis must be a finite non-zero vector");
    }
    v_ = {x / n, y / n, z / n};
}

PauliAxis PauliAxis::of(Axis a) {
    switch (a) {
        case Axis::X:
            return x();
        case Axis::Y:
            return y();
        case Axis::Z:
            return z();
    }
    return x();
}

namespace {

void check_site(std::size_t dim, std::size_t site) {
    if (site >= 64 || (std::size_t{1} << site) >= dim) {
        throw IndexError("site " + std::to_string(site) + " out of range");
    }
}

}  // namespace

// On each pair (a0, a1) = (bit 0, bit 1) of the addressed site:
//   a0' = vz a0 + (vx - i vy) a1
//   a1' = (vx + i vy) a0 - vz a1
void apply_pauli_inplace(std::span<Complex> amplitudes, std::size_t site, const PauliAxis &axis) {
    check_site(amplitudes.size(), site);
    const std::size_t mask = std::size_t{1} << site;
    const Complex lower(axis.vx(), -axis.vy());
    const Complex upper(axis.vx(), axis.vy());
    const double vz = axis.vz();
    for (std::size_t i = 0; i < amplitudes.size(); i++) {
        if (i & mask) {
            continue;
        }
        Complex a0 = amplitudes[i];
        Complex a1 = amplitudes[i | mask];
        amplitudes[i] = vz * a0 + lower * a1;
        amplitudes[i | mask] = upper * a0 - vz * a1;
    }
}

StateVector apply_pauli(const StateVector &state, std::size_t site, const PauliAxis &axis) {
    if (site >= state.n_sites()) {
        throw IndexError("site " + std::to_string(site) + " out of range for a chain of " +
                         std::to_string(state.n_sites()) + " sites");
    }
    Amplitudes a(state.amplitudes().begin(), state.amplitudes().end());
    apply_pauli_inplace(a, site, axis);
    return StateVector::from_amplitudes(std::move(a));
}

double pauli_expectation(const StateVector &state, std::size_t site, const PauliAxis &axis) {
    if (site >= state.n_sites()) {
        throw IndexError("site " + std::to_string(site) + " out of range");
    }
    Amplitudes a(state.amplitudes().begin(), state.amplitudes().end());
    apply_pauli_inplace(a, site, axis);
    return inner(state.amplitudes(), a).real();
}

void project_pauli_inplace(std::span<Complex> amplitudes, std::size_t site, const PauliAxis &axis, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw ConfigError("measurement outcome must be +1 or -1");
    }
    check_site(amplitudes.size(), site);
    const std::size_t mask = std::size_t{1} << site;
    const double q = outcome;
    const Complex lower(axis.vx(), -axis.vy());
    const Complex upper(axis.vx(), axis.vy());
    const double vz = axis.vz();
    for (std::size_t i = 0; i < amplitudes.size(); i++) {
        if (i & mask) {
            continue;
        }
        Complex a0 = amplitudes[i];
        Complex a1 = amplitudes[i | mask];
        amplitudes[i] = 0.5 * (a0 + q * (vz * a0 + lower * a1));
        amplitudes[i | mask] = 0.5 * (a1 + q * (upper * a0 - vz * a1));
    }
}

}  // namespace slgi
