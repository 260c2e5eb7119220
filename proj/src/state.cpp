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

#include "slgi/state.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "slgi/errors.hpp"

namespace slgi {

std::size_t hilbert_dim(std::size_t n_sites) {
    if (n_sites > kMaxStateSites) {
        throw CapacityError("state of " + std::to_string(n_sites) + " sites needs dimension 2^" +
                            std::to_string(n_sites) + ", above the limit 2^" + std::to_string(kMaxStateSites));
    }
    return std::size_t{1} << n_sites;
}

double norm(std::span<const Complex> v) {
    double s = 0;
    for (const auto &a : v) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    Complex s = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

namespace {

std::size_t sites_for(std::size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw ConfigError("amplitude count " + std::to_string(dim) + " is not a power of two");
    }
    return static_cast<std::size_t>(std::countr_zero(dim));
}

}  // namespace

StateVector StateVector::from_amplitudes(Amplitudes amplitudes) {
    auto n = sites_for(amplitudes.size());
    double nrm = slgi::norm(amplitudes);
    if (std::abs(nrm - 1.0) > 1e-10) {
        throw ConfigError("state is not normalized (norm " + std::to_string(nrm) + ")");
    }
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::normalized(Amplitudes amplitudes) {
    auto n = sites_for(amplitudes.size());
    double nrm = slgi::norm(amplitudes);
    if (!(nrm > 0) || !std::isfinite(nrm)) {
        throw NumericalError("cannot normalize a zero or non-finite vector");
    }
    for (auto &a : amplitudes) {
        a /= nrm;
    }
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(std::size_t n_sites, std::uint64_t index) {
    Amplitudes a(hilbert_dim(n_sites));
    if (index >= a.size()) {
        throw IndexError("basis index " + std::to_string(index) + " out of range");
    }
    a[index] = 1.0;
    return StateVector(n_sites, std::move(a));
}

double StateVector::norm() const {
    return slgi::norm(amplitudes_);
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.dim() != dim()) {
        throw ConfigError("inner product of states with different dimensions");
    }
    return slgi::inner(amplitudes_, other.amplitudes_);
}

double StateVector::distance(const StateVector &other) const {
    if (other.dim() != dim()) {
        throw ConfigError("distance between states with different dimensions");
    }
    double s = 0;
    for (std::size_t i = 0; i < dim(); i++) {
        s += std::norm(amplitudes_[i] - other.amplitudes_[i]);
    }
    return std::sqrt(s);
}

StateVector make_plus_state(std::size_t n_sites) {
    if (n_sites == 0) {
        throw ConfigError("chain needs at least one site");
    }
    auto dim = hilbert_dim(n_sites);
    double amp = std::pow(2.0, -0.5 * static_cast<double>(n_sites));
    return StateVector::from_amplitudes(Amplitudes(dim, Complex(amp, 0)));
}

}  // namespace slgi
