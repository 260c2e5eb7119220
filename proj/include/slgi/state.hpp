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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace slgi {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

/// Largest chain for which a state vector may be allocated (2^28 amplitudes = 4 GiB).
inline constexpr std::size_t kMaxStateSites = 28;

/// Normalized state of an N-site chain in the computational z basis.
/// Bit i of a basis index is the state of site i (0-based); bit value 0 is
/// the +1 eigenstate of sigma^z.
class StateVector {
   public:
    /// Takes ownership of amplitudes that are already normalized to 1e-10.
    /// Throws ConfigError when the length is not a power of two or the norm is off.
    static StateVector from_amplitudes(Amplitudes amplitudes);
    /// Rescales to unit norm; throws NumericalError on a zero vector.
    static StateVector normalized(Amplitudes amplitudes);
    static StateVector basis(std::size_t n_sites, std::uint64_t index);

    std::size_t n_sites() const noexcept {
        return n_sites_;
    }
    std::size_t dim() const noexcept {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    const Complex &operator[](std::size_t i) const noexcept {
        return amplitudes_[i];
    }

    double norm() const;
    /// <this|other>
    Complex inner(const StateVector &other) const;
    /// Euclidean distance ||this - other||.
    double distance(const StateVector &other) const;

   private:
    StateVector(std::size_t n_sites, Amplitudes amplitudes) : n_sites_(n_sites), amplitudes_(std::move(amplitudes)) {}

    std::size_t n_sites_;
    Amplitudes amplitudes_;
};

/// 2^n_sites, or CapacityError naming the requested dimension.
std::size_t hilbert_dim(std::size_t n_sites);

/// |+>^{(x) N}: every amplitude equals 2^{-N/2}.
StateVector make_plus_state(std::size_t n_sites);

double norm(std::span<const Complex> v);
Complex inner(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace slgi
