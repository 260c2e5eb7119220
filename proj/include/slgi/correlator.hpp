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

#include "slgi/pauli.hpp"
#include "slgi/propagator.hpp"
#include "slgi/state.hpp"

namespace slgi {

/// One projective measurement of v . sigma at a chain site.
/// `site` is 1-based (1..N); `time` is the physical time t >= 0 (hbar = 1).
struct MeasurementEvent {
    std::size_t site;
    PauliAxis axis;
    double time;
};

/// Re <psi0| Q_X(t_X) Q_Y(t_Y) |psi0> with Q(t) = exp(iHt) Q exp(-iHt),
/// evaluated with forward evolution only:
///   u = exp(-iH(t_Y - t_X)) Q_X exp(-iH t_X) psi0,  v = Q_Y exp(-iH t_Y) psi0.
/// Throws OrderingError when first.time > second.time.
double sequential_correlator(const Propagator &prop, const StateVector &psi0, const MeasurementEvent &first,
                             const MeasurementEvent &second);

/// Symmetric spatial protocol: parties at sites 1, n, 2n-1 measuring the
/// same axis at times 0, t, 2t on a chain of 2n-1 sites.
struct LgiProtocol {
    std::size_t distance_n;
    double base_time;
    PauliAxis axis = PauliAxis::x();

    std::size_t chain_length() const noexcept {
        return 2 * distance_n - 1;
    }
    MeasurementEvent party_a() const {
        return {1, axis, 0.0};
    }
    MeasurementEvent party_b() const {
        return {distance_n, axis, base_time};
    }
    MeasurementEvent party_c() const {
        return {2 * distance_n - 1, axis, 2 * base_time};
    }
};

/// K_n = C_{1,n} + C_{n,2n-1} - C_{1,2n-1}. ConfigError when the propagator's
/// chain length differs from 2n-1.
double k_correlator(const Propagator &prop, const StateVector &psi0, const LgiProtocol &protocol);

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// 3x3 matrix over axes {x, y, z} whose quadratic form v^T K v is K_n for the
/// shared measurement axis v.
struct KMatrix {
    Matrix3 entries{};
    bool symmetrized = false;
    /// Frobenius norm of the antisymmetric part (K - K^T)/2 of the raw matrix.
    double antisymmetric_residual = 0;

    static KMatrix from_raw(const Matrix3 &raw);
    KMatrix symmetrize() const;
    double quadratic_form(const PauliAxis &v) const;
};

/// Evaluates the K matrix of one chain at many times, keeping the
/// time-independent states s_1^p |psi0> across calls. Thread safe.
class KMatrixEvaluator {
   public:
    KMatrixEvaluator(const Propagator &prop, const StateVector &psi0, std::size_t distance_n);

    /// Symmetrized matrix at time t.
    KMatrix at(double t) const;
    /// Unsymmetrized entries (antisymmetric_residual filled in).
    KMatrix raw_at(double t) const;

   private:
    const Propagator &prop_;
    StateVector psi0_;
    std::size_t distance_n_;
    std::array<Amplitudes, 3> first_party_kicked_;
};

/// Raw entries K[p][q] = Re <psi0| s_1^p(0) s_n^q(t) + s_n^p(t) s_{2n-1}^q(2t)
/// - s_1^p(0) s_{2n-1}^q(2t) |psi0>, returned symmetrized. Eleven evolutions
/// by t per call.
KMatrix correlator_matrix(const Propagator &prop, const StateVector &psi0, std::size_t distance_n, double t);

}  // namespace slgi
