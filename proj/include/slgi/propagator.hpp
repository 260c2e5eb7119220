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
#include <memory>
#include <span>
#include <string>

#include "slgi/hamiltonian.hpp"
#include "slgi/state.hpp"

namespace slgi {

enum class Engine { Auto, DenseSpectral, Krylov };
enum class Direction { Forward, Backward };

/// Auto resolves to DenseSpectral up to this many sites and to Krylov above.
inline constexpr std::size_t kAutoDenseMaxSites = 12;

std::string to_string(Engine engine);
Engine parse_engine(const std::string &text);

struct PropagatorOptions {
    Engine engine = Engine::Auto;
    std::size_t krylov_dim = 30;
    /// Bound on the accumulated Krylov truncation error of one evolve call.
    double krylov_tol = 1e-10;
    /// Largest Krylov step in units of h * dt (plain dt when h == 0).
    double max_substep = 0.5;
};

/// Time-evolution engine bound to one Hamiltonian. Immutable after
/// construction (a dense spectral decomposition is computed eagerly), so one
/// propagator can serve many threads.
class Propagator {
   public:
    Propagator(std::shared_ptr<const HamiltonianOp> hamiltonian, PropagatorOptions options = {});
    explicit Propagator(const ChainSpec &spec, PropagatorOptions options = {});

    const HamiltonianOp &hamiltonian() const noexcept {
        return *hamiltonian_;
    }
    std::shared_ptr<const HamiltonianOp> hamiltonian_ptr() const noexcept {
        return hamiltonian_;
    }
    Engine engine() const noexcept {
        return engine_;
    }
    const PropagatorOptions &options() const noexcept {
        return options_;
    }
    std::size_t n_sites() const noexcept {
        return hamiltonian_->n_sites();
    }

    /// exp(-iHt)|state> (Forward) or exp(+iHt)|state> (Backward), t = duration >= 0.
    StateVector evolve(const StateVector &state, double duration, Direction direction = Direction::Forward) const;

    /// Same on raw amplitudes. The input need not be normalized; the Krylov
    /// tolerance is then relative to its norm.
    void evolve_inplace(std::span<Complex> amplitudes, double duration, Direction direction = Direction::Forward) const;

   private:
    std::shared_ptr<const HamiltonianOp> hamiltonian_;
    PropagatorOptions options_;
    Engine engine_;
    std::shared_ptr<const SpectralDecomposition> spectral_;
};

/// Ground-truth exp(-iHt)|state> through the full eigendecomposition cached on
/// the Hamiltonian. CapacityError above kMaxDenseSites.
StateVector evolve_spectral_reference(const HamiltonianOp &hamiltonian, const StateVector &state, double duration);

namespace krylov {

struct StepReport {
    std::size_t iterations = 0;
    double error_estimate = 0;
};

/// One Lanczos step v <- exp(-i * phase_sign * H * dt) v with full
/// re-orthogonalization, stopping as soon as the a posteriori error estimate
/// drops below tol * ||v||. The caller handles substepping.
StepReport step(const HamiltonianOp &h, std::span<Complex> v, double dt, int phase_sign, std::size_t max_dim,
                double tol);

}  // namespace krylov

}  // namespace slgi
