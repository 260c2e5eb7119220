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
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "slgi/chain.hpp"
#include "slgi/state.hpp"

namespace slgi {

/// Dense realizations are limited to chains of at most this many sites.
inline constexpr std::size_t kMaxDenseSites = 13;

class SpectralDecomposition;

/// Matrix-free Heisenberg Hamiltonian. Every bond s_i . s_j acts on a basis
/// state as a diagonal +-J (parallel/antiparallel spins) plus, for
/// antiparallel spins, a 2J exchange to the state with both bits flipped.
/// The field contributes the diagonal -(h/2) sum_i s^z_i.
///
/// H is real symmetric and commutes with the total magnetization, so every
/// dense path works sector by sector.
class HamiltonianOp {
   public:
    explicit HamiltonianOp(const ChainSpec &spec);

    const ChainSpec &spec() const noexcept {
        return spec_;
    }
    std::size_t n_sites() const noexcept {
        return spec_.n_sites;
    }
    std::size_t dim() const noexcept {
        return diagonal_.size();
    }
    /// Bonds as 0-based site pairs (i, j), i < j.
    const std::vector<std::pair<std::size_t, std::size_t>> &bonds() const noexcept {
        return bonds_;
    }

    /// out = H in. Both spans have length dim() and must not alias.
    void apply(std::span<const Complex> in, std::span<Complex> out) const;
    Amplitudes apply(std::span<const Complex> in) const;

    /// <psi|H|psi>.
    double expectation(const StateVector &psi) const;

    /// Upper bound on the spectral radius (sum of absolute term weights).
    double norm_bound() const noexcept {
        return norm_bound_;
    }

    /// Full 2^N x 2^N matrix; CapacityError above kMaxDenseSites.
    Eigen::MatrixXcd dense_matrix() const;

    /// Real symmetric block of H restricted to basis states with the given
    /// number of up (bit 1) spins, indexed in the order of sector_states().
    Eigen::MatrixXd sector_matrix(std::size_t n_up) const;
    std::vector<std::uint64_t> sector_states(std::size_t n_up) const;

    /// Eigendecomposition of H, computed on first use and shared afterwards.
    /// Thread safe. CapacityError above kMaxDenseSites.
    std::shared_ptr<const SpectralDecomposition> spectral() const;

   private:
    ChainSpec spec_;
    std::vector<std::pair<std::size_t, std::size_t>> bonds_;
    std::vector<double> diagonal_;
    double norm_bound_ = 0;

    mutable std::once_flag spectral_once_;
    mutable std::shared_ptr<const SpectralDecomposition> spectral_;
};

/// Eigendecomposition H = sum_s V_s diag(lambda_s) V_s^T over magnetization sectors s.
class SpectralDecomposition {
   public:
    struct Sector {
        std::vector<std::uint64_t> states;
        Eigen::VectorXd eigenvalues;
        Eigen::MatrixXd eigenvectors;
    };

    explicit SpectralDecomposition(const HamiltonianOp &h);

    const std::vector<Sector> &sectors() const noexcept {
        return sectors_;
    }
    std::size_t dim() const noexcept {
        return dim_;
    }

    /// out = exp(-i * phase_sign * H * t) in; phase_sign is +1 or -1.
    void evolve(std::span<const Complex> in, std::span<Complex> out, double t, int phase_sign) const;

    /// All eigenvalues in ascending order.
    std::vector<double> eigenvalues() const;

    /// max over sectors of ||H_s - V_s Lambda_s V_s^T||_F / ||H_s||_F.
    double reconstruction_error(const HamiltonianOp &h) const;

   private:
    std::vector<Sector> sectors_;
    std::size_t dim_;
};

}  // namespace slgi
