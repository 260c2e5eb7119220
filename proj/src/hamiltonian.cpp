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

#include "slgi/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "slgi/errors.hpp"

namespace slgi {

HamiltonianOp::HamiltonianOp(const ChainSpec &spec) : spec_(spec) {
    spec_.validate();
    const std::size_t n = spec_.n_sites;
    const std::size_t dim = hilbert_dim(n);

    for (std::size_t i = 0; i + 1 < n; i++) {
        bonds_.emplace_back(i, i + 1);
    }
    if (spec_.range == InteractionRange::NextNearestNeighbor) {
        for (std::size_t i = 0; i + 2 < n; i++) {
            bonds_.emplace_back(i, i + 2);
        }
    }

    const double j = spec_.coupling_j;
    const double half_h = 0.5 * spec_.field_h;
    diagonal_.assign(dim, 0.0);
    for (std::size_t s = 0; s < dim; s++) {
        double d = 0;
        for (auto [a, b] : bonds_) {
            bool same = ((s >> a) & 1) == ((s >> b) & 1);
            d += same ? j : -j;
        }
        // sigma^z = +1 on bit 0.
        auto ups = static_cast<double>(std::popcount(s));
        d -= half_h * (static_cast<double>(n) - 2 * ups);
        diagonal_[s] = d;
    }
    norm_bound_ = 3 * std::abs(j) * static_cast<double>(bonds_.size()) + std::abs(half_h) * static_cast<double>(n);
}

void HamiltonianOp::apply(std::span<const Complex> in, std::span<Complex> out) const {
    const std::size_t dim = diagonal_.size();
    if (in.size() != dim || out.size() != dim) {
        throw ConfigError("Hamiltonian applied to a vector of the wrong dimension");
    }
    for (std::size_t s = 0; s < dim; s++) {
        out[s] = diagonal_[s] * in[s];
    }
    const double exchange = 2 * spec_.coupling_j;
    if (exchange == 0) {
        return;
    }
    for (auto [a, b] : bonds_) {
        const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
        for (std::size_t s = 0; s < dim; s++) {
            if (((s >> a) ^ (s >> b)) & 1) {
                out[s] += exchange * in[s ^ mask];
            }
        }
    }
}

Amplitudes HamiltonianOp::apply(std::span<const Complex> in) const {
    Amplitudes out(in.size());
    apply(in, out);
    return out;
}

double HamiltonianOp::expectation(const StateVector &psi) const {
    auto h_psi = apply(psi.amplitudes());
    return inner(psi.amplitudes(), h_psi).real();
}

namespace {

void check_dense(std::size_t n_sites) {
    if (n_sites > kMaxDenseSites) {
        throw CapacityError("dense realization requested for " + std::to_string(n_sites) +
                            " sites (dimension 2^" + std::to_string(n_sites) + "); the limit is " +
                            std::to_string(kMaxDenseSites) + " sites");
    }
}

}  // namespace

Eigen::MatrixXcd HamiltonianOp::dense_matrix() const {
    check_dense(n_sites());
    const auto dim = static_cast<Eigen::Index>(this->dim());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    const double exchange = 2 * spec_.coupling_j;
    for (Eigen::Index s = 0; s < dim; s++) {
        m(s, s) = diagonal_[static_cast<std::size_t>(s)];
        for (auto [a, b] : bonds_) {
            auto u = static_cast<std::size_t>(s);
            if (((u >> a) ^ (u >> b)) & 1) {
                const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
                m(static_cast<Eigen::Index>(u ^ mask), s) += exchange;
            }
        }
    }
    return m;
}

std::vector<std::uint64_t> HamiltonianOp::sector_states(std::size_t n_up) const {
    std::vector<std::uint64_t> states;
    for (std::uint64_t s = 0; s < dim(); s++) {
        if (static_cast<std::size_t>(std::popcount(s)) == n_up) {
            states.push_back(s);
        }
    }
    return states;
}

Eigen::MatrixXd HamiltonianOp::sector_matrix(std::size_t n_up) const {
    check_dense(n_sites());
    auto states = sector_states(n_up);
    std::vector<std::int64_t> index(dim(), -1);
    for (std::size_t k = 0; k < states.size(); k++) {
        index[states[k]] = static_cast<std::int64_t>(k);
    }
    const auto d = static_cast<Eigen::Index>(states.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    const double exchange = 2 * spec_.coupling_j;
    for (Eigen::Index k = 0; k < d; k++) {
        auto s = states[static_cast<std::size_t>(k)];
        m(k, k) = diagonal_[s];
        for (auto [a, b] : bonds_) {
            if (((s >> a) ^ (s >> b)) & 1) {
                const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
                m(index[s ^ mask], k) += exchange;
            }
        }
    }
    return m;
}

std::shared_ptr<const SpectralDecomposition> HamiltonianOp::spectral() const {
    check_dense(n_sites());
    std::call_once(spectral_once_, [this] { spectral_ = std::make_shared<const SpectralDecomposition>(*this); });
    return spectral_;
}

SpectralDecomposition::SpectralDecomposition(const HamiltonianOp &h) : dim_(h.dim()) {
    for (std::size_t n_up = 0; n_up <= h.n_sites(); n_up++) {
        Sector sector;
        sector.states = h.sector_states(n_up);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.sector_matrix(n_up));
        if (solver.info() != Eigen::Success) {
            throw NumericalError("eigendecomposition failed in magnetization sector " + std::to_string(n_up));
        }
        sector.eigenvalues = solver.eigenvalues();
        sector.eigenvectors = solver.eigenvectors();
        sectors_.push_back(std::move(sector));
    }
}

void SpectralDecomposition::evolve(std::span<const Complex> in, std::span<Complex> out, double t,
                                   int phase_sign) const {
    if (in.size() != dim_ || out.size() != dim_) {
        throw ConfigError("spectral evolution of a vector of the wrong dimension");
    }
    for (const auto &sector : sectors_) {
        const auto d = static_cast<Eigen::Index>(sector.states.size());
        Eigen::VectorXd re(d), im(d);
        for (Eigen::Index k = 0; k < d; k++) {
            const Complex &a = in[sector.states[static_cast<std::size_t>(k)]];
            re(k) = a.real();
            im(k) = a.imag();
        }
        Eigen::VectorXd cr = sector.eigenvectors.transpose() * re;
        Eigen::VectorXd ci = sector.eigenvectors.transpose() * im;
        for (Eigen::Index k = 0; k < d; k++) {
            const double theta = -phase_sign * sector.eigenvalues(k) * t;
            const double c = std::cos(theta), s = std::sin(theta);
            const double r = cr(k), i = ci(k);
            cr(k) = c * r - s * i;
            ci(k) = s * r + c * i;
        }
        re.noalias() = sector.eigenvectors * cr;
        im.noalias() = sector.eigenvectors * ci;
        for (Eigen::Index k = 0; k < d; k++) {
            out[sector.states[static_cast<std::size_t>(k)]] = Complex(re(k), im(k));
        }
    }
}

std::vector<double> SpectralDecomposition::eigenvalues() const {
    std::vector<double> all;
    all.reserve(dim_);
    for (const auto &sector : sectors_) {
        all.insert(all.end(), sector.eigenvalues.begin(), sector.eigenvalues.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

double SpectralDecomposition::reconstruction_error(const HamiltonianOp &h) const {
    double worst = 0;
    for (std::size_t n_up = 0; n_up < sectors_.size(); n_up++) {
        const auto &sector = sectors_[n_up];
        Eigen::MatrixXd m = h.sector_matrix(n_up);
        Eigen::MatrixXd rebuilt =
            sector.eigenvectors * sector.eigenvalues.asDiagonal() * sector.eigenvectors.transpose();
        double scale = std::max(m.norm(), 1.0);
        worst = std::max(worst, (m - rebuilt).norm() / scale);
    }
    return worst;
}

}  // namespace slgi
