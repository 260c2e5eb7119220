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

#include "slgi/propagator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "slgi/errors.hpp"

namespace slgi {

std::string to_string(Engine engine) {
    switch (engine) {
        case Engine::Auto:
            return "auto";
        case Engine::DenseSpectral:
            return "dense";
        case Engine::Krylov:
            return "krylov";
    }
    return "auto";
}

Engine parse_engine(const std::string &text) {
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "auto") {
        return Engine::Auto;
    }
    if (t == "dense" || t == "densespectral" || t == "spectral") {
        return Engine::DenseSpectral;
    }
    if (t == "krylov" || t == "lanczos") {
        return Engine::Krylov;
    }
    throw ConfigError("unknown engine '" + text + "' (expected auto, dense or krylov)");
}

namespace krylov {

namespace {

void axpy(Complex a, std::span<const Complex> x, std::span<Complex> y) {
    for (std::size_t i = 0; i < y.size(); i++) {
        y[i] += a * x[i];
    }
}

}  // namespace

StepReport step(const HamiltonianOp &h, std::span<Complex> v, double dt, int phase_sign, std::size_t max_dim,
                double tol) {
    const std::size_t dim = v.size();
    const double beta0 = norm(v);
    StepReport report;
    if (beta0 == 0 || dt == 0) {
        return report;
    }
    max_dim = std::max<std::size_t>(1, std::min(max_dim, dim));

    std::vector<Amplitudes> basis;
    basis.reserve(max_dim);
    basis.emplace_back(v.begin(), v.end());
    for (auto &a : basis.back()) {
        a /= beta0;
    }
    std::vector<double> alpha, beta;
    Amplitudes w(dim);
    Eigen::VectorXcd coeffs;

    for (std::size_t j = 0; j < max_dim; j++) {
        h.apply(basis[j], w);
        alpha.push_back(inner(basis[j], w).real());
        axpy(-alpha[j], basis[j], w);
        if (j > 0) {
            axpy(-beta[j - 1], basis[j - 1], w);
        }
        // Two passes of classical Gram-Schmidt against the whole basis.
        for (int pass = 0; pass < 2; pass++) {
            for (std::size_t i = 0; i <= j; i++) {
                axpy(-inner(basis[i], w), basis[i], w);
            }
        }
        const double b = norm(w);

        const auto m = static_cast<Eigen::Index>(j + 1);
        Eigen::VectorXd diag(m), sub(std::max<Eigen::Index>(m - 1, 0));
        for (Eigen::Index k = 0; k < m; k++) {
            diag(k) = alpha[static_cast<std::size_t>(k)];
        }
        for (Eigen::Index k = 0; k + 1 < m; k++) {
            sub(k) = beta[static_cast<std::size_t>(k)];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        const Eigen::MatrixXd &q = tri.eigenvectors();
        Eigen::VectorXcd phases(m);
        for (Eigen::Index k = 0; k < m; k++) {
            phases(k) = std::polar(1.0, -phase_sign * tri.eigenvalues()(k) * dt) * q(0, k);
        }
        coeffs = q.cast<Complex>() * phases;

        const bool breakdown = b <= 1e-13 * std::max(1.0, h.norm_bound());
        report.iterations = j + 1;
        report.error_estimate = breakdown ? 0.0 : b * std::abs(coeffs(m - 1));
        if (breakdown || report.error_estimate <= tol) {
            break;
        }
        if (j + 1 == max_dim) {
            return report;
        }
        beta.push_back(b);
        basis.emplace_back(w.begin(), w.end());
        for (auto &a : basis.back()) {
            a /= b;
        }
    }

    std::fill(v.begin(), v.end(), Complex(0));
    for (std::size_t k = 0; k < report.iterations; k++) {
        axpy(beta0 * coeffs(static_cast<Eigen::Index>(k)), basis[k], v);
    }
    return report;
}

}  // namespace krylov

Propagator::Propagator(std::shared_ptr<const HamiltonianOp> hamiltonian, PropagatorOptions options)
    : hamiltonian_(std::move(hamiltonian)), options_(options) {
    if (!hamiltonian_) {
        throw ConfigError("propagator needs a Hamiltonian");
    }
    if (options_.krylov_dim == 0 || !(options_.krylov_tol > 0) || !(options_.max_substep > 0)) {
        throw ConfigError("Krylov options must be positive");
    }
    engine_ = options_.engine;
    if (engine_ == Engine::Auto) {
        engine_ = hamiltonian_->n_sites() <= kAutoDenseMaxSites ? Engine::DenseSpectral : Engine::Krylov;
    }
    if (engine_ == Engine::DenseSpectral) {
        spectral_ = hamiltonian_->spectral();
    }
}

Propagator::Propagator(const ChainSpec &spec, PropagatorOptions options)
    : Propagator(std::make_shared<const HamiltonianOp>(spec), options) {}

void Propagator::evolve_inplace(std::span<Complex> amplitudes, double duration, Direction direction) const {
    if (!(duration >= 0) || !std::isfinite(duration)) {
        throw ConfigError("evolution duration must be finite and non-negative");
    }
    if (amplitudes.size() != hamiltonian_->dim()) {
        throw ConfigError("state dimension does not match the Hamiltonian");
    }
    if (duration == 0) {
        return;
    }
    const int sign = direction == Direction::Forward ? 1 : -1;

    if (engine_ == Engine::DenseSpectral) {
        Amplitudes in(amplitudes.begin(), amplitudes.end());
        spectral_->evolve(in, amplitudes, duration, sign);
        return;
    }

    const double h = std::abs(hamiltonian_->spec().field_h);
    const double max_dt = h > 0 ? options_.max_substep / h : options_.max_substep;
    const auto n_steps = static_cast<std::size_t>(std::ceil(duration / max_dt - 1e-12));
    const double nominal = duration / static_cast<double>(std::max<std::size_t>(n_steps, 1));
    const double scale = norm(amplitudes);

    double done = 0;
    double dt = nominal;
    while (done < duration) {
        double this_dt = std::min(dt, duration - done);
        // Last step absorbs round-off so the total is exact.
        if (duration - done - this_dt < 1e-12 * duration) {
            this_dt = duration - done;
        }
        const double budget = options_.krylov_tol * scale * this_dt / duration;
        auto report = krylov::step(*hamiltonian_, amplitudes, this_dt, sign, options_.krylov_dim, budget);
        if (report.error_estimate > budget) {
            dt = this_dt / 2;
            if (dt < duration * 1e-10) {
                throw ConvergenceError("Krylov evolution did not converge within dimension " +
                                           std::to_string(options_.krylov_dim) + " (residual " +
                                           std::to_string(report.error_estimate) + ")",
                                       report.error_estimate);
            }
            continue;
        }
        done += this_dt;
    }
}

StateVector Propagator::evolve(const StateVector &state, double duration, Direction direction) const {
    Amplitudes a(state.amplitudes().begin(), state.amplitudes().end());
    evolve_inplace(a, duration, direction);
    double nrm = norm(a);
    if (std::abs(nrm - 1.0) > 1e-10) {
        throw NumericalError("evolution lost unitarity (norm " + std::to_string(nrm) + ")");
    }
    return StateVector::from_amplitudes(std::move(a));
}

StateVector evolve_spectral_reference(const HamiltonianOp &hamiltonian, const StateVector &state, double duration) {
    if (!(duration >= 0)) {
        throw ConfigError("evolution duration must be non-negative");
    }
    if (state.dim() != hamiltonian.dim()) {
        throw ConfigError("state dimension does not match the Hamiltonian");
    }
    auto spectral = hamiltonian.spectral();
    Amplitudes out(state.dim());
    spectral->evolve(state.amplitudes(), out, duration, 1);
    return StateVector::from_amplitudes(std::move(out));
}

}  // namespace slgi
