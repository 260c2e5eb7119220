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

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "slgi/chain.hpp"
#include "slgi/pauli.hpp"
#include "slgi/state.hpp"

namespace slgi::oracle {

// Reference constructions built from explicit Kronecker products, sharing no
// code with the library's bitwise appliers.

inline Eigen::Matrix2cd pauli_matrix(double vx, double vy, double vz) {
    const std::complex<double> i(0, 1);
    Eigen::Matrix2cd m;
    m << vz, vx - i * vy, vx + i * vy, -vz;
    return m;
}

inline Eigen::Matrix2cd pauli_matrix(const PauliAxis &a) {
    return pauli_matrix(a.vx(), a.vy(), a.vz());
}

/// op acting on `site` (0-based). Site N-1 is the leftmost tensor factor, so
/// bit i of the basis index is site i.
inline Eigen::MatrixXcd site_operator(std::size_t n_sites, std::size_t site, const Eigen::Matrix2cd &op) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t k = n_sites; k-- > 0;) {
        Eigen::MatrixXcd f = k == site ? Eigen::MatrixXcd(op) : Eigen::MatrixXcd::Identity(2, 2);
        Eigen::MatrixXcd next = Eigen::kroneckerProduct(m, f);
        m = next;
    }
    return m;
}

inline Eigen::MatrixXcd kron_hamiltonian(const ChainSpec &spec) {
    const std::size_t n = spec.n_sites;
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    const Eigen::Matrix2cd x = pauli_matrix(1, 0, 0), y = pauli_matrix(0, 1, 0), z = pauli_matrix(0, 0, 1);
    auto bond = [&](std::size_t a, std::size_t b) {
        h += spec.coupling_j * (site_operator(n, a, x) * site_operator(n, b, x) +
                                site_operator(n, a, y) * site_operator(n, b, y) +
                                site_operator(n, a, z) * site_operator(n, b, z));
    };
    for (std::size_t i = 0; i + 1 < n; i++) {
        bond(i, i + 1);
    }
    if (spec.range == InteractionRange::NextNearestNeighbor) {
        for (std::size_t i = 0; i + 2 < n; i++) {
            bond(i, i + 2);
        }
    }
    for (std::size_t i = 0; i < n; i++) {
        h -= 0.5 * spec.field_h * site_operator(n, i, z);
    }
    return h;
}

inline Eigen::MatrixXcd kron_propagator(const Eigen::MatrixXcd &h, double t) {
    Eigen::MatrixXcd a = std::complex<double>(0, -t) * h;
    return a.exp();
}

inline Eigen::VectorXcd to_eigen(const StateVector &s) {
    Eigen::VectorXcd v(s.dim());
    for (std::size_t k = 0; k < s.dim(); k++) {
        v[k] = s[k];
    }
    return v;
}

inline double max_abs_diff(const StateVector &s, const Eigen::VectorXcd &v) {
    double d = 0;
    for (std::size_t k = 0; k < s.dim(); k++) {
        d = std::max(d, std::abs(s[k] - v[k]));
    }
    return d;
}

inline StateVector random_state(std::size_t n_sites, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Amplitudes a(std::size_t{1} << n_sites);
    for (auto &c : a) {
        c = {g(rng), g(rng)};
    }
    return StateVector::normalized(std::move(a));
}

inline PauliAxis random_axis(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    return PauliAxis(g(rng), g(rng), g(rng));
}

/// Re <psi| Q_X(t_X) Q_Y(t_Y) |psi> in the Heisenberg picture, sites 0-based.
inline double kron_correlator(const Eigen::MatrixXcd &h, const Eigen::VectorXcd &psi, std::size_t n_sites,
                              std::size_t site_x, const PauliAxis &ax, double tx, std::size_t site_y,
                              const PauliAxis &ay, double ty) {
    Eigen::MatrixXcd ux = kron_propagator(h, tx), uy = kron_propagator(h, ty);
    Eigen::MatrixXcd qx = ux.adjoint() * site_operator(n_sites, site_x, pauli_matrix(ax)) * ux;
    Eigen::MatrixXcd qy = uy.adjoint() * site_operator(n_sites, site_y, pauli_matrix(ay)) * uy;
    return psi.dot(qx * qy * psi).real();
}

}  // namespace slgi::oracle
