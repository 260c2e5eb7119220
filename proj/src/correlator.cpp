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

#include "slgi/correlator.hpp"

#include <cmath>
#include <string>

#include "slgi/errors.hpp"

namespace slgi {

namespace {

void check_event(const MeasurementEvent &e, std::size_t n_sites) {
    if (e.site < 1 || e.site > n_sites) {
        throw IndexError("measurement site " + std::to_string(e.site) + " outside 1.." + std::to_string(n_sites));
    }
    if (!(e.time >= 0) || !std::isfinite(e.time)) {
        throw ConfigError("measurement time must be finite and non-negative");
    }
}

void check_chain(const Propagator &prop, const StateVector &psi0, std::size_t distance_n) {
    if (distance_n < 1) {
        throw ConfigError("party distance index n must be >= 1");
    }
    if (prop.n_sites() != 2 * distance_n - 1) {
        throw ConfigError("chain of " + std::to_string(prop.n_sites()) + " sites does not match distance n=" +
                          std::to_string(distance_n) + " (needs " + std::to_string(2 * distance_n - 1) + ")");
    }
    if (psi0.n_sites() != prop.n_sites()) {
        throw ConfigError("initial state and propagator have different chain lengths");
    }
}

Amplitudes copy(const StateVector &s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

Amplitudes kicked(Amplitudes a, std::size_t site0, const PauliAxis &axis) {
    apply_pauli_inplace(a, site0, axis);
    return a;
}

Amplitudes evolved(const Propagator &prop, Amplitudes a, double t) {
    prop.evolve_inplace(a, t);
    return a;
}

}  // namespace

double sequential_correlator(const Propagator &prop, const StateVector &psi0, const MeasurementEvent &first,
                             const MeasurementEvent &second) {
    if (psi0.n_sites() != prop.n_sites()) {
        throw ConfigError("initial state and propagator have different chain lengths");
    }
    check_event(first, prop.n_sites());
    check_event(second, prop.n_sites());
    if (first.time > second.time) {
        throw OrderingError("sequential correlator needs first.time <= second.time");
    }
    const double gap = second.time - first.time;
    Amplitudes at_first = evolved(prop, copy(psi0), first.time);
    Amplitudes u = evolved(prop, kicked(at_first, first.site - 1, first.axis), gap);
    Amplitudes v = kicked(evolved(prop, std::move(at_first), gap), second.site - 1, second.axis);
    return inner(u, v).real();
}

double k_correlator(const Propagator &prop, const StateVector &psi0, const LgiProtocol &protocol) {
    check_chain(prop, psi0, protocol.distance_n);
    if (!(protocol.base_time >= 0)) {
        throw ConfigError("protocol time must be non-negative");
    }
    const double t = protocol.base_time;
    const std::size_t a = 0, b = protocol.distance_n - 1, c = 2 * protocol.distance_n - 2;
    const auto &axis = protocol.axis;

    Amplitudes psi_t = evolved(prop, copy(psi0), t);
    Amplitudes psi_2t = evolved(prop, psi_t, t);
    Amplitudes u1 = evolved(prop, kicked(copy(psi0), a, axis), t);
    Amplitudes u3 = evolved(prop, u1, t);
    Amplitudes u2 = evolved(prop, kicked(psi_t, b, axis), t);
    Amplitudes v1 = kicked(psi_t, b, axis);
    Amplitudes v2 = kicked(psi_2t, c, axis);
    return inner(u1, v1).real() + inner(u2, v2).real() - inner(u3, v2).real();
}

KMatrix KMatrix::from_raw(const Matrix3 &raw) {
    KMatrix k;
    k.entries = raw;
    double s = 0;
    for (int p = 0; p < 3; p++) {
        for (int q = 0; q < 3; q++) {
            double d = 0.5 * (raw[p][q] - raw[q][p]);
            s += d * d;
        }
    }
    k.antisymmetric_residual = std::sqrt(s);
    return k;
}

KMatrix KMatrix::symmetrize() const {
    KMatrix k = *this;
    for (int p = 0; p < 3; p++) {
        for (int q = 0; q < 3; q++) {
            k.entries[p][q] = 0.5 * (entries[p][q] + entries[q][p]);
        }
    }
    k.symmetrized = true;
    return k;
}

double KMatrix::quadratic_form(const PauliAxis &v) const {
    const auto &c = v.components();
    double s = 0;
    for (int p = 0; p < 3; p++) {
        for (int q = 0; q < 3; q++) {
            s += c[p] * entries[p][q] * c[q];
        }
    }
    return s;
}

KMatrixEvaluator::KMatrixEvaluator(const Propagator &prop, const StateVector &psi0, std::size_t distance_n)
    : prop_(prop), psi0_(psi0), distance_n_(distance_n) {
    check_chain(prop, psi0, distance_n);
    for (int p = 0; p < 3; p++) {
        first_party_kicked_[p] = kicked(copy(psi0_), 0, PauliAxis::of(static_cast<Axis>(p)));
    }
}

KMatrix KMatrixEvaluator::at(double t) const {
    return raw_at(t).symmetrize();
}

KMatrix KMatrixEvaluator::raw_at(double t) const {
    if (!(t >= 0) || !std::isfinite(t)) {
        throw ConfigError("time must be finite and non-negative");
    }
    const std::size_t b = distance_n_ - 1, c = 2 * distance_n_ - 2;
    Amplitudes psi_t = evolved(prop_, copy(psi0_), t);
    Amplitudes psi_2t = evolved(prop_, psi_t, t);

    std::array<Amplitudes, 3> u1, u2, u3, v1, v2;
    for (int p = 0; p < 3; p++) {
        const auto axis = PauliAxis::of(static_cast<Axis>(p));
        u1[p] = evolved(prop_, first_party_kicked_[p], t);
        u3[p] = evolved(prop_, u1[p], t);
        u2[p] = evolved(prop_, kicked(psi_t, b, axis), t);
        v1[p] = kicked(psi_t, b, axis);
        v2[p] = kicked(psi_2t, c, axis);
    }
    Matrix3 raw{};
    for (int p = 0; p < 3; p++) {
        for (int q = 0; q < 3; q++) {
            raw[p][q] = inner(u1[p], v1[q]).real() + inner(u2[p], v2[q]).real() - inner(u3[p], v2[q]).real();
        }
    }
    return KMatrix::from_raw(raw);
}

KMatrix correlator_matrix(const Propagator &prop, const StateVector &psi0, std::size_t distance_n, double t) {
    return KMatrixEvaluator(prop, psi0, distance_n).at(t);
}

}  // namespace slgi
