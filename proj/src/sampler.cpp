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

#include "slgi/sampler.hpp"

#include <cmath>
#include <random>
#include <string>

#include "slgi/errors.hpp"

namespace slgi {

namespace {

void check_events(const Propagator &prop, const StateVector &psi0, const MeasurementEvent &first,
                  const MeasurementEvent &second) {
    const std::size_t n = prop.n_sites();
    if (psi0.n_sites() != n) {
        throw ConfigError("initial state and propagator have different chain lengths");
    }
    for (const auto *e : {&first, &second}) {
        if (e->site < 1 || e->site > n) {
            throw IndexError("measurement site " + std::to_string(e->site) + " outside 1.." + std::to_string(n));
        }
        if (!(e->time >= 0) || !std::isfinite(e->time)) {
            throw ConfigError("measurement time must be finite and non-negative");
        }
    }
    if (first.time > second.time) {
        throw OrderingError("sequential measurement needs first.time <= second.time");
    }
}

double squared_norm(std::span<const Complex> v) {
    double s = 0;
    for (const auto &a : v) {
        s += std::norm(a);
    }
    return s;
}

// Uniform double in [0, 1) from the top 53 bits.
double uniform(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

JointProbabilities sequential_joint_distribution(const Propagator &prop, const StateVector &psi0,
                                                 const MeasurementEvent &first, const MeasurementEvent &second) {
    check_events(prop, psi0, first, second);
    Amplitudes at_first(psi0.amplitudes().begin(), psi0.amplitudes().end());
    prop.evolve_inplace(at_first, first.time);

    JointProbabilities p{};
    const int outcomes[2] = {1, -1};
    for (int i = 0; i < 2; i++) {
        Amplitudes branch = at_first;
        project_pauli_inplace(branch, first.site - 1, first.axis, outcomes[i]);
        const double p_first = squared_norm(branch);
        if (p_first < kMinBranchProbability) {
            continue;
        }
        const double scale = 1 / std::sqrt(p_first);
        for (auto &a : branch) {
            a *= scale;
        }
        prop.evolve_inplace(branch, second.time - first.time);
        for (int j = 0; j < 2; j++) {
            Amplitudes after = branch;
            project_pauli_inplace(after, second.site - 1, second.axis, outcomes[j]);
            p[i][j] = p_first * squared_norm(after);
        }
    }
    return p;
}

double outcome_product_expectation(const JointProbabilities &p) {
    return p[0][0] - p[0][1] - p[1][0] + p[1][1];
}

SampleResult sample_sequential(const Propagator &prop, const StateVector &psi0, const MeasurementEvent &first,
                               const MeasurementEvent &second, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw ConfigError("shots must be >= 1");
    }
    SampleResult r;
    r.shots = shots;
    r.seed = seed;
    r.exact_probabilities = sequential_joint_distribution(prop, psi0, first, second);
    r.exact_expectation = outcome_product_expectation(r.exact_probabilities);

    const auto &p = r.exact_probabilities;
    const double row[2] = {p[0][0] + p[0][1], p[1][0] + p[1][1]};
    const double total = row[0] + row[1];

    std::mt19937_64 rng(seed);
    for (std::uint64_t shot = 0; shot < shots; shot++) {
        const int i = uniform(rng) * total < row[0] ? 0 : 1;
        if (row[i] < kMinBranchProbability) {
            throw DegeneracyError("sampler selected a first outcome of probability " + std::to_string(row[i]));
        }
        const int j = uniform(rng) * row[i] < p[i][0] ? 0 : 1;
        if (p[i][j] < kMinBranchProbability) {
            throw DegeneracyError("sampler selected a second outcome of probability " + std::to_string(p[i][j]));
        }
        r.joint_counts[i][j]++;
    }
    const auto &c = r.joint_counts;
    const double signed_sum = static_cast<double>(c[0][0]) + static_cast<double>(c[1][1]) -
                              static_cast<double>(c[0][1]) - static_cast<double>(c[1][0]);
    r.estimate = signed_sum / static_cast<double>(shots);
    return r;
}

}  // namespace slgi
