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
#include <cstdint>

#include "slgi/correlator.hpp"

namespace slgi {

/// Outcome tables are indexed [first][second] with index 0 for outcome +1
/// and index 1 for outcome -1.
using JointCounts = std::array<std::array<std::uint64_t, 2>, 2>;
using JointProbabilities = std::array<std::array<double, 2>, 2>;

/// Branches below this probability are never sampled.
inline constexpr double kMinBranchProbability = 1e-14;

/// Exact joint distribution of two sequential projective measurements:
/// evolve to t_X, project with (1 + q v.sigma)/2, renormalize, evolve by
/// t_Y - t_X, project again.
JointProbabilities sequential_joint_distribution(const Propagator &prop, const StateVector &psi0,
                                                 const MeasurementEvent &first, const MeasurementEvent &second);

/// sum_{qX,qY} qX qY P(qX, qY).
double outcome_product_expectation(const JointProbabilities &p);

struct SampleResult {
    double estimate = 0;
    JointCounts joint_counts{};
    JointProbabilities exact_probabilities{};
    double exact_expectation = 0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

/// Finite-shot estimate of the sequential correlator. Each shot draws the
/// first outcome, then the second conditioned on it, from the exact
/// branch probabilities. Deterministic in `seed` (std::mt19937_64).
SampleResult sample_sequential(const Propagator &prop, const StateVector &psi0, const MeasurementEvent &first,
                               const MeasurementEvent &second, std::uint64_t shots, std::uint64_t seed);

}  // namespace slgi
