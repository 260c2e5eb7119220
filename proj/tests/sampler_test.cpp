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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "slgi/correlator.hpp"
#include "slgi/errors.hpp"
#include "slgi/sampler.hpp"
#include "test_support.hpp"

using namespace slgi;

TEST(sampler, deterministic_outcome_at_equal_times) {
    Propagator p(ChainSpec{3, 1, 1});
    auto r = sample_sequential(p, make_plus_state(3), {1, PauliAxis::x(), 0}, {3, PauliAxis::x(), 0}, 1000, 1);
    EXPECT_EQ(r.joint_counts[0][0], 1000u);
    EXPECT_EQ(r.estimate, 1.0);
    EXPECT_NEAR(r.exact_expectation, 1.0, 1e-13);
}

TEST(sampler, single_spin_joint_distribution) {
    const double h = 1.0;
    Propagator p(ChainSpec{1, 0, h});
    auto psi = make_plus_state(1);
    for (double t : {0.3, 1.0, 2.2}) {
        auto probs = sequential_joint_distribution(p, psi, {1, PauliAxis::x(), 0}, {1, PauliAxis::x(), t});
        // First outcome is +1 with certainty; the second follows cos(ht).
        EXPECT_NEAR(probs[0][0], (1 + std::cos(h * t)) / 2, 1e-13);
        EXPECT_NEAR(probs[0][1], (1 - std::cos(h * t)) / 2, 1e-13);
        EXPECT_NEAR(probs[1][0] + probs[1][1], 0.0, 1e-13);
        EXPECT_NEAR(outcome_product_expectation(probs), std::cos(h * t), 1e-13);
        auto r = sample_sequential(p, psi, {1, PauliAxis::x(), 0}, {1, PauliAxis::x(), t}, 100000, 77);
        EXPECT_NEAR(r.estimate, std::cos(h * t), 0.02);
        EXPECT_EQ(r.joint_counts[1][0] + r.joint_counts[1][1], 0u);
    }
}

TEST(sampler, exact_expectation_matches_sequential_correlator) {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> time(0, 3);
    for (int trial = 0; trial < 20; trial++) {
        std::size_t n = 2 + trial % 4;
        auto range = trial % 2 ? InteractionRange::NextNearestNeighbor : InteractionRange::NearestNeighbor;
        Propagator p(ChainSpec{n, 1.0, 1.0, range});
        auto psi = trial % 3 ? oracle::random_state(n, rng) : make_plus_state(n);
        double t1 = time(rng), t2 = t1 + time(rng);
        MeasurementEvent a{1 + trial % n, oracle::random_axis(rng), t1};
        MeasurementEvent b{1 + (trial * 7) % n, oracle::random_axis(rng), t2};
        double exact = outcome_product_expectation(sequential_joint_distribution(p, psi, a, b));
        EXPECT_NEAR(exact, sequential_correlator(p, psi, a, b), 1e-10);
    }
}

TEST(sampler, same_seed_same_counts) {
    Propagator p(ChainSpec{3, 1, 1});
    MeasurementEvent a{1, PauliAxis::x(), 0}, b{2, PauliAxis::y(), 0.7};
    auto r1 = sample_sequential(p, make_plus_state(3), a, b, 5000, 9);
    auto r2 = sample_sequential(p, make_plus_state(3), a, b, 5000, 9);
    auto r3 = sample_sequential(p, make_plus_state(3), a, b, 5000, 10);
    EXPECT_EQ(r1.joint_counts, r2.joint_counts);
    EXPECT_EQ(r1.estimate, r2.estimate);
    EXPECT_NE(r1.joint_counts, r3.joint_counts);
    std::uint64_t total = 0;
    for (auto &row : r1.joint_counts) {
        for (auto c : row) {
            total += c;
        }
    }
    EXPECT_EQ(total, 5000u);
}

TEST(sampler, rejects_bad_arguments) {
    Propagator p(ChainSpec{2, 1, 1});
    auto psi = make_plus_state(2);
    EXPECT_THROW(sample_sequential(p, psi, {1, PauliAxis::x(), 1}, {2, PauliAxis::x(), 0}, 10, 1), OrderingError);
    EXPECT_THROW(sample_sequential(p, psi, {1, PauliAxis::x(), 0}, {2, PauliAxis::x(), 1}, 0, 1), ConfigError);
}

TEST(sampler, error_shrinks_with_more_shots) {
    Propagator p(ChainSpec{3, 1.0, 1.0});
    auto psi = make_plus_state(3);
    MeasurementEvent a{1, PauliAxis::x(), 0.2}, b{3, PauliAxis::x(), 1.1};
    double exact = sequential_correlator(p, psi, a, b);
    auto rms = [&](std::uint64_t shots) {
        double s = 0;
        const int reps = 200;
        for (int k = 0; k < reps; k++) {
            double e = sample_sequential(p, psi, a, b, shots, 1000 + k * 31 + shots).estimate - exact;
            s += e * e;
        }
        return std::sqrt(s / reps);
    };
    double ratio = rms(1000) / rms(10000);
    EXPECT_GE(ratio, 2.0);
    EXPECT_LE(ratio, 5.0);
}
