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
#include <numbers>

#include <gtest/gtest.h>

#include "slgi/errors.hpp"
#include "slgi/oracles.hpp"
#include "slgi/scan.hpp"

using namespace slgi;

namespace {

ScanConfig base_config(std::vector<std::size_t> distances, double stop, double step) {
    ScanConfig c;
    c.distances = std::move(distances);
    c.grid = {0.0, stop, step};
    return c;
}

}  // namespace

TEST(scan, grid_points_include_endpoint) {
    TimeGrid g{0, 1.8, 0.01};
    auto p = g.points();
    ASSERT_EQ(p.size(), 181u);
    EXPECT_NEAR(p.back(), 1.8, 1e-12);
    EXPECT_EQ(TimeGrid({0.5, 0.5, 0.1}).points().size(), 1u);
    EXPECT_THROW(TimeGrid({0, 1, 0}).validate(), ConfigError);
    EXPECT_THROW(TimeGrid({1, 0, 0.1}).validate(), ConfigError);
    EXPECT_THROW(TimeGrid({-1, 0, 0.1}).validate(), ConfigError);
}

TEST(scan, time_unit_follows_field) {
    EXPECT_EQ((ModelTemplate{1, 2, InteractionRange::NearestNeighbor}.time_unit()), 0.5);
    EXPECT_EQ((ModelTemplate{1, -4, InteractionRange::NearestNeighbor}.time_unit()), 0.25);
    EXPECT_EQ((ModelTemplate{1, 0, InteractionRange::NearestNeighbor}.time_unit()), 1.0);
}

TEST(scan, validation_aggregates_problems) {
    ScanConfig c = base_config({}, 1, -0.1);
    c.violation_threshold = 0.9;
    try {
        c.validate();
        FAIL() << "expected ConfigError";
    } catch (const ConfigError &e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("no distances"), std::string::npos) << msg;
        EXPECT_NE(msg.find("step"), std::string::npos) << msg;
        EXPECT_NE(msg.find("threshold"), std::string::npos) << msg;
    }
}

TEST(scan, capacity_error_lists_offending_distances) {
    ScanConfig c = base_config({2, 7, 8, 9}, 1, 0.1);
    try {
        c.validate();
        FAIL() << "expected CapacityError";
    } catch (const CapacityError &e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("8, 9"), std::string::npos) << msg;
        EXPECT_EQ(msg.find("7"), std::string::npos) << msg;
    }
}

TEST(scan, noninteracting_series_match_closed_form) {
    ScanConfig c = base_config({2, 3}, 2 * std::numbers::pi, 0.05);
    c.model.coupling_j = 0.0;
    auto r = sweep(c);
    for (const auto &s : r.series) {
        for (const auto &p : s.points) {
            EXPECT_NEAR(p.k_fixed, noninteracting_k(p.ht), 1e-10);
            EXPECT_LE(p.k_opt, 1.0 + 1e-8);
        }
        EXPECT_FALSE(s.tau.has_value());
    }
    const auto &a = r.for_distance(2).points;
    const auto &b = r.for_distance(3).points;
    for (std::size_t i = 0; i < a.size(); i++) {
        EXPECT_NEAR(a[i].k_fixed, b[i].k_fixed, 1e-10);
    }
}

TEST(scan, interacting_chain_violates) {
    ScanConfig c = base_config({2}, 3.0, 0.02);
    c.optimize = false;
    auto r = sweep(c);
    EXPECT_GT(r.series[0].max_k_fixed, 1.0);
    EXPECT_TRUE(r.series[0].tau.has_value());
    EXPECT_TRUE(std::isnan(r.series[0].points[3].k_opt));
}

TEST(scan, single_site_series_is_single_spin_k) {
    ScanConfig c = base_config({1}, 2 * std::numbers::pi, 0.01);
    c.model.coupling_j = 3.0;
    c.model.field_h = 2.0;
    auto r = sweep(c);
    for (const auto &p : r.series[0].points) {
        EXPECT_NEAR(p.k_fixed, single_spin_k(p.ht), 1e-10);
    }
    EXPECT_NEAR(r.series[0].max_k_fixed, 1.5, 1e-4);
    EXPECT_NEAR(r.series[0].ht_at_max, std::numbers::pi / 3, 0.01);
}

TEST(scan, optimized_never_below_fixed_axis) {
    for (auto range : {InteractionRange::NearestNeighbor, InteractionRange::NextNearestNeighbor}) {
        ScanConfig c = base_config({2, 3, 4}, 2 * std::numbers::pi, 0.05);
        c.model.range = range;
        auto r = sweep(c);
        for (const auto &s : r.series) {
            for (const auto &p : s.points) {
                EXPECT_GE(p.k_opt, p.k_fixed - 1e-10);
                for (double k : p.k_axes) {
                    EXPECT_GE(p.k_opt, k - 1e-10);
                }
            }
        }
    }
}

TEST(scan, deterministic_across_thread_counts) {
    ScanConfig c = base_config({2, 3}, 2.0, 0.01);
    c.model.range = InteractionRange::NextNearestNeighbor;
    c.threads = 1;
    auto a = sweep(c);
    c.threads = 4;
    auto b = sweep(c);
    for (std::size_t s = 0; s < a.series.size(); s++) {
        for (std::size_t i = 0; i < a.series[s].points.size(); i++) {
            const auto &p = a.series[s].points[i];
            const auto &q = b.series[s].points[i];
            EXPECT_EQ(p.k_fixed, q.k_fixed);
            EXPECT_EQ(p.k_opt, q.k_opt);
            EXPECT_EQ(p.axis, q.axis);
        }
        EXPECT_EQ(a.series[s].tau, b.series[s].tau);
    }
}

TEST(scan, numerical_failures_are_recorded_per_point) {
    ScanConfig c = base_config({2}, 0.5, 0.1);
    c.propagator.engine = Engine::Krylov;
    c.propagator.krylov_dim = 1;
    c.propagator.krylov_tol = 1e-14;
    c.propagator.max_substep = 10;
    auto r = sweep(c);
    const auto &pts = r.series[0].points;
    EXPECT_TRUE(pts[0].ok());
    EXPECT_FALSE(pts[3].ok());
    EXPECT_TRUE(std::isnan(pts[3].k_opt));
}

TEST(scan, first_violation_examples) {
    std::vector<double> t{0.0, 0.1, 0.2, 0.3};
    std::vector<double> flat(4, 1.5);
    EXPECT_EQ(first_violation(t, flat, 1.02), 0.0);
    std::vector<double> nonint;
    for (double x : t) {
        nonint.push_back(noninteracting_k(x));
    }
    EXPECT_FALSE(first_violation(t, nonint, 1.02).has_value());
    std::vector<double> ramp{1.0, 1.01, 1.03, 1.05};
    EXPECT_EQ(first_violation(t, ramp, 1.02), 0.2);
    EXPECT_THROW(first_violation(std::vector<double>{0, 0}, std::vector<double>{1, 1}, 1.02), ConfigError);
}

TEST(scan, first_violation_bisection) {
    std::vector<double> t{0.0, 0.1, 0.2, 0.3};
    auto line = [](double x) { return 1.0 + 0.1 * x; };  // crosses 1.02 at 0.2
    std::vector<double> v;
    for (double x : t) {
        v.push_back(line(x + 0.05));
    }
    auto shifted = [&](double x) { return line(x + 0.05); };
    auto tau = first_violation(t, v, 1.02, shifted, 1e-6);
    ASSERT_TRUE(tau.has_value());
    EXPECT_NEAR(*tau, 0.15, 2e-6);
    EXPECT_GT(shifted(*tau), 1.02);
}

TEST(scan, light_cone_fit_recovers_exact_line) {
    std::map<std::size_t, std::optional<double>> taus;
    for (std::size_t n = 2; n <= 6; n++) {
        taus[n] = 0.3 * static_cast<double>(n) + 0.1;
    }
    auto fit = light_cone_fit(taus);
    EXPECT_NEAR(fit.slope, 0.3, 1e-12);
    EXPECT_NEAR(fit.intercept, 0.1, 1e-12);
    EXPECT_NEAR(fit.residual, 0.0, 1e-12);
    EXPECT_EQ(fit.residuals.size(), 5u);
}

TEST(scan, light_cone_fit_reports_missing_distances) {
    std::map<std::size_t, std::optional<double>> taus{{2, 0.3}, {3, std::nullopt}, {4, 0.9}, {6, 1.5}};
    try {
        light_cone_fit(taus);
        FAIL() << "expected MissingViolationError";
    } catch (const MissingViolationError &e) {
        EXPECT_EQ(e.missing(), (std::vector<std::size_t>{3, 5}));
    }
}

TEST(scan, nn_first_violation_grows_with_distance) {
    auto r = sweep(base_config({2, 3, 4, 5}, 2.0, 0.01));
    auto taus = r.taus();
    for (std::size_t n = 2; n < 5; n++) {
        ASSERT_TRUE(taus[n] && taus[n + 1]);
        EXPECT_LT(*taus[n], *taus[n + 1]);
    }
}

TEST(scan, nnn_violates_immediately) {
    ScanConfig c = base_config({2, 3}, 0.05, 0.05);
    c.model.range = InteractionRange::NextNearestNeighbor;
    auto r = sweep(c);
    for (const auto &s : r.series) {
        EXPECT_GT(s.points.back().k_opt, 1.0) << "n=" << s.distance_n;
    }
}

TEST(scan, table_maxima_stable_under_grid_refinement) {
    for (auto range : {InteractionRange::NearestNeighbor, InteractionRange::NextNearestNeighbor}) {
        TableConfig coarse;
        coarse.range = range;
        coarse.distances = {2, 3, 4};
        TableConfig fine = coarse;
        fine.step = coarse.step / 2;
        auto a = reproduce_table(coarse);
        auto b = reproduce_table(fine);
        for (std::size_t i = 0; i < a.size(); i++) {
            EXPECT_LT(std::abs(a[i].max_k - b[i].max_k), 5e-3);
        }
    }
}

TEST(scan, table_rows_carry_references) {
    TableConfig c;
    c.distances = {2};
    auto rows = reproduce_table(c);
    ASSERT_TRUE(rows[0].reference.has_value());
    EXPECT_EQ(*rows[0].reference, 1.381);
    EXPECT_NEAR(rows[0].max_k, 1.381, kTableTolerance);
    EXPECT_NEAR(*rows[0].deviation, std::abs(rows[0].max_k - 1.381), 0);
    c.coupling_j = 0.5;
    EXPECT_FALSE(reproduce_table(c)[0].reference.has_value());
    EXPECT_FALSE(reference_max_k(InteractionRange::NearestNeighbor, 8).has_value());
}
