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
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slgi/chain.hpp"
#include "slgi/errors.hpp"
#include "slgi/pauli.hpp"
#include "slgi/propagator.hpp"

namespace slgi {

/// Uniform grid in the dimensionless time ht, endpoints included when they
/// fall on the grid (up to 1e-9 of a step).
struct TimeGrid {
    double start = 0.0;
    double stop = 6.283185307179586;
    double step = 0.01;

    void validate() const;
    std::vector<double> points() const;
};

/// Chain parameters shared by every distance in a scan.
struct ModelTemplate {
    double coupling_j = 1.0;
    double field_h = 1.0;
    InteractionRange range = InteractionRange::NearestNeighbor;

    ChainSpec chain(std::size_t distance_n) const {
        return ChainSpec::for_distance(distance_n, coupling_j, field_h, range);
    }
    /// Physical time per unit of ht: 1/|h|, or 1 when h == 0.
    double time_unit() const;
};

inline constexpr std::size_t kDefaultMaxScanSites = 13;

struct ScanConfig {
    std::vector<std::size_t> distances;
    TimeGrid grid;
    ModelTemplate model;
    double violation_threshold = 1.02;
    bool optimize = true;
    bool refine_tau = false;
    PauliAxis fixed_axis = PauliAxis::x();
    PropagatorOptions propagator;
    std::size_t max_sites = kDefaultMaxScanSites;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;

    /// Collects every problem into one ConfigError. Distances whose chains
    /// exceed max_sites raise CapacityError listing them.
    void validate() const;
};

struct ScanPoint {
    double ht = 0;
    /// K_n for the fixed axis.
    double k_fixed = 0;
    /// K_n for the x, y and z axes; NaN when the scan does not optimize.
    std::array<double, 3> k_axes{};
    /// Optimized K_n (top eigenvalue) and its axis; NaN when not optimizing.
    double k_opt = 0;
    std::array<double, 3> axis{};
    bool degenerate = false;
    double antisymmetric_residual = 0;
    /// Empty on success; otherwise the numerical failure for this point.
    std::string error;

    bool ok() const noexcept {
        return error.empty();
    }
};

struct DistanceSeries {
    std::size_t distance_n = 0;
    std::size_t n_sites = 0;
    Engine engine = Engine::Auto;
    std::vector<ScanPoint> points;
    /// First ht at which the tracked series (optimized when optimizing,
    /// fixed-axis otherwise) exceeds the threshold.
    std::optional<double> tau;
    double max_k_fixed = 0;
    double max_k_opt = 0;
    double ht_at_max = 0;

    std::vector<double> times() const;
    /// The series used for tau and maxima.
    std::vector<double> tracked_values(bool optimized) const;
};

struct ScanResult {
    ScanConfig config;
    std::vector<DistanceSeries> series;

    const DistanceSeries &for_distance(std::size_t n) const;
    std::map<std::size_t, std::optional<double>> taus() const;
};

/// K_n over the grid for every distance, optionally optimized over the axis.
ScanResult sweep(const ScanConfig &config);

/// Earliest grid time whose value exceeds threshold. Times must increase.
std::optional<double> first_violation(std::span<const double> times, std::span<const double> values,
                                      double threshold);

/// As above, then bisects between the bracketing grid points until the
/// bracket is at most `tolerance` wide. Returns the upper end, where
/// evaluate(t) > threshold.
std::optional<double> first_violation(std::span<const double> times, std::span<const double> values,
                                      double threshold, const std::function<double(double)> &evaluate,
                                      double tolerance = 1e-4);

struct LightConeFit {
    double slope = 0;
    double intercept = 0;
    /// Root-mean-square of the residuals.
    double residual = 0;
    std::vector<double> residuals;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
};

/// Thrown when a distance inside the fit range never violates.
class MissingViolationError : public Error {
   public:
    MissingViolationError(const std::string &what, std::vector<std::size_t> missing)
        : Error(what), missing_(std::move(missing)) {}
    const std::vector<std::size_t> &missing() const noexcept {
        return missing_;
    }

   private:
    std::vector<std::size_t> missing_;
};

/// Ordinary least squares of tau against n for n_min <= n <= n_max.
LightConeFit light_cone_fit(const std::map<std::size_t, std::optional<double>> &taus, std::size_t n_min = 2,
                            std::size_t n_max = 6);

struct TableRow {
    InteractionRange range;
    std::size_t distance_n;
    double max_k;
    double ht_at_max;
    std::optional<double> reference;
    /// |max_k - reference| when a reference exists.
    std::optional<double> deviation;
};

/// Reference maxima of the optimized K_n for J = h = 1 and ht <= 1.8.
std::optional<double> reference_max_k(InteractionRange range, std::size_t distance_n);

inline constexpr double kTableWindow = 1.8;
inline constexpr double kTableTolerance = 0.02;

struct TableConfig {
    InteractionRange range = InteractionRange::NearestNeighbor;
    std::vector<std::size_t> distances{2, 3, 4, 5, 6, 7};
    double window = kTableWindow;
    double step = 0.01;
    double coupling_j = 1.0;
    double field_h = 1.0;
    PropagatorOptions propagator;
    unsigned threads = 0;
};

/// Maximum over the window of the optimized K_n for each distance.
std::vector<TableRow> reproduce_table(const TableConfig &config);

}  // namespace slgi
