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

#include "slgi/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "parallel.hpp"
#include "slgi/correlator.hpp"
#include "slgi/optimize.hpp"

namespace slgi {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string join(const std::vector<std::size_t> &values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); i++) {
        out << (i ? ", " : "") << values[i];
    }
    return out.str();
}

}  // namespace

void TimeGrid::validate() const {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
        throw ConfigError("time grid values must be finite");
    }
    if (!(step > 0)) {
        throw ConfigError("time grid step must be positive");
    }
    if (start < 0) {
        throw ConfigError("time grid must start at ht >= 0");
    }
    if (stop < start) {
        throw ConfigError("time grid stop is before its start");
    }
}

std::vector<double> TimeGrid::points() const {
    validate();
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> pts(count);
    for (std::size_t k = 0; k < count; k++) {
        pts[k] = start + static_cast<double>(k) * step;
    }
    return pts;
}

double ModelTemplate::time_unit() const {
    return field_h != 0 ? 1.0 / std::abs(field_h) : 1.0;
}

void ScanConfig::validate() const {
    std::vector<std::string> problems;
    if (distances.empty()) {
        problems.emplace_back("no distances requested");
    }
    for (auto n : distances) {
        if (n == 0) {
            problems.emplace_back("distance n must be >= 1");
            break;
        }
    }
    try {
        grid.validate();
    } catch (const ConfigError &e) {
        problems.emplace_back(e.what());
    }
    if (!(violation_threshold > 1) || !std::isfinite(violation_threshold)) {
        problems.emplace_back("violation threshold must be a finite value above 1");
    }
    if (!std::isfinite(model.coupling_j) || !std::isfinite(model.field_h)) {
        problems.emplace_back("couplings must be finite");
    }
    if (propagator.krylov_dim == 0 || !(propagator.krylov_tol > 0) || !(propagator.max_substep > 0)) {
        problems.emplace_back("Krylov options must be positive");
    }
    if (max_sites == 0 || max_sites > kMaxStateSites) {
        problems.emplace_back("max_sites must lie in 1.." + std::to_string(kMaxStateSites));
    }
    if (!problems.empty()) {
        std::string msg = "invalid scan configuration:";
        for (const auto &p : problems) {
            msg += "\n  - " + p;
        }
        throw ConfigError(msg);
    }
    std::vector<std::size_t> too_big;
    for (auto n : distances) {
        if (2 * n - 1 > max_sites) {
            too_big.push_back(n);
        }
    }
    if (!too_big.empty()) {
        throw CapacityError("distances exceed the " + std::to_string(max_sites) + "-site limit: n = " + join(too_big));
    }
}

std::vector<double> DistanceSeries::times() const {
    std::vector<double> t;
    t.reserve(points.size());
    for (const auto &p : points) {
        t.push_back(p.ht);
    }
    return t;
}

std::vector<double> DistanceSeries::tracked_values(bool optimized) const {
    std::vector<double> v;
    v.reserve(points.size());
    for (const auto &p : points) {
        v.push_back(optimized ? p.k_opt : p.k_fixed);
    }
    return v;
}

const DistanceSeries &ScanResult::for_distance(std::size_t n) const {
    for (const auto &s : series) {
        if (s.distance_n == n) {
            return s;
        }
    }
    throw ConfigError("scan holds no series for n = " + std::to_string(n));
}

std::map<std::size_t, std::optional<double>> ScanResult::taus() const {
    std::map<std::size_t, std::optional<double>> out;
    for (const auto &s : series) {
        out[s.distance_n] = s.tau;
    }
    return out;
}

namespace {

void evaluate_point(const Propagator &prop, const StateVector &psi0, const KMatrixEvaluator *evaluator,
                    const ScanConfig &config, std::size_t n, double t, ScanPoint &point) {
    try {
        if (evaluator != nullptr) {
            KMatrix k = evaluator->at(t);
            auto opt = optimize_measurement(k);
            point.k_fixed = k.quadratic_form(config.fixed_axis);
            point.k_axes = {k.entries[0][0], k.entries[1][1], k.entries[2][2]};
            point.k_opt = opt.lambda_max;
            point.axis = opt.axis.components();
            point.degenerate = opt.degenerate;
            point.antisymmetric_residual = k.antisymmetric_residual;
        } else {
            point.k_fixed = k_correlator(prop, psi0, LgiProtocol{n, t, config.fixed_axis});
            point.k_axes = {kNaN, kNaN, kNaN};
            point.k_opt = kNaN;
            point.axis = {kNaN, kNaN, kNaN};
        }
    } catch (const NumericalError &e) {
        point.error = e.what();
        point.k_fixed = point.k_opt = kNaN;
        point.k_axes = point.axis = {kNaN, kNaN, kNaN};
    }
}

}  // namespace

ScanResult sweep(const ScanConfig &config) {
    config.validate();
    ScanResult result;
    result.config = config;
    const auto grid = config.grid.points();
    const double unit = config.model.time_unit();

    for (auto n : config.distances) {
        Propagator prop(config.model.chain(n), config.propagator);
        const StateVector psi0 = make_plus_state(prop.n_sites());
        std::optional<KMatrixEvaluator> evaluator;
        if (config.optimize) {
            evaluator.emplace(prop, psi0, n);
        }

        DistanceSeries series;
        series.distance_n = n;
        series.n_sites = prop.n_sites();
        series.engine = prop.engine();
        series.points.resize(grid.size());
        const KMatrixEvaluator *ev = evaluator ? &*evaluator : nullptr;
        detail::parallel_for(grid.size(), config.threads, [&](std::size_t i) {
            series.points[i].ht = grid[i];
            evaluate_point(prop, psi0, ev, config, n, grid[i] * unit, series.points[i]);
        });

        const auto times = series.times();
        const auto tracked = series.tracked_values(config.optimize);
        series.max_k_fixed = series.max_k_opt = kNaN;
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < series.points.size(); i++) {
            const auto &p = series.points[i];
            if (!p.ok()) {
                continue;
            }
            if (!(series.max_k_fixed >= p.k_fixed)) {
                series.max_k_fixed = p.k_fixed;
            }
            if (config.optimize && !(series.max_k_opt >= p.k_opt)) {
                series.max_k_opt = p.k_opt;
            }
            if (tracked[i] > best) {
                best = tracked[i];
                series.ht_at_max = p.ht;
            }
        }

        if (config.refine_tau) {
            auto evaluate = [&](double ht) {
                ScanPoint p;
                evaluate_point(prop, psi0, ev, config, n, ht * unit, p);
                return config.optimize ? p.k_opt : p.k_fixed;
            };
            series.tau = first_violation(times, tracked, config.violation_threshold, evaluate);
        } else {
            series.tau = first_violation(times, tracked, config.violation_threshold);
        }
        result.series.push_back(std::move(series));
    }
    return result;
}

std::optional<double> first_violation(std::span<const double> times, std::span<const double> values,
                                      double threshold) {
    if (times.size() != values.size()) {
        throw ConfigError("time and value series differ in length");
    }
    for (std::size_t i = 1; i < times.size(); i++) {
        if (!(times[i] > times[i - 1])) {
            throw ConfigError("time grid must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < times.size(); i++) {
        if (values[i] > threshold) {
            return times[i];
        }
    }
    return std::nullopt;
}

std::optional<double> first_violation(std::span<const double> times, std::span<const double> values,
                                      double threshold, const std::function<double(double)> &evaluate,
                                      double tolerance) {
    auto grid_tau = first_violation(times, values, threshold);
    if (!grid_tau || *grid_tau == times.front()) {
        return grid_tau;
    }
    auto it = std::find(times.begin(), times.end(), *grid_tau);
    double hi = *it;
    double lo = *(it - 1);
    while (hi - lo > tolerance) {
        double mid = 0.5 * (lo + hi);
        if (evaluate(mid) > threshold) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

LightConeFit light_cone_fit(const std::map<std::size_t, std::optional<double>> &taus, std::size_t n_min,
                            std::size_t n_max) {
    if (n_max <= n_min) {
        throw ConfigError("light-cone fit range needs n_max > n_min");
    }
    std::vector<std::size_t> missing;
    std::vector<double> xs, ys;
    for (std::size_t n = n_min; n <= n_max; n++) {
        auto it = taus.find(n);
        if (it == taus.end() || !it->second) {
            missing.push_back(n);
            continue;
        }
        xs.push_back(static_cast<double>(n));
        ys.push_back(*it->second);
    }
    if (!missing.empty()) {
        throw MissingViolationError("no violation time for n = " + join(missing), missing);
    }
    const auto m = static_cast<double>(xs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < xs.size(); i++) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); i++) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    LightConeFit fit;
    fit.n_min = n_min;
    fit.n_max = n_max;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < xs.size(); i++) {
        double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        fit.residuals.push_back(r);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / m);
    return fit;
}

std::optional<double> reference_max_k(InteractionRange range, std::size_t distance_n) {
    static constexpr double nn[] = {1.381, 1.351, 1.197, 1.236, 1.024, 1.160};
    static constexpr double nnn[] = {1.391, 1.244, 1.285, 1.248, 1.024, 1.206};
    if (distance_n < 2 || distance_n > 7) {
        return std::nullopt;
    }
    return range == InteractionRange::NearestNeighbor ? nn[distance_n - 2] : nnn[distance_n - 2];
}

std::vector<TableRow> reproduce_table(const TableConfig &config) {
    std::vector<TableRow> rows;
    for (auto n : config.distances) {
        ScanConfig scan;
        scan.distances = {n};
        scan.grid = {0.0, config.window, config.step};
        scan.model = {config.coupling_j, config.field_h, config.range};
        scan.optimize = true;
        scan.propagator = config.propagator;
        scan.threads = config.threads;
        auto result = sweep(scan);
        const auto &s = result.series.front();
        TableRow row{config.range, n, s.max_k_opt, s.ht_at_max, std::nullopt, std::nullopt};
        if (config.coupling_j == 1.0 && config.field_h == 1.0) {
            row.reference = reference_max_k(config.range, n);
            if (row.reference) {
                row.deviation = std::abs(row.max_k - *row.reference);
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace slgi
