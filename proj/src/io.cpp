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

#include "slgi/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <unistd.h>

#include "slgi/errors.hpp"

namespace slgi::io {

std::string tool_version() {
#ifdef SLGI_VERSION
    return SLGI_VERSION;
#else
    return "unknown";
#endif
}

namespace {

Json number_or_null(double v) {
    return std::isfinite(v) ? Json(v) : Json(nullptr);
}

template <typename T>
Json optional_json(const std::optional<T> &v) {
    return v ? Json(*v) : Json(nullptr);
}

void write_meta_line(std::ostream &out, const Json &meta) {
    out << kCsvMetaPrefix << meta.dump() << '\n';
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

// Error text goes into a CSV cell; keep it free of separators and newlines.
std::string csv_safe(std::string s) {
    for (char &c : s) {
        if (c == ',' || c == '\n' || c == '\r') {
            c = ';';
        }
    }
    return s;
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string &text) {
    if (text == "nan" || text.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    if (text == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    if (text == "-inf") {
        return -std::numeric_limits<double>::infinity();
    }
    double v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw ConfigError("not a number: '" + text + "'");
    }
    return v;
}

Json RunMetadata::to_json() const {
    Json j;
    j["tool"] = "slgi";
    j["version"] = tool_version();
    j["subcommand"] = subcommand;
    j["model"] = {{"coupling_j", coupling_j}, {"field_h", field_h}, {"range", to_string(range)},
                  {"boundary", "open"}, {"initial_state", "plus"}};
    if (grid) {
        j["grid"] = {{"start", grid->start}, {"stop", grid->stop}, {"step", grid->step}, {"unit", "ht"}};
    } else {
        j["grid"] = nullptr;
    }
    j["engine"] = {{"requested", to_string(propagator.engine)},
                   {"used", engines_used},
                   {"krylov_dim", propagator.krylov_dim},
                   {"krylov_tol", propagator.krylov_tol},
                   {"max_substep", propagator.max_substep}};
    j["threshold"] = optional_json(threshold);
    j["refine_tau"] = optional_json(refine_tau);
    j["seed"] = optional_json(seed);
    return j;
}

void write_sweep_csv(std::ostream &out, const ScanResult &result, const RunMetadata &meta) {
    write_meta_line(out, meta.to_json());
    out << "n,ht,K_fixed_x,K_opt,vx,vy,vz,K_x,K_y,K_z,error\n";
    for (const auto &s : result.series) {
        for (const auto &p : s.points) {
            out << s.distance_n << ',' << format_double(p.ht) << ',' << format_double(p.k_fixed) << ','
                << format_double(p.k_opt) << ',' << format_double(p.axis[0]) << ',' << format_double(p.axis[1])
                << ',' << format_double(p.axis[2]) << ',' << format_double(p.k_axes[0]) << ','
                << format_double(p.k_axes[1]) << ',' << format_double(p.k_axes[2]) << ',' << csv_safe(p.error)
                << '\n';
        }
    }
}

namespace {

Json series_summary(const DistanceSeries &s) {
    return {{"n", s.distance_n},
            {"n_sites", s.n_sites},
            {"engine", to_string(s.engine)},
            {"tau", optional_json(s.tau)},
            {"max_k_fixed", number_or_null(s.max_k_fixed)},
            {"max_k_opt", number_or_null(s.max_k_opt)},
            {"ht_at_max", s.ht_at_max}};
}

}  // namespace

Json sweep_json(const ScanResult &result, const RunMetadata &meta) {
    Json j;
    j["meta"] = meta.to_json();
    j["fixed_axis"] = result.config.fixed_axis.components();
    j["optimize"] = result.config.optimize;
    Json series = Json::array();
    for (const auto &s : result.series) {
        Json entry = series_summary(s);
        Json ht = Json::array(), kf = Json::array(), ko = Json::array(), axes = Json::array(), kx = Json::array(),
             errors = Json::array();
        for (const auto &p : s.points) {
            ht.push_back(p.ht);
            kf.push_back(number_or_null(p.k_fixed));
            ko.push_back(number_or_null(p.k_opt));
            axes.push_back({number_or_null(p.axis[0]), number_or_null(p.axis[1]), number_or_null(p.axis[2])});
            kx.push_back({number_or_null(p.k_axes[0]), number_or_null(p.k_axes[1]), number_or_null(p.k_axes[2])});
            if (!p.ok()) {
                errors.push_back({{"ht", p.ht}, {"error", p.error}});
            }
        }
        entry["ht"] = ht;
        entry["K_fixed"] = kf;
        entry["K_opt"] = ko;
        entry["axis_opt"] = axes;
        entry["K_xyz"] = kx;
        entry["errors"] = errors;
        series.push_back(entry);
    }
    j["series"] = series;
    return j;
}

Json lightcone_json(const ScanResult &result, const RunMetadata &meta, std::size_t fit_min, std::size_t fit_max) {
    Json j;
    j["meta"] = meta.to_json();
    Json taus = Json::array();
    for (const auto &s : result.series) {
        taus.push_back(series_summary(s));
    }
    j["taus"] = taus;
    j["fit_range"] = {fit_min, fit_max};
    try {
        auto fit = light_cone_fit(result.taus(), fit_min, fit_max);
        j["fit"] = {{"slope", fit.slope},
                    {"intercept", fit.intercept},
                    {"residual_rms", fit.residual},
                    {"residuals", fit.residuals}};
        j["missing"] = Json::array();
    } catch (const MissingViolationError &e) {
        j["fit"] = nullptr;
        j["missing"] = e.missing();
    }
    return j;
}

void write_table_csv(std::ostream &out, const std::vector<TableRow> &rows, const RunMetadata &meta) {
    write_meta_line(out, meta.to_json());
    out << "range,n,max_k,ht_at_max,reference,deviation,tolerance,within_tolerance\n";
    for (const auto &r : rows) {
        out << to_string(r.range) << ',' << r.distance_n << ',' << format_double(r.max_k) << ','
            << format_double(r.ht_at_max) << ',' << (r.reference ? format_double(*r.reference) : "") << ','
            << (r.deviation ? format_double(*r.deviation) : "") << ',' << format_double(kTableTolerance) << ','
            << (r.deviation ? (*r.deviation <= kTableTolerance ? "true" : "false") : "") << '\n';
    }
}

Json table_json(const std::vector<TableRow> &rows, const RunMetadata &meta) {
    Json j;
    j["meta"] = meta.to_json();
    j["tolerance"] = kTableTolerance;
    Json arr = Json::array();
    for (const auto &r : rows) {
        arr.push_back({{"range", to_string(r.range)},
                       {"n", r.distance_n},
                       {"max_k", r.max_k},
                       {"ht_at_max", r.ht_at_max},
                       {"reference", optional_json(r.reference)},
                       {"deviation", optional_json(r.deviation)},
                       {"within_tolerance",
                        r.deviation ? Json(*r.deviation <= kTableTolerance) : Json(nullptr)}});
    }
    j["rows"] = arr;
    return j;
}

namespace {

Json event_json(const MeasurementEvent &e, double time_unit) {
    return {{"site", e.site}, {"axis", e.axis.components()}, {"ht", e.time / time_unit}};
}

}  // namespace

Json sample_json(const SampleResult &result, const MeasurementEvent &first, const MeasurementEvent &second,
                 std::size_t n_sites, const RunMetadata &meta) {
    const double unit = meta.field_h != 0 ? 1.0 / std::abs(meta.field_h) : 1.0;
    Json j;
    j["meta"] = meta.to_json();
    j["n_sites"] = n_sites;
    j["first"] = event_json(first, unit);
    j["second"] = event_json(second, unit);
    j["shots"] = result.shots;
    j["estimate"] = result.estimate;
    j["exact"] = result.exact_expectation;
    j["outcomes"] = {1, -1};
    j["joint_counts"] = result.joint_counts;
    j["exact_probabilities"] = result.exact_probabilities;
    return j;
}

void write_sample_csv(std::ostream &out, const SampleResult &result, const RunMetadata &meta) {
    write_meta_line(out, meta.to_json());
    out << "q_first,q_second,count,exact_probability\n";
    const int q[2] = {1, -1};
    for (int i = 0; i < 2; i++) {
        for (int k = 0; k < 2; k++) {
            out << q[i] << ',' << q[k] << ',' << result.joint_counts[i][k] << ','
                << format_double(result.exact_probabilities[i][k]) << '\n';
        }
    }
}

void write_oracle_csv(std::ostream &out, const std::string &kind, const std::vector<double> &ht,
                      const std::vector<double> &k, const RunMetadata &meta) {
    Json m = meta.to_json();
    m["kind"] = kind;
    write_meta_line(out, m);
    out << "ht,K\n";
    for (std::size_t i = 0; i < ht.size(); i++) {
        out << format_double(ht[i]) << ',' << format_double(k[i]) << '\n';
    }
}

Json oracle_json(const std::string &kind, const std::vector<double> &ht, const std::vector<double> &k,
                 const RunMetadata &meta) {
    Json j;
    j["meta"] = meta.to_json();
    j["meta"]["kind"] = kind;
    j["ht"] = ht;
    j["K"] = k;
    return j;
}

std::size_t CsvTable::column(const std::string &name) const {
    for (std::size_t i = 0; i < header.size(); i++) {
        if (header[i] == name) {
            return i;
        }
    }
    throw ConfigError("CSV has no column '" + name + "'");
}

double CsvTable::number(std::size_t row, const std::string &name) const {
    return parse_double(rows.at(row).at(column(name)));
}

CsvTable read_csv(std::istream &in) {
    CsvTable t;
    std::string line;
    if (!std::getline(in, line) || line.rfind(kCsvMetaPrefix, 0) != 0) {
        throw ConfigError("CSV does not start with a metadata line");
    }
    t.meta = Json::parse(line.substr(std::string(kCsvMetaPrefix).size()));
    if (!std::getline(in, line)) {
        throw ConfigError("CSV has no header");
    }
    t.header = split(line, ',');
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto cells = split(line, ',');
        if (cells.size() != t.header.size()) {
            throw ConfigError("CSV row has " + std::to_string(cells.size()) + " cells, expected " +
                              std::to_string(t.header.size()));
        }
        t.rows.push_back(std::move(cells));
    }
    return t;
}

void write_atomically(const std::filesystem::path &path, const std::string &contents) {
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw ConfigError("cannot open " + tmp.string() + " for writing");
        }
        f << contents;
        f.flush();
        if (!f) {
            throw ConfigError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw ConfigError("cannot move output into place at " + path.string() + ": " + ec.message());
    }
}

}  // namespace slgi::io
