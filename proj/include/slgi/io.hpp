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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "slgi/sampler.hpp"
#include "slgi/scan.hpp"

namespace slgi::io {

using Json = nlohmann::ordered_json;

/// Version string embedded in every output.
std::string tool_version();

/// Metadata block shared by all outputs: model, grid, engine, threshold,
/// seed and tool version. Fields that do not apply are null.
struct RunMetadata {
    std::string subcommand;
    double coupling_j = 1.0;
    double field_h = 1.0;
    InteractionRange range = InteractionRange::NearestNeighbor;
    std::optional<TimeGrid> grid;
    PropagatorOptions propagator;
    std::vector<std::string> engines_used;
    std::optional<double> threshold;
    std::optional<bool> refine_tau;
    std::optional<std::uint64_t> seed;

    Json to_json() const;
};

/// Line prefix that carries the metadata JSON at the top of every CSV file.
inline constexpr const char *kCsvMetaPrefix = "# meta: ";

/// Time series, one row per (n, ht):
/// n,ht,K_fixed_x,K_opt,vx,vy,vz,K_x,K_y,K_z,error
/// K_fixed_x is K_n along the fixed axis (x unless configured otherwise).
void write_sweep_csv(std::ostream &out, const ScanResult &result, const RunMetadata &meta);
Json sweep_json(const ScanResult &result, const RunMetadata &meta);

Json lightcone_json(const ScanResult &result, const RunMetadata &meta, std::size_t fit_min, std::size_t fit_max);

/// range,n,max_k,ht_at_max,reference,deviation,tolerance,within_tolerance
void write_table_csv(std::ostream &out, const std::vector<TableRow> &rows, const RunMetadata &meta);
Json table_json(const std::vector<TableRow> &rows, const RunMetadata &meta);

Json sample_json(const SampleResult &result, const MeasurementEvent &first, const MeasurementEvent &second,
                 std::size_t n_sites, const RunMetadata &meta);
void write_sample_csv(std::ostream &out, const SampleResult &result, const RunMetadata &meta);

/// ht,K
void write_oracle_csv(std::ostream &out, const std::string &kind, const std::vector<double> &ht,
                      const std::vector<double> &k, const RunMetadata &meta);
Json oracle_json(const std::string &kind, const std::vector<double> &ht, const std::vector<double> &k,
                 const RunMetadata &meta);

/// Parsed CSV produced by one of the writers above.
struct CsvTable {
    Json meta;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string &name) const;
    double number(std::size_t row, const std::string &name) const;
};

/// Throws ConfigError on a missing metadata line or ragged rows.
CsvTable read_csv(std::istream &in);

/// Shortest decimal form that parses back to the same double; "nan" for NaN.
std::string format_double(double v);
double parse_double(const std::string &text);

/// Writes through a temporary file in the same directory, then renames.
void write_atomically(const std::filesystem::path &path, const std::string &contents);

}  // namespace slgi::io
