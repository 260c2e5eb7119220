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

#include "slgi/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "slgi/errors.hpp"
#include "slgi/io.hpp"
#include "slgi/oracles.hpp"
#include "slgi/sampler.hpp"
#include "slgi/scan.hpp"

namespace slgi::cli {

namespace {

constexpr const char *kDefaultGrid = "0:6.283185307179586:0.01";

struct CommonOptions {
    double coupling_j = 1.0;
    double field_h = 1.0;
    std::string range = "nn";
    std::string engine = "auto";
    std::size_t krylov_dim = PropagatorOptions{}.krylov_dim;
    double krylov_tol = PropagatorOptions{}.krylov_tol;
    double max_substep = PropagatorOptions{}.max_substep;
    unsigned threads = 0;
    std::string output;
    std::string format;
};

struct SweepOptions {
    std::string distances;
    std::string grid = kDefaultGrid;
    double threshold = 1.02;
    bool no_optimize = false;
    bool refine_tau = false;
    std::string axis = "x";
    std::size_t max_sites = kDefaultMaxScanSites;
    std::string fit_range = "2..6";
};

struct TableOptions {
    std::string distances = "2..7";
    double window = kTableWindow;
    double step = 0.01;
};

struct SampleOptions {
    std::size_t n_sites = 3;
    std::size_t first_site = 1;
    std::string first_axis = "x";
    double first_time = 0;
    std::size_t second_site = 2;
    std::string second_axis = "x";
    double second_time = 0;
    std::uint64_t shots = 100000;
    std::uint64_t seed = 20240601;
};

struct OracleOptions {
    std::string kind = "noninteracting";
    std::string grid = kDefaultGrid;
};

/// Collects every validation problem so the user sees them all at once.
class Problems {
   public:
    template <typename F>
    auto check(F &&f) -> std::optional<decltype(f())> {
        try {
            return f();
        } catch (const ConfigError &e) {
            list_.emplace_back(e.what());
        } catch (const CapacityError &e) {
            list_.emplace_back(e.what());
        }
        return std::nullopt;
    }
    void add(std::string msg) {
        list_.push_back(std::move(msg));
    }
    bool empty() const {
        return list_.empty();
    }
    std::string message() const {
        std::string m = "invalid configuration:";
        for (const auto &p : list_) {
            m += "\n  - " + p;
        }
        return m;
    }

   private:
    std::vector<std::string> list_;
};

TimeGrid parse_grid(const std::string &text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) {
        parts.push_back(part);
    }
    if (parts.size() != 3) {
        throw ConfigError("grid '" + text + "' must look like start:stop:step");
    }
    TimeGrid g{io::parse_double(parts[0]), io::parse_double(parts[1]), io::parse_double(parts[2])};
    g.validate();
    return g;
}

PauliAxis parse_axis(const std::string &text) {
    if (text == "x" || text == "X") {
        return PauliAxis::x();
    }
    if (text == "y" || text == "Y") {
        return PauliAxis::y();
    }
    if (text == "z" || text == "Z") {
        return PauliAxis::z();
    }
    std::vector<double> c;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        c.push_back(io::parse_double(part));
    }
    if (c.size() != 3) {
        throw ConfigError("axis '" + text + "' must be x, y, z or vx,vy,vz");
    }
    return PauliAxis(c[0], c[1], c[2]);
}

std::pair<std::size_t, std::size_t> parse_fit_range(const std::string &text) {
    auto pos = text.find("..");
    if (pos == std::string::npos) {
        throw ConfigError("fit range '" + text + "' must look like a..b");
    }
    auto lo = parse_distance_list(text.substr(0, pos));
    auto hi = parse_distance_list(text.substr(pos + 2));
    if (lo.size() != 1 || hi.size() != 1 || hi[0] <= lo[0]) {
        throw ConfigError("fit range '" + text + "' must have a < b");
    }
    return {lo[0], hi[0]};
}

PropagatorOptions propagator_options(const CommonOptions &c, Problems &problems) {
    PropagatorOptions p;
    if (auto e = problems.check([&] { return parse_engine(c.engine); })) {
        p.engine = *e;
    }
    p.krylov_dim = c.krylov_dim;
    p.krylov_tol = c.krylov_tol;
    p.max_substep = c.max_substep;
    if (c.krylov_dim == 0) {
        problems.add("--krylov-dim must be positive");
    }
    if (!(c.krylov_tol > 0)) {
        problems.add("--krylov-tol must be positive");
    }
    if (!(c.max_substep > 0)) {
        problems.add("--max-substep must be positive");
    }
    return p;
}

io::RunMetadata base_metadata(const std::string &subcommand, const CommonOptions &c, InteractionRange range,
                              const PropagatorOptions &p) {
    io::RunMetadata m;
    m.subcommand = subcommand;
    m.coupling_j = c.coupling_j;
    m.field_h = c.field_h;
    m.range = range;
    m.propagator = p;
    return m;
}

std::vector<std::string> engines_of(const ScanResult &r) {
    std::vector<std::string> e;
    for (const auto &s : r.series) {
        e.push_back(to_string(s.engine));
    }
    return e;
}

class Output {
   public:
    Output(const CommonOptions &c, const std::string &subcommand, const std::string &default_format,
           Problems &problems)
        : format_(c.format.empty() ? default_format : c.format) {
        if (format_ != "csv" && format_ != "json") {
            problems.add("--format must be csv or json, got '" + format_ + "'");
        }
        const char *dir = std::getenv(kOutputDirEnv);
        if (!c.output.empty()) {
            std::filesystem::path p(c.output);
            if (p.is_relative() && dir != nullptr && *dir != '\0') {
                p = std::filesystem::path(dir) / p;
            }
            path_ = p;
        } else if (dir != nullptr && *dir != '\0') {
            path_ = std::filesystem::path(dir) / (subcommand + "." + format_);
        }
    }

    const std::string &format() const {
        return format_;
    }

    void emit(const std::string &text, std::ostream &out, std::ostream &err) const {
        if (path_) {
            io::write_atomically(*path_, text);
            err << "wrote " << path_->string() << '\n';
        } else {
            out << text;
        }
    }

   private:
    std::string format_;
    std::optional<std::filesystem::path> path_;
};

std::string dump(const io::Json &j) {
    return j.dump(2) + "\n";
}

int run_sweep(const CommonOptions &c, const SweepOptions &s, bool lightcone, std::ostream &out, std::ostream &err) {
    Problems problems;
    const std::string name = lightcone ? "lightcone" : "sweep";
    Output output(c, name, lightcone ? "json" : "csv", problems);
    ScanConfig config;
    if (auto d = problems.check([&] { return parse_distance_list(s.distances); })) {
        config.distances = *d;
    }
    if (auto g = problems.check([&] { return parse_grid(s.grid); })) {
        config.grid = *g;
    }
    InteractionRange range = InteractionRange::NearestNeighbor;
    if (auto r = problems.check([&] { return parse_range(c.range); })) {
        range = *r;
    }
    if (auto a = problems.check([&] { return parse_axis(s.axis); })) {
        config.fixed_axis = *a;
    }
    std::pair<std::size_t, std::size_t> fit{2, 6};
    if (lightcone) {
        if (auto f = problems.check([&] { return parse_fit_range(s.fit_range); })) {
            fit = *f;
        }
    }
    config.model = {c.coupling_j, c.field_h, range};
    config.violation_threshold = s.threshold;
    config.optimize = !s.no_optimize;
    config.refine_tau = s.refine_tau;
    config.propagator = propagator_options(c, problems);
    config.max_sites = s.max_sites;
    config.threads = c.threads;
    if (problems.empty()) {
        problems.check([&] {
            config.validate();
            return 0;
        });
    }
    if (!problems.empty()) {
        err << problems.message() << '\n';
        return kExitValidation;
    }

    auto result = sweep(config);
    auto meta = base_metadata(name, c, range, config.propagator);
    meta.grid = config.grid;
    meta.engines_used = engines_of(result);
    meta.threshold = config.violation_threshold;
    meta.refine_tau = config.refine_tau;

    std::string text;
    if (lightcone) {
        auto j = io::lightcone_json(result, meta, fit.first, fit.second);
        if (output.format() == "json") {
            text = dump(j);
        } else {
            std::ostringstream csv;
            csv << io::kCsvMetaPrefix << meta.to_json().dump() << '\n' << "n,tau\n";
            for (const auto &ser : result.series) {
                csv << ser.distance_n << ',' << (ser.tau ? io::format_double(*ser.tau) : "nan") << '\n';
            }
            text = csv.str();
        }
        if (j["fit"].is_null()) {
            err << "no violation for n = " << j["missing"].dump() << "; light-cone fit skipped\n";
        }
    } else if (output.format() == "json") {
        text = dump(io::sweep_json(result, meta));
    } else {
        std::ostringstream csv;
        io::write_sweep_csv(csv, result, meta);
        text = csv.str();
    }
    output.emit(text, out, err);
    for (const auto &ser : result.series) {
        for (const auto &p : ser.points) {
            if (!p.ok()) {
                err << "n=" << ser.distance_n << " ht=" << p.ht << ": " << p.error << '\n';
                return kExitNumerical;
            }
        }
    }
    return kExitOk;
}

int run_table(const CommonOptions &c, const TableOptions &t, std::ostream &out, std::ostream &err) {
    Problems problems;
    Output output(c, "table", "csv", problems);
    TableConfig config;
    if (auto d = problems.check([&] { return parse_distance_list(t.distances); })) {
        config.distances = *d;
    }
    if (auto r = problems.check([&] { return parse_range(c.range); })) {
        config.range = *r;
    }
    config.window = t.window;
    config.step = t.step;
    config.coupling_j = c.coupling_j;
    config.field_h = c.field_h;
    config.propagator = propagator_options(c, problems);
    config.threads = c.threads;
    if (problems.empty()) {
        problems.check([&] {
            ScanConfig probe;
            probe.distances = config.distances;
            probe.grid = {0, config.window, config.step};
            probe.model = {config.coupling_j, config.field_h, config.range};
            probe.propagator = config.propagator;
            probe.validate();
            return 0;
        });
    }
    if (!problems.empty()) {
        err << problems.message() << '\n';
        return kExitValidation;
    }

    auto rows = reproduce_table(config);
    auto meta = base_metadata("table", c, config.range, config.propagator);
    meta.grid = TimeGrid{0, config.window, config.step};
    for (auto n : config.distances) {
        auto e = config.propagator.engine;
        if (e == Engine::Auto) {
            e = 2 * n - 1 <= kAutoDenseMaxSites ? Engine::DenseSpectral : Engine::Krylov;
        }
        meta.engines_used.push_back(to_string(e));
    }
    if (output.format() == "json") {
        output.emit(dump(io::table_json(rows, meta)), out, err);
    } else {
        std::ostringstream csv;
        io::write_table_csv(csv, rows, meta);
        output.emit(csv.str(), out, err);
    }
    return kExitOk;
}

int run_sample(const CommonOptions &c, const SampleOptions &s, std::ostream &out, std::ostream &err) {
    Problems problems;
    Output output(c, "sample", "json", problems);
    InteractionRange range = InteractionRange::NearestNeighbor;
    if (auto r = problems.check([&] { return parse_range(c.range); })) {
        range = *r;
    }
    std::optional<PauliAxis> a1 = problems.check([&] { return parse_axis(s.first_axis); });
    std::optional<PauliAxis> a2 = problems.check([&] { return parse_axis(s.second_axis); });
    auto popts = propagator_options(c, problems);
    if (s.n_sites == 0 || s.n_sites > kMaxDenseSites) {
        problems.add("--sites must lie in 1.." + std::to_string(kMaxDenseSites));
    }
    for (auto site : {s.first_site, s.second_site}) {
        if (site < 1 || site > s.n_sites) {
            problems.add("site " + std::to_string(site) + " outside 1.." + std::to_string(s.n_sites));
        }
    }
    if (!(s.first_time >= 0) || !(s.second_time >= 0)) {
        problems.add("measurement times must be non-negative");
    }
    if (s.first_time > s.second_time) {
        problems.add("--first-time must not exceed --second-time");
    }
    if (s.shots == 0) {
        problems.add("--shots must be positive");
    }
    if (!std::isfinite(c.coupling_j) || !std::isfinite(c.field_h)) {
        problems.add("couplings must be finite");
    }
    if (!problems.empty()) {
        err << problems.message() << '\n';
        return kExitValidation;
    }

    const ModelTemplate model{c.coupling_j, c.field_h, range};
    const double unit = model.time_unit();
    Propagator prop(ChainSpec{s.n_sites, c.coupling_j, c.field_h, range, Boundary::Open}, popts);
    MeasurementEvent first{s.first_site, *a1, s.first_time * unit};
    MeasurementEvent second{s.second_site, *a2, s.second_time * unit};
    auto result = sample_sequential(prop, make_plus_state(s.n_sites), first, second, s.shots, s.seed);

    auto meta = base_metadata("sample", c, range, popts);
    meta.engines_used = {to_string(prop.engine())};
    meta.seed = s.seed;
    if (output.format() == "json") {
        output.emit(dump(io::sample_json(result, first, second, s.n_sites, meta)), out, err);
    } else {
        std::ostringstream csv;
        io::write_sample_csv(csv, result, meta);
        output.emit(csv.str(), out, err);
    }
    return kExitOk;
}

int run_oracle(const CommonOptions &c, const OracleOptions &o, std::ostream &out, std::ostream &err) {
    Problems problems;
    Output output(c, "oracle", "csv", problems);
    std::optional<TimeGrid> grid = problems.check([&] { return parse_grid(o.grid); });
    if (o.kind != "noninteracting" && o.kind != "single-spin") {
        problems.add("--kind must be noninteracting or single-spin, got '" + o.kind + "'");
    }
    if (!problems.empty()) {
        err << problems.message() << '\n';
        return kExitValidation;
    }
    auto ht = grid->points();
    std::vector<double> k;
    k.reserve(ht.size());
    for (double x : ht) {
        k.push_back(o.kind == "noninteracting" ? noninteracting_k(x) : single_spin_k(x));
    }
    io::RunMetadata meta;
    meta.subcommand = "oracle";
    meta.coupling_j = 0.0;
    meta.field_h = 1.0;
    meta.grid = grid;
    meta.engines_used = {"closed-form"};
    if (output.format() == "json") {
        output.emit(dump(io::oracle_json(o.kind, ht, k, meta)), out, err);
    } else {
        std::ostringstream csv;
        io::write_oracle_csv(csv, o.kind, ht, k, meta);
        output.emit(csv.str(), out, err);
    }
    return kExitOk;
}

}  // namespace

std::vector<std::size_t> parse_distance_list(const std::string &text) {
    auto parse_one = [&](const std::string &s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw ConfigError("'" + text + "' is not a distance list (use 2..7 or 2,3,5)");
        }
        return static_cast<std::size_t>(std::stoull(s));
    };
    std::vector<std::size_t> out;
    auto range_pos = text.find("..");
    if (range_pos != std::string::npos) {
        auto lo = parse_one(text.substr(0, range_pos));
        auto hi = parse_one(text.substr(range_pos + 2));
        if (hi < lo) {
            throw ConfigError("distance range '" + text + "' is empty");
        }
        for (auto n = lo; n <= hi; n++) {
            out.push_back(n);
        }
    } else {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            out.push_back(parse_one(part));
        }
    }
    if (out.empty()) {
        throw ConfigError("empty distance list");
    }
    for (auto n : out) {
        if (n == 0) {
            throw ConfigError("distance n must be >= 1");
        }
    }
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Spatial Leggett-Garg inequalities on Heisenberg spin chains"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_version_flag("--version", io::tool_version());
    app.set_config("--config", "", "Key-value configuration file; command-line flags override it");
    app.require_subcommand(1);
    app.fallthrough();

    CommonOptions common;
    app.add_option("--J,--coupling", common.coupling_j, "Exchange coupling J")->capture_default_str();
    app.add_option("--h,--field", common.field_h, "Magnetic field h")->capture_default_str();
    app.add_option("--range", common.range, "Interaction range: nn or nnn")->capture_default_str();
    app.add_option("--engine", common.engine, "Time evolution: auto, dense or krylov")->capture_default_str();
    app.add_option("--krylov-dim", common.krylov_dim, "Maximum Krylov subspace dimension")->capture_default_str();
    app.add_option("--krylov-tol", common.krylov_tol, "Krylov error tolerance per evolution")->capture_default_str();
    app.add_option("--max-substep", common.max_substep, "Largest Krylov step in units of h*dt")
        ->capture_default_str();
    app.add_option("--threads", common.threads, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_option("-o,--output", common.output, "Output file (default: stdout, or $SLGI_OUTPUT_DIR)");
    app.add_option("--format", common.format, "Output format: csv or json");

    SweepOptions sweep_opts;
    auto *sweep_cmd = app.add_subcommand("sweep", "K_n time series, fixed-axis and optimized");
    sweep_cmd->add_option("--n", sweep_opts.distances, "Party distances, e.g. 2..5 or 2,4")->required();
    sweep_cmd->add_option("--grid", sweep_opts.grid, "ht grid start:stop:step")->capture_default_str();
    sweep_cmd->add_option("--threshold", sweep_opts.threshold, "Violation threshold")->capture_default_str();
    sweep_cmd->add_flag("--no-optimize", sweep_opts.no_optimize, "Skip the measurement-axis optimization");
    sweep_cmd->add_flag("--refine-tau", sweep_opts.refine_tau, "Bisect the first-violation time");
    sweep_cmd->add_option("--axis", sweep_opts.axis, "Fixed axis: x, y, z or vx,vy,vz")->capture_default_str();
    sweep_cmd->add_option("--max-sites", sweep_opts.max_sites, "Largest chain allowed")->capture_default_str();

    SweepOptions cone_opts;
    cone_opts.distances = "2..7";
    auto *cone_cmd = app.add_subcommand("lightcone", "First-violation times versus distance with a linear fit");
    cone_cmd->add_option("--n", cone_opts.distances, "Party distances")->capture_default_str();
    cone_cmd->add_option("--grid", cone_opts.grid, "ht grid start:stop:step")->capture_default_str();
    cone_cmd->add_option("--threshold", cone_opts.threshold, "Violation threshold")->capture_default_str();
    cone_cmd->add_flag("--refine-tau", cone_opts.refine_tau, "Bisect the first-violation time");
    cone_cmd->add_option("--fit-range", cone_opts.fit_range, "Distances entering the fit, a..b")
        ->capture_default_str();
    cone_cmd->add_option("--max-sites", cone_opts.max_sites, "Largest chain allowed")->capture_default_str();

    TableOptions table_opts;
    auto *table_cmd = app.add_subcommand("table", "Maximal optimized K_n over a short-time window");
    table_cmd->add_option("--n", table_opts.distances, "Party distances")->capture_default_str();
    table_cmd->add_option("--window", table_opts.window, "Largest ht in the window")->capture_default_str();
    table_cmd->add_option("--step", table_opts.step, "ht grid step")->capture_default_str();

    SampleOptions sample_opts;
    auto *sample_cmd = app.add_subcommand("sample", "Finite-shot sequential measurement of one correlator");
    sample_cmd->add_option("--sites", sample_opts.n_sites, "Chain length N")->capture_default_str();
    sample_cmd->add_option("--first-site", sample_opts.first_site, "1-based site of the first measurement")
        ->capture_default_str();
    sample_cmd->add_option("--first-axis", sample_opts.first_axis, "Axis of the first measurement")
        ->capture_default_str();
    sample_cmd->add_option("--first-time", sample_opts.first_time, "ht of the first measurement")
        ->capture_default_str();
    sample_cmd->add_option("--second-site", sample_opts.second_site, "1-based site of the second measurement")
        ->capture_default_str();
    sample_cmd->add_option("--second-axis", sample_opts.second_axis, "Axis of the second measurement")
        ->capture_default_str();
    sample_cmd->add_option("--second-time", sample_opts.second_time, "ht of the second measurement")
        ->capture_default_str();
    sample_cmd->add_option("--shots", sample_opts.shots, "Number of shots")->capture_default_str();
    sample_cmd->add_option("--seed", sample_opts.seed, "64-bit RNG seed")->capture_default_str();

    OracleOptions oracle_opts;
    auto *oracle_cmd = app.add_subcommand("oracle", "Closed-form K curves (J = 0 chain, single spin)");
    oracle_cmd->add_option("--kind", oracle_opts.kind, "noninteracting or single-spin")->capture_default_str();
    oracle_cmd->add_option("--grid", oracle_opts.grid, "ht grid start:stop:step")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << io::tool_version() << '\n';
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "invalid configuration:\n  - " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        if (sweep_cmd->parsed()) {
            return run_sweep(common, sweep_opts, false, out, err);
        }
        if (cone_cmd->parsed()) {
            return run_sweep(common, cone_opts, true, out, err);
        }
        if (table_cmd->parsed()) {
            return run_table(common, table_opts, out, err);
        }
        if (sample_cmd->parsed()) {
            return run_sample(common, sample_opts, out, err);
        }
        if (oracle_cmd->parsed()) {
            return run_oracle(common, oracle_opts, out, err);
        }
    } catch (const ConfigError &e) {
        err << "invalid configuration:\n  - " << e.what() << '\n';
        return kExitValidation;
    } catch (const CapacityError &e) {
        err << "invalid configuration:\n  - " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericalError &e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitValidation;
}

}  // namespace slgi::cli
