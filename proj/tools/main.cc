// Copyright 2026 The cultsim Authors
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

// Batch driver. Exit codes: 0 ok, 1 internal error, 2 configuration error, 3 capacity error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cultsim/analysis.h"
#include "cultsim/circuit.h"
#include "cultsim/densesim.h"
#include "cultsim/reorder.h"
#include "cultsim/runner.h"
#include "json.hpp"

namespace {

using namespace cultsim;

constexpr int kConfigError = 2;
constexpr int kCapacityError = 3;

struct Sink {
    std::ofstream file;
    std::ostream *out = &std::cout;

    explicit Sink(const std::string &path) {
        if (!path.empty() && path != "-") {
            file.open(path);
            if (!file) {
                throw ConfigError("cannot write " + path);
            }
            out = &file;
        }
    }
    std::ostream &operator*() {
        return *out;
    }
};

Circuit read_circuit(const std::string &path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return parse(ss.str());
    }
    return parse_file(path);
}

// "a,b,c" or "start:stop:count" with stop excluded; "pi" may scale either form, e.g. "0:2pi:16".
double parse_number(std::string s) {
    double scale = 1;
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
        scale = std::numbers::pi;
        s = s.substr(0, s.size() - 2);
        if (s.empty()) {
            return scale;
        }
    }
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) {
        throw ConfigError("bad number: " + s);
    }
    return v * scale;
}

std::vector<double> parse_grid(const std::string &text) {
    std::vector<double> out;
    try {
        if (text.find(':') != std::string::npos) {
            std::vector<std::string> parts;
            std::stringstream ss(text);
            for (std::string p; std::getline(ss, p, ':');) {
                parts.push_back(p);
            }
            if (parts.size() != 3) {
                throw ConfigError("range grids look like start:stop:count");
            }
            double a = parse_number(parts[0]), b = parse_number(parts[1]);
            long n = std::stol(parts[2]);
            for (long i = 0; i < n; i++) {
                out.push_back(a + (b - a) * (double)i / (double)n);
            }
        } else {
            std::stringstream ss(text);
            for (std::string p; std::getline(ss, p, ',');) {
                if (!p.empty()) {
                    out.push_back(parse_number(p));
                }
            }
        }
    } catch (const std::logic_error &e) {
        throw ConfigError(std::string("bad grid '") + text + "': " + e.what());
    }
    if (out.empty()) {
        throw ConfigError("grid is empty");
    }
    return out;
}

// Options shared by build, simulate and sweep.
struct RunOptions {
    RunConfig config;
    std::string variant = "with_cultivation";
    std::string qec_mode = "full";
    std::string engine = "auto";
    std::string echoes = "on";
    std::string basis = "X";
    std::string policy;

    void add_circuit_options(CLI::App *app) {
        app->add_option("--experiment", config.experiment,
                        "injection|cultivation|qec|tomography|kt|kt-interleaved|graft|memory")
            ->capture_default_str();
        app->add_option("--theta", config.params.theta, "injection angle in radians")->capture_default_str();
        app->add_option("--cycles", config.params.n_cycles, "QEC or grafted cycles")->capture_default_str();
        app->add_option("--variant", variant, "with_cultivation|injection_only")->capture_default_str();
        app->add_option("--qec-mode", qec_mode, "full|interleaved|none")->capture_default_str();
        app->add_option("--basis", basis, "grafted readout basis X|Z")->capture_default_str();
        app->add_option("--echoes", echoes, "on|off")->capture_default_str();
        app->add_option("--p", config.p, "SI1000 noise strength")->capture_default_str();
        app->add_option("--noise-table", config.noise_table, "noise table file (default: shipped SI1000)");
        app->add_option("--detuning-khz", config.detuning_khz, "uniform detuning half-width")->capture_default_str();
        app->add_option("--seed", config.seed, "64-bit seed")->capture_default_str();
    }

    void add_run_options(CLI::App *app) {
        app->add_option("--engine", engine, "auto|ranked|dense")->capture_default_str();
        app->add_option("--shots", config.shots)->capture_default_str();
        app->add_option("--m-max", config.m_max, "ranked-state coefficient cap")->capture_default_str();
        app->add_option("--eps", config.eps, "ranked-state truncation threshold")->capture_default_str();
        app->add_option("--dense-threshold", config.dense_threshold, "live-qubit limit of the dense engine")
            ->capture_default_str();
        app->add_option("--threads", config.threads, "worker threads, 0 = all cores")->capture_default_str();
        app->add_option("--policy", policy, "post-selection policy as JSON");
        app->add_option("--level", config.level, "confidence level")->capture_default_str();
        app->add_flag("!--no-early-abort", config.early_abort, "run rejected shots to the end");
    }

    RunConfig resolve() {
        if (variant == "with_cultivation") {
            config.params.variant = Variant::with_cultivation;
        } else if (variant == "injection_only") {
            config.params.variant = Variant::injection_only;
        } else {
            throw ConfigError("unknown variant: " + variant);
        }
        if (qec_mode == "full") {
            config.params.qec_mode = QecMode::full;
        } else if (qec_mode == "interleaved") {
            config.params.qec_mode = QecMode::interleaved;
        } else if (qec_mode == "none") {
            config.params.qec_mode = QecMode::none;
        } else {
            throw ConfigError("unknown qec mode: " + qec_mode);
        }
        if (engine == "auto") {
            config.engine = EngineChoice::automatic;
        } else if (engine == "ranked") {
            config.engine = EngineChoice::ranked;
        } else if (engine == "dense") {
            config.engine = EngineChoice::dense;
        } else {
            throw ConfigError("unknown engine: " + engine);
        }
        if (echoes != "on" && echoes != "off") {
            throw ConfigError("--echoes takes on or off");
        }
        config.params.echoes = echoes == "on";
        if (basis.size() != 1) {
            throw ConfigError("--basis takes X or Z");
        }
        config.params.graft_basis = basis[0];
        if (!policy.empty()) {
            try {
                config.policy = PostselectPolicy::from_json(policy);
            } catch (const std::invalid_argument &e) {
                throw ConfigError(e.what());
            }
        }
        config.validate();
        return config;
    }
};

std::string header_line(const RunConfig &config, size_t measurements, size_t detectors) {
    nlohmann::ordered_json j;
    j["software"] = "cultsim 0.1.0";
    j["measurements"] = measurements;
    j["detectors"] = detectors;
    j["config"] = nlohmann::json::parse(config.to_json());
    return "# " + j.dump();
}

int cmd_build(RunOptions &o, const std::string &out, const std::string &style) {
    RunConfig c = o.resolve();
    Sink sink(out);
    *sink << emit(prepare_circuit(c), style == "listing" ? EmitStyle::listing : EmitStyle::spaced);
    return 0;
}

int cmd_parse(const std::string &in) {
    Circuit c = read_circuit(in);
    auto s = stats(c);
    nlohmann::ordered_json j;
    j["qubits"] = s.qubits;
    j["measurements"] = s.measurements;
    j["two_qubit_gates"] = s.two_qubit_gates;
    j["ticks"] = s.ticks;
    j["nonclifford_tags"] = s.nonclifford_tags;
    j["detectors"] = c.detectors().size();
    j["observables"] = c.num_observables();
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_emit(const std::string &in, const std::string &out, const std::string &style) {
    Circuit c = read_circuit(in);
    Sink sink(out);
    *sink << emit(c, style == "listing" ? EmitStyle::listing : EmitStyle::spaced);
    return 0;
}

int cmd_reorder(const std::string &in, const std::string &out, size_t restarts, uint64_t seed) {
    Circuit c = read_circuit(in);
    auto dag = build_dag(c);
    auto order = greedy_order(dag, seed, restarts);
    auto re = apply_order(dag, order);
    if (!out.empty()) {
        Sink sink(out);
        *sink << emit(re.circuit);
    }
    nlohmann::ordered_json j;
    j["peak"] = order.peak;
    j["average"] = order.average;
    j["original_peak"] = peak_live(to_destructive_form(c));
    j["record_permutation"] = re.record_permutation;
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_simulate(RunOptions &o, const std::string &shots_out, const std::string &summary_out) {
    RunConfig c = o.resolve();
    c.keep_shots = !shots_out.empty();
    RunResult r = run(c);
    if (!shots_out.empty()) {
        Sink sink(shots_out);
        size_t m = r.shots.empty() ? 0 : r.shots[0].measurements.size();
        *sink << header_line(c, m, r.num_detectors) << "\n";
        for (const auto &s : r.shots) {
            *sink << format_shot(s) << "\n";
        }
    }
    Sink sink(summary_out);
    *sink << r.to_json() << "\n";
    return 0;
}

int cmd_sweep(RunOptions &o, const std::string &axis_name, const std::string &grid_text, const std::string &out) {
    RunConfig c = o.resolve();
    SweepAxis axis;
    if (axis_name == "theta") {
        axis = SweepAxis::theta;
    } else if (axis_name == "p") {
        axis = SweepAxis::p;
    } else if (axis_name == "cycles") {
        axis = SweepAxis::cycles;
    } else {
        throw ConfigError("unknown sweep axis: " + axis_name);
    }
    auto grid = parse_grid(grid_text);
    auto results = sweep(c, axis, grid);
    Sink sink(out);
    *sink << sweep_csv_header() << "\n";
    for (const auto &r : results) {
        *sink << sweep_csv_row(r) << "\n";
    }
    return 0;
}

int cmd_analyze(const std::string &in, const std::string &policy_text, double level, bool fractions) {
    std::ifstream f(in);
    if (!f) {
        throw ConfigError("cannot read " + in);
    }
    std::string line;
    if (!std::getline(f, line) || line.rfind("# ", 0) != 0) {
        throw ConfigError("shot file lacks its header line");
    }
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line.substr(2));
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("bad shot file header: ") + e.what());
    }
    RunConfig config = RunConfig::from_json(header["config"].dump());
    size_t m = header.value("measurements", 0), d = header.value("detectors", 0);
    std::vector<ShotRecord> shots;
    while (std::getline(f, line)) {
        if (!line.empty()) {
            shots.push_back(parse_shot(line, m, d));
        }
    }
    PostselectPolicy policy = config.policy;
    if (!policy_text.empty()) {
        policy = PostselectPolicy::from_json(policy_text);
    }
    auto ps = postselect(shots, policy, level);
    nlohmann::ordered_json j;
    j["shots"] = shots.size();
    j["kept"] = ps.kept.size();
    j["retention"] = {{"value", ps.retention.value}, {"lo", ps.retention.ci.lo}, {"hi", ps.retention.ci.hi}};
    if (!ps.kept.empty() && !shots[0].observables.empty()) {
        auto le = logical_error(shots, 0, level);
        j["logical_error"] = {{"value", le.value}, {"errors", le.hits}, {"lo", le.ci.lo}, {"hi", le.ci.hi}};
    }
    if (fractions) {
        Circuit c = prepare_circuit(config);
        auto fr = detection_fractions(shots, c, level);
        nlohmann::ordered_json by_time = nlohmann::json::object();
        for (auto [t, v] : mean_by_time(fr)) {
            std::ostringstream k;
            k << t;
            by_time[k.str()] = v;
        }
        j["detection_fraction_by_time"] = by_time;
        // Aborted shots stop recording at their first event, which biases later detectors low.
        j["truncated_by_early_abort"] = config.early_abort && config.policy.all_detectors;
        std::vector<double> per;
        for (const auto &x : fr) {
            per.push_back(x.rate.value);
        }
        j["detection_fractions"] = per;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_tilt(double angle, size_t shots, uint64_t seed) {
    auto t = tilted_tomography(angle);
    std::cout.setf(std::ios::fixed);
    std::cout.precision(4);
    std::cout << "keep " << t.keep_x << " " << t.keep_y << " " << t.keep_z << "\n";
    std::cout << "kept " << t.x_kept << " " << t.y_kept << " " << t.z_kept << "\n";
    std::cout << "xy_norm2 " << t.x_kept * t.x_kept + t.y_kept * t.y_kept << "\n";
    if (shots > 0) {
        auto s = sample_tilted_tomography(shots, seed, angle);
        std::cout << "sampled_keep " << s.keep[0] << " " << s.keep[1] << " " << s.keep[2] << "\n";
        std::cout << "sampled_kept " << s.bloch[0] << " " << s.bloch[1] << " " << s.bloch[2] << "\n";
        std::cout << "sampled_sigma " << s.sigma[0] << " " << s.sigma[1] << " " << s.sigma[2] << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"cultsim: magic-state cultivation circuits and simulators"};
    app.require_subcommand(1);

    RunOptions build_opts;
    std::string build_out, build_style = "spaced";
    auto *build = app.add_subcommand("build", "emit a protocol circuit");
    build_opts.add_circuit_options(build);
    build->add_option("--out", build_out, "output file (default stdout)");
    build->add_option("--style", build_style, "spaced|listing")->capture_default_str();

    std::string parse_in;
    auto *parse_cmd = app.add_subcommand("parse", "parse a circuit and print its statistics");
    parse_cmd->add_option("--in", parse_in, "circuit file or -")->required();

    std::string emit_in, emit_out, emit_style = "spaced";
    auto *emit_cmd = app.add_subcommand("emit", "re-emit a circuit canonically");
    emit_cmd->add_option("--in", emit_in, "circuit file or -")->required();
    emit_cmd->add_option("--out", emit_out, "output file (default stdout)");
    emit_cmd->add_option("--style", emit_style, "spaced|listing")->capture_default_str();

    std::string reorder_in, reorder_out;
    size_t restarts = 16;
    uint64_t reorder_seed = 0;
    auto *reorder = app.add_subcommand("reorder", "reorder resets and measurements to cut live qubits");
    reorder->add_option("--in", reorder_in, "circuit file or -")->required();
    reorder->add_option("--out", reorder_out, "write the reordered circuit here");
    reorder->add_option("--restarts", restarts)->capture_default_str();
    reorder->add_option("--seed", reorder_seed)->capture_default_str();

    RunOptions sim_opts;
    std::string shots_out, summary_out;
    auto *simulate = app.add_subcommand("simulate", "sample shots and summarize them");
    sim_opts.add_circuit_options(simulate);
    sim_opts.add_run_options(simulate);
    simulate->add_option("--shots-out", shots_out, "write one line per shot here");
    simulate->add_option("--summary", summary_out, "JSON summary file (default stdout)");

    RunOptions sweep_opts;
    std::string axis = "theta", grid, sweep_out;
    auto *sweep_cmd = app.add_subcommand("sweep", "one simulation per grid value, as CSV");
    sweep_opts.add_circuit_options(sweep_cmd);
    sweep_opts.add_run_options(sweep_cmd);
    sweep_cmd->add_option("--axis", axis, "theta|p|cycles")->capture_default_str();
    sweep_cmd->add_option("--grid", grid, "a,b,c or start:stop:count (e.g. 0:2pi:16)")->required();
    sweep_cmd->add_option("--out", sweep_out, "CSV file (default stdout)");

    std::string analyze_in, analyze_policy;
    double analyze_level = 0.68;
    bool fractions = false;
    auto *analyze = app.add_subcommand("analyze", "recompute estimates from a shot file");
    analyze->add_option("--shots", analyze_in, "shot file written by simulate")->required();
    analyze->add_option("--policy", analyze_policy, "post-selection policy JSON (default: the run's)");
    analyze->add_option("--level", analyze_level)->capture_default_str();
    analyze->add_flag("--detection-fractions", fractions, "per-detector event rates");

    double tilt_angle = -10.0;
    size_t tilt_shots = 0;
    uint64_t tilt_seed = 0;
    auto *tilt = app.add_subcommand("tomography-tilt", "post-selected tomography of the tilted magic state");
    tilt->add_option("--angle", tilt_angle, "tilt in degrees")->capture_default_str();
    tilt->add_option("--shots", tilt_shots, "also sample this many shots per axis")->capture_default_str();
    tilt->add_option("--seed", tilt_seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kConfigError;
    }

    try {
        if (*build) {
            return cmd_build(build_opts, build_out, build_style);
        }
        if (*parse_cmd) {
            return cmd_parse(parse_in);
        }
        if (*emit_cmd) {
            return cmd_emit(emit_in, emit_out, emit_style);
        }
        if (*reorder) {
            return cmd_reorder(reorder_in, reorder_out, restarts, reorder_seed);
        }
        if (*simulate) {
            return cmd_simulate(sim_opts, shots_out, summary_out);
        }
        if (*sweep_cmd) {
            return cmd_sweep(sweep_opts, axis, grid, sweep_out);
        }
        if (*analyze) {
            return cmd_analyze(analyze_in, analyze_policy, analyze_level, fractions);
        }
        if (*tilt) {
            return cmd_tilt(tilt_angle, tilt_shots, tilt_seed);
        }
    } catch (const CapacityError &e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
