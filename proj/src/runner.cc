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

#include "cultsim/runner.h"

#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cultsim/reorder.h"
#include "json.hpp"

namespace cultsim {

namespace {

const char *variant_name(Variant v) {
    return v == Variant::injection_only ? "injection_only" : "with_cultivation";
}

const char *qec_name(QecMode m) {
    switch (m) {
        case QecMode::full:
            return "full";
        case QecMode::interleaved:
            return "interleaved";
        default:
            return "none";
    }
}

const char *engine_name(EngineChoice e) {
    switch (e) {
        case EngineChoice::ranked:
            return "ranked";
        case EngineChoice::dense:
            return "dense";
        default:
            return "auto";
    }
}

bool is_known_experiment(const std::string &name) {
    for (const char *n : {"injection", "cultivation", "qec", "tomography", "kt", "kt-interleaved", "graft", "memory"}) {
        if (name == n) {
            return true;
        }
    }
    return false;
}

}  // namespace

void RunConfig::validate() const {
    if (!is_known_experiment(experiment)) {
        throw ConfigError("unknown experiment: " + experiment);
    }
    try {
        params.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    if (shots < 1) {
        throw ConfigError("shots must be at least 1");
    }
    if (!(p >= 0 && p <= 0.05)) {
        throw ConfigError("p must lie in [0, 0.05]");
    }
    if (!(detuning_khz >= 0)) {
        throw ConfigError("detuning must be non-negative");
    }
    if (m_max < 1 || !(eps >= 0 && eps < 1)) {
        throw ConfigError("m_max must be positive and eps in [0, 1)");
    }
    if (!(level > 0 && level < 1)) {
        throw ConfigError("confidence level must lie in (0, 1)");
    }
    if ((experiment == "graft" || experiment == "memory") && params.n_cycles < 2) {
        throw ConfigError("grafted experiments need at least two cycles");
    }
}

std::string RunConfig::to_json() const {
    nlohmann::ordered_json j;
    j["experiment"] = experiment;
    j["theta"] = params.theta;
    j["variant"] = variant_name(params.variant);
    j["qec_mode"] = qec_name(params.qec_mode);
    j["cycles"] = params.n_cycles;
    j["echoes"] = params.echoes;
    j["graft_basis"] = std::string(1, params.graft_basis);
    j["engine"] = engine_name(engine);
    j["shots"] = shots;
    j["seed"] = seed;
    j["p"] = p;
    j["noise_table"] = noise_table;
    j["detuning_khz"] = detuning_khz;
    j["m_max"] = m_max;
    j["eps"] = eps;
    j["dense_threshold"] = dense_threshold;
    j["early_abort"] = early_abort;
    j["policy"] = nlohmann::json::parse(policy.to_json());
    j["level"] = level;
    return j.dump();
}

RunConfig RunConfig::from_json(std::string_view text) {
    RunConfig c;
    try {
        auto j = nlohmann::json::parse(text);
        c.experiment = j.value("experiment", c.experiment);
        c.params.theta = j.value("theta", c.params.theta);
        std::string v = j.value("variant", std::string(variant_name(c.params.variant)));
        if (v != "injection_only" && v != "with_cultivation") {
            throw ConfigError("unknown variant: " + v);
        }
        c.params.variant = v == "injection_only" ? Variant::injection_only : Variant::with_cultivation;
        std::string q = j.value("qec_mode", std::string("full"));
        if (q == "full") {
            c.params.qec_mode = QecMode::full;
        } else if (q == "interleaved") {
            c.params.qec_mode = QecMode::interleaved;
        } else if (q == "none") {
            c.params.qec_mode = QecMode::none;
        } else {
            throw ConfigError("unknown qec mode: " + q);
        }
        c.params.n_cycles = j.value("cycles", c.params.n_cycles);
        c.params.echoes = j.value("echoes", c.params.echoes);
        std::string b = j.value("graft_basis", std::string("X"));
        c.params.graft_basis = b.empty() ? 'X' : b[0];
        std::string e = j.value("engine", std::string("auto"));
        if (e == "auto") {
            c.engine = EngineChoice::automatic;
        } else if (e == "ranked") {
            c.engine = EngineChoice::ranked;
        } else if (e == "dense") {
            c.engine = EngineChoice::dense;
        } else {
            throw ConfigError("unknown engine: " + e);
        }
        c.shots = j.value("shots", c.shots);
        c.seed = j.value("seed", c.seed);
        c.p = j.value("p", c.p);
        c.noise_table = j.value("noise_table", c.noise_table);
        c.detuning_khz = j.value("detuning_khz", c.detuning_khz);
        c.m_max = j.value("m_max", c.m_max);
        c.eps = j.value("eps", c.eps);
        c.dense_threshold = j.value("dense_threshold", c.dense_threshold);
        c.early_abort = j.value("early_abort", c.early_abort);
        if (j.contains("policy")) {
            c.policy = PostselectPolicy::from_json(j["policy"].dump());
        }
        c.level = j.value("level", c.level);
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("bad run config: ") + e.what());
    } catch (const ConfigError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return c;
}

Circuit prepare_circuit(const RunConfig &config) {
    config.validate();
    Circuit c = build_experiment(config.experiment, config.params);
    if (config.experiment == "tomography" && config.params.variant == Variant::with_cultivation) {
        c = strip_final_readout(c);
    }
    if (!config.params.echoes) {
        c = strip_echoes(c);
    }
    if (config.detuning_khz > 0) {
        std::seed_seq seq{(uint32_t)config.seed, (uint32_t)(config.seed >> 32), 0xde7u};
        std::mt19937_64 rng(seq);
        c = apply_detuning(c, sample_detunings(rng, c.num_qubits(), config.detuning_khz * 1e3));
    }
    if (config.p > 0) {
        NoiseModel model = NoiseModel::si1000(config.p);
        if (!config.noise_table.empty()) {
            try {
                model.table = NoiseTable::load(config.noise_table);
            } catch (const std::exception &e) {
                throw ConfigError(e.what());
            }
        }
        c = apply_noise(c, model);
    }
    return c;
}

std::vector<uint32_t> tomography_data_qubits(Variant v) {
    if (v == Variant::injection_only) {
        return {0, 1, 3, 5, 7, 8, 10};
    }
    return {0, 2, 3, 5, 8, 10, 11};
}

std::vector<std::vector<uint32_t>> tomography_plaquettes(Variant v) {
    if (v == Variant::injection_only) {
        return {{0, 1, 3, 5}, {1, 3, 7, 8}, {3, 5, 7, 10}};
    }
    return {{0, 3, 5, 8}, {0, 2, 5, 10}, {2, 3, 5, 11}};
}

std::array<PauliString, 3> logical_paulis(size_t num_qubits, const std::vector<uint32_t> &data) {
    std::array<PauliString, 3> out = {PauliString(num_qubits), PauliString(num_qubits), PauliString(num_qubits)};
    const char axes[3] = {'X', 'Y', 'Z'};
    for (int a = 0; a < 3; a++) {
        for (uint32_t q : data) {
            out[a].set(q, axes[a]);
        }
    }
    // X^7 Z^7 = (-i)^7 Y^7 = i Y^7, so i X Z = -Y^7.
    out[1].log_i = 2;
    return out;
}

Circuit strip_final_readout(const Circuit &c) {
    size_t last_m = c.ops.size();
    for (size_t i = 0; i < c.ops.size(); i++) {
        if (c.ops[i].kind() == OpKind::measure) {
            last_m = i;
        }
    }
    if (last_m == c.ops.size()) {
        throw std::invalid_argument("circuit has no measurement to strip");
    }
    size_t cut = last_m;
    while (cut > 0 && (c.ops[cut - 1].name == "TICK" || c.ops[cut - 1].name == "H")) {
        cut--;
        if (c.ops[cut].name == "H") {
            break;
        }
    }
    Circuit out;
    out.ops.assign(c.ops.begin(), c.ops.begin() + (long)cut);
    return out;
}

namespace {

struct Prepared {
    Circuit circuit;
    Backend backend = Backend::ranked;
    /// Set when the dense engine runs a reordered copy.
    std::optional<Reordered> reordered;
    size_t peak_live = 0;
};

Prepared choose_engine(const RunConfig &config, Circuit c) {
    Prepared out;
    bool want_dense = config.engine == EngineChoice::dense;
    if (config.engine != EngineChoice::ranked) {
        auto dag = build_dag(c);
        auto order = greedy_order(dag, config.seed, 16);
        out.peak_live = order.peak;
        if (config.engine == EngineChoice::automatic) {
            want_dense = order.peak <= config.dense_threshold;
        } else if (order.peak > config.dense_threshold) {
            throw CapacityError("dense engine needs " + std::to_string(order.peak) + " live qubits, limit is " +
                                std::to_string(config.dense_threshold));
        }
        if (want_dense) {
            out.reordered = apply_order(dag, order);
        }
    }
    out.backend = want_dense ? Backend::dense : Backend::ranked;
    out.circuit = std::move(c);
    return out;
}

std::vector<uint8_t> unpermute(const std::vector<uint8_t> &rec, const std::vector<size_t> &perm) {
    std::vector<uint8_t> out(perm.size(), 0);
    for (size_t r = 0; r < perm.size(); r++) {
        out[r] = rec[perm[r]];
    }
    return out;
}

}  // namespace

RunResult run(const RunConfig &config) {
    Circuit c = prepare_circuit(config);
    Prepared prep = choose_engine(config, c);
    const bool tomography = config.experiment == "tomography";

    EngineOptions opt;
    opt.backend = prep.backend;
    opt.theta = config.params.theta;
    opt.m_max = config.m_max;
    opt.eps = config.eps;
    opt.dense_cap = std::max<size_t>(config.dense_threshold, 1);
    // Reordered circuits list detectors in a different order, so aborted shots could not be
    // mapped back; the dense engine is cheap enough to run every shot to the end.
    opt.early_abort = config.early_abort && config.policy.all_detectors && !prep.reordered;
    Engine engine(prep.reordered ? prep.reordered->circuit : prep.circuit, opt);

    std::vector<PauliString> finals;
    if (tomography) {
        auto l = logical_paulis(engine.circuit().num_qubits(), tomography_data_qubits(config.params.variant));
        finals.assign(l.begin(), l.end());
    }
    RecordEvaluation ref_eval;
    if (prep.reordered) {
        ref_eval = evaluate_records(prep.circuit, unpermute(engine.reference_record(), prep.reordered->record_permutation));
    }
    const size_t num_meas = prep.circuit.num_measurements();
    const size_t num_dets = prep.circuit.detectors().size();

    std::vector<ShotRecord> shots(config.shots);
    std::vector<std::vector<double>> expectations(tomography ? config.shots : 0);
    std::vector<size_t> peak_m(config.shots, 0), peak_live(config.shots, 0);
    size_t workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, config.shots);
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto work = [&](size_t w) {
        try {
            for (size_t s = w; s < config.shots; s += workers) {
                ShotResult r = engine.run(config.seed, s, finals);
                ShotRecord rec;
                if (prep.reordered) {
                    rec.measurements = unpermute(r.record, prep.reordered->record_permutation);
                    auto ev = evaluate_records(prep.circuit, rec.measurements);
                    for (size_t d = 0; d < ev.detectors.size(); d++) {
                        rec.detectors.push_back(ev.detectors[d] ^ ref_eval.detectors[d]);
                    }
                    for (size_t o = 0; o < ev.observables.size(); o++) {
                        rec.observables.push_back(ev.observables[o] ^ ref_eval.observables[o]);
                    }
                } else {
                    rec = ShotRecord::from_result(r);
                    // Aborted shots are padded; the event that stopped them is kept.
                    rec.measurements.resize(num_meas, 0);
                    rec.detectors.resize(num_dets, 0);
                    rec.observables.resize(prep.circuit.num_observables(), 0);
                }
                shots[s] = std::move(rec);
                peak_m[s] = r.peak_m;
                peak_live[s] = r.peak_live;
                if (tomography) {
                    expectations[s] = std::move(r.expectations);
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> g(failure_lock);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (size_t w = 0; w < workers; w++) {
            pool.emplace_back(work, w);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    RunResult out;
    out.config = config;
    out.backend = prep.backend == Backend::dense ? "dense" : "ranked";
    out.num_qubits = prep.circuit.num_qubits();
    out.num_detectors = num_dets;
    out.peak_live = prep.peak_live;
    for (size_t s = 0; s < config.shots; s++) {
        out.peak_m = std::max(out.peak_m, peak_m[s]);
        out.peak_live = std::max(out.peak_live, peak_live[s]);
    }
    Postselection ps;
    try {
        ps = postselect(shots, config.policy, config.level);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    out.kept = ps.kept.size();
    out.retention = ps.retention;
    if (!tomography && out.kept > 0 && prep.circuit.num_observables() > 0) {
        out.logical_error = logical_error(shots, 0, config.level);
        uint8_t ref = ref_eval.observables.empty()
                          ? evaluate_records(prep.circuit, engine.reference_record()).observables[0]
                          : ref_eval.observables[0];
        size_t ones = ref ? out.kept - out.logical_error->hits : out.logical_error->hits;
        out.raw_observable = binomial_estimate(ones, out.kept, config.level);
    }
    if (tomography && out.kept > 0) {
        std::array<double, 3> mean = {0, 0, 0}, sq = {0, 0, 0};
        for (size_t s : ps.kept) {
            for (int a = 0; a < 3; a++) {
                mean[a] += expectations[s][a];
                sq[a] += expectations[s][a] * expectations[s][a];
            }
        }
        double k = (double)out.kept;
        for (int a = 0; a < 3; a++) {
            mean[a] /= k;
            double var = std::max(0.0, sq[a] / k - mean[a] * mean[a]);
            out.bloch_sigma[a] = std::sqrt(var / k);
        }
        out.bloch = mean;
    }
    if (config.keep_shots) {
        out.shots = std::move(shots);
    }
    return out;
}

std::string RunResult::to_json() const {
    nlohmann::ordered_json j;
    j["software"] = "cultsim 0.1.0";
    j["config"] = nlohmann::json::parse(config.to_json());
    j["backend"] = backend;
    j["num_qubits"] = num_qubits;
    j["num_detectors"] = num_detectors;
    j["peak_live"] = peak_live;
    j["peak_m"] = peak_m;
    j["shots"] = config.shots;
    j["kept"] = kept;
    j["retention"] = {{"value", retention.value}, {"lo", retention.ci.lo}, {"hi", retention.ci.hi}};
    if (logical_error) {
        j["logical_error"] = {{"value", logical_error->value},
                              {"errors", logical_error->hits},
                              {"lo", logical_error->ci.lo},
                              {"hi", logical_error->ci.hi}};
    }
    if (raw_observable) {
        j["logical_expectation"] = 1 - 2 * raw_observable->value;
    }
    if (bloch) {
        j["bloch"] = *bloch;
        j["bloch_sigma"] = bloch_sigma;
    }
    return j.dump(2);
}

TomographyResult transversal_tomography(const RunConfig &config) {
    RunConfig c = config;
    c.experiment = "tomography";
    Circuit circuit = prepare_circuit(c);
    Prepared prep = choose_engine(c, circuit);
    EngineOptions opt;
    opt.backend = prep.backend;
    opt.theta = c.params.theta;
    opt.m_max = c.m_max;
    opt.eps = c.eps;
    opt.dense_cap = std::max<size_t>(c.dense_threshold, 1);
    opt.early_abort = true;
    Engine engine(prep.reordered ? prep.reordered->circuit : prep.circuit, opt);

    // Per axis: the 8 plaquette-subset products, then the same times the transversal logical.
    // Keep probability is the mean of the first group, the kept numerator the mean of the second.
    auto data = tomography_data_qubits(c.params.variant);
    auto plaquettes = tomography_plaquettes(c.params.variant);
    size_t n = engine.circuit().num_qubits();
    std::vector<PauliString> finals;
    const char axes[3] = {'X', 'Y', 'Z'};
    for (char b : axes) {
        for (int with_logical = 0; with_logical < 2; with_logical++) {
            for (int mask = 0; mask < 8; mask++) {
                std::set<uint32_t> support;
                if (with_logical) {
                    support.insert(data.begin(), data.end());
                }
                for (int g = 0; g < 3; g++) {
                    if ((mask >> g) & 1) {
                        for (uint32_t q : plaquettes[g]) {
                            if (!support.erase(q)) {
                                support.insert(q);
                            }
                        }
                    }
                }
                PauliString p(n);
                for (uint32_t q : support) {
                    p.set(q, b);
                }
                finals.push_back(p);
            }
        }
    }
    std::array<double, 3> keep_sum = {0, 0, 0}, num_sum = {0, 0, 0};
    size_t kept = 0;
    for (size_t s = 0; s < c.shots; s++) {
        ShotResult r = engine.run(c.seed, s, finals);
        // Detector order differs after reordering, but any event still means rejection.
        if (r.aborted || r.any_event()) {
            continue;
        }
        kept++;
        for (int a = 0; a < 3; a++) {
            for (int m = 0; m < 8; m++) {
                keep_sum[a] += r.expectations[a * 16 + m] / 8;
                num_sum[a] += r.expectations[a * 16 + 8 + m] / 8;
            }
        }
    }
    if (kept == 0) {
        throw ConfigError("no trajectory passed the detectors");
    }
    TomographyResult out;
    for (int a = 0; a < 3; a++) {
        out.shots[a] = c.shots;
        out.kept[a] = kept;
        out.keep[a] = keep_sum[a] / (double)kept;
        out.bloch[a] = num_sum[a] / keep_sum[a];
    }
    return out;
}

std::vector<RunResult> sweep(const RunConfig &base, SweepAxis axis, const std::vector<double> &grid) {
    if (grid.empty()) {
        throw ConfigError("sweep grid is empty");
    }
    std::vector<RunResult> out;
    for (double v : grid) {
        RunConfig c = base;
        switch (axis) {
            case SweepAxis::theta:
                c.params.theta = v;
                break;
            case SweepAxis::p:
                c.p = v;
                break;
            case SweepAxis::cycles:
                if (!(v >= 1 && v == std::floor(v))) {
                    throw ConfigError("cycle counts must be positive integers");
                }
                c.params.n_cycles = (size_t)v;
                break;
        }
        out.push_back(run(c));
    }
    return out;
}

std::string sweep_csv_header() {
    return "experiment,variant,theta,p,cycles,seed,shots,kept,retention,retention_lo,retention_hi,"
           "logical_error,logical_error_lo,logical_error_hi,bloch_x,bloch_y,bloch_z,bloch_x_sigma,"
           "bloch_y_sigma,bloch_z_sigma";
}

std::string sweep_csv_row(const RunResult &r) {
    std::ostringstream s;
    s.precision(12);
    const auto &c = r.config;
    s << c.experiment << ',' << variant_name(c.params.variant) << ',' << c.params.theta << ',' << c.p << ','
      << c.params.n_cycles << ',' << c.seed << ',' << c.shots << ',' << r.kept << ',' << r.retention.value << ','
      << r.retention.ci.lo << ',' << r.retention.ci.hi << ',';
    if (r.logical_error) {
        s << r.logical_error->value << ',' << r.logical_error->ci.lo << ',' << r.logical_error->ci.hi;
    } else {
        s << ",,";
    }
    for (int a = 0; a < 3; a++) {
        s << ',';
        if (r.bloch) {
            s << (*r.bloch)[a];
        }
    }
    for (int a = 0; a < 3; a++) {
        s << ',';
        if (r.bloch) {
            s << r.bloch_sigma[a];
        }
    }
    return s.str();
}

}  // namespace cultsim
