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

#include "cultsim/noise.h"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cultsim {

namespace {

bool is_channel(OpKind k) {
    switch (k) {
        case OpKind::gate1:
        case OpKind::gate2:
        case OpKind::measure:
        case OpKind::measure_pauli:
        case OpKind::reset:
            return true;
        default:
            return false;
    }
}

std::vector<uint32_t> touched(const Instruction &op) {
    std::vector<uint32_t> qs;
    for (const auto &t : op.targets) {
        if (t.kind == Target::Kind::qubit) {
            qs.push_back(t.value);
        }
        for (const auto &f : t.product) {
            qs.push_back(f.second);
        }
    }
    return qs;
}

// Half-open ranges of ops between TICKs. The TICK itself closes its layer.
std::vector<std::pair<size_t, size_t>> layers(const Circuit &c) {
    std::vector<std::pair<size_t, size_t>> out;
    size_t start = 0;
    for (size_t i = 0; i < c.ops.size(); i++) {
        if (c.ops[i].kind() == OpKind::tick) {
            out.emplace_back(start, i);
            start = i + 1;
        }
    }
    out.emplace_back(start, c.ops.size());
    return out;
}

std::set<uint32_t> used_qubits(const Circuit &c) {
    std::set<uint32_t> used;
    for (const auto &op : c.ops) {
        if (is_channel(op.kind())) {
            for (uint32_t q : touched(op)) {
                used.insert(q);
            }
        }
    }
    return used;
}

struct LayerInfo {
    bool physical = false;
    bool window = false;
    std::set<uint32_t> busy;
};

LayerInfo inspect(const Circuit &c, size_t a, size_t b) {
    LayerInfo info;
    for (size_t i = a; i < b; i++) {
        const Instruction &op = c.ops[i];
        OpKind k = op.kind();
        if (!is_channel(k) || is_virtual(op)) {
            continue;
        }
        info.physical = true;
        if (k == OpKind::measure || k == OpKind::measure_pauli || k == OpKind::reset) {
            info.window = true;
        }
        for (uint32_t q : touched(op)) {
            info.busy.insert(q);
        }
    }
    return info;
}

Instruction channel(const char *name, std::vector<Target> targets, double p) {
    return Instruction{name, "", {p}, std::move(targets)};
}

}  // namespace

NoiseTable NoiseTable::parse(std::string_view text) {
    NoiseTable t;
    std::map<std::string, double *> slots = {
        {"two_qubit_gate", &t.two_qubit_gate},
        {"one_qubit_gate", &t.one_qubit_gate},
        {"reset", &t.reset},
        {"measurement", &t.measurement},
        {"idle", &t.idle},
        {"measurement_window_idle", &t.measurement_window_idle},
    };
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (auto h = line.find('#'); h != std::string::npos) {
            line.resize(h);
        }
        std::istringstream row(line);
        std::string cls, chan;
        double scale;
        if (!(row >> cls)) {
            continue;
        }
        if (!(row >> chan >> scale) || scale < 0) {
            throw std::invalid_argument("noise table line " + std::to_string(line_no) + ": malformed row");
        }
        auto it = slots.find(cls);
        if (it == slots.end()) {
            throw std::invalid_argument("noise table line " + std::to_string(line_no) + ": unknown class " + cls);
        }
        *it->second = scale;
    }
    return t;
}

NoiseTable NoiseTable::load(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot open noise table " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

NoiseModel NoiseModel::si1000(double p) {
    return NoiseModel{p, NoiseTable{}};
}

bool is_virtual(const Instruction &op) {
    if (op.tag == "conjugate") {
        return true;
    }
    return op.name == "I" && (op.tag == "echo" || op.tag == "injection");
}

Circuit apply_noise(const Circuit &c, const NoiseModel &model) {
    double p = model.p;
    if (!(p >= 0 && p <= 0.1)) {
        throw std::invalid_argument("noise strength must lie in [0, 0.1]");
    }
    if (p == 0) {
        return c;
    }
    const NoiseTable &t = model.table;
    for (double s : {t.two_qubit_gate, t.one_qubit_gate, t.reset, t.measurement, t.idle, t.measurement_window_idle}) {
        if (s * p > 1) {
            throw std::invalid_argument("noise table gives a probability above 1");
        }
    }
    auto used = used_qubits(c);
    Circuit out;
    for (auto [a, b] : layers(c)) {
        LayerInfo info = inspect(c, a, b);
        for (size_t i = a; i < b; i++) {
            Instruction op = c.ops[i];
            OpKind k = op.kind();
            if (!is_channel(k) || is_virtual(op)) {
                out.ops.push_back(std::move(op));
                continue;
            }
            switch (k) {
                case OpKind::gate2: {
                    auto targets = op.targets;
                    out.ops.push_back(std::move(op));
                    out.ops.push_back(channel("DEPOLARIZE2", std::move(targets), t.two_qubit_gate * p));
                    break;
                }
                case OpKind::gate1: {
                    auto targets = op.targets;
                    out.ops.push_back(std::move(op));
                    out.ops.push_back(channel("DEPOLARIZE1", std::move(targets), t.one_qubit_gate * p));
                    break;
                }
                case OpKind::reset: {
                    auto targets = op.targets;
                    const char *name = basis_of(op.name) == 'X' ? "Z_ERROR" : "X_ERROR";
                    out.ops.push_back(std::move(op));
                    out.ops.push_back(channel(name, std::move(targets), t.reset * p));
                    break;
                }
                case OpKind::measure:
                case OpKind::measure_pauli: {
                    double f = t.measurement * p;
                    double old = op.args.empty() ? 0.0 : op.args[0];
                    op.args = {old + f - 2 * old * f};
                    out.ops.push_back(std::move(op));
                    break;
                }
                default:
                    out.ops.push_back(std::move(op));
            }
        }
        if (info.physical) {
            std::vector<Target> idle;
            for (uint32_t q : used) {
                if (!info.busy.count(q)) {
                    idle.push_back(Target::qubit(q));
                }
            }
            if (!idle.empty()) {
                double s = info.window ? t.measurement_window_idle : t.idle;
                out.ops.push_back(channel("DEPOLARIZE1", std::move(idle), s * p));
            }
        }
        if (b < c.ops.size()) {
            out.ops.push_back(c.ops[b]);
        }
    }
    return out;
}

Circuit apply_si1000(const Circuit &c, double p) {
    return apply_noise(c, NoiseModel::si1000(p));
}

double DetuningProfile::layer_phase(size_t q) const {
    return 2 * std::numbers::pi * offsets_hz.at(q) * layer_duration;
}

DetuningProfile sample_detunings(std::mt19937_64 &rng, size_t num_qubits, double range_hz) {
    if (!(range_hz >= 0)) {
        throw std::invalid_argument("detuning range must be non-negative");
    }
    DetuningProfile prof;
    prof.range_hz = range_hz;
    prof.offsets_hz.assign(num_qubits, 0.0);
    if (range_hz > 0) {
        std::uniform_real_distribution<double> dist(-range_hz, range_hz);
        for (double &f : prof.offsets_hz) {
            f = dist(rng);
        }
    }
    return prof;
}

Circuit apply_detuning(const Circuit &c, const DetuningProfile &profile) {
    auto ls = layers(c);
    if (ls.size() == 1) {
        throw std::invalid_argument("apply_detuning needs a circuit layered by TICK");
    }
    auto used = used_qubits(c);
    if (!used.empty() && *used.rbegin() >= profile.offsets_hz.size()) {
        throw std::invalid_argument("detuning profile has fewer qubits than the circuit");
    }
    std::vector<double> sign(profile.offsets_hz.size(), 1.0);
    Circuit out;
    for (auto [a, b] : ls) {
        for (size_t i = a; i < b; i++) {
            const Instruction &op = c.ops[i];
            if (op.name == "I" && op.tag == "echo") {
                for (const auto &t : op.targets) {
                    sign[t.value] = -sign[t.value];
                }
            }
            out.ops.push_back(op);
        }
        LayerInfo info = inspect(c, a, b);
        if (info.physical && !info.window) {
            for (uint32_t q : used) {
                double phi = sign[q] * profile.layer_phase(q);
                if (phi != 0) {
                    out.ops.push_back(Instruction{"RZ", "detuning", {phi}, {Target::qubit(q)}});
                }
            }
        }
        if (b < c.ops.size()) {
            out.ops.push_back(c.ops[b]);
        }
    }
    return out;
}

std::vector<double> net_detuning_phase(const Circuit &detuned) {
    std::vector<double> net(detuned.num_qubits(), 0.0);
    for (const auto &op : detuned.ops) {
        if (op.name == "RZ" && op.tag == "detuning") {
            for (const auto &t : op.targets) {
                net[t.value] += op.args[0];
            }
        }
    }
    return net;
}

Circuit strip_echoes(const Circuit &c) {
    Circuit out;
    for (const auto &op : c.ops) {
        if (!(op.name == "I" && op.tag == "echo")) {
            out.ops.push_back(op);
        }
    }
    return out;
}

Circuit insert_echoes(const Circuit &c) {
    auto ls = layers(c);
    size_t nq = c.num_qubits();
    // Per qubit: layers holding an H, layers where it is busy, and whether it has an echo or a
    // non-Clifford operation in a given layer.
    std::vector<std::vector<size_t>> h_layers(nq);
    std::vector<std::set<size_t>> busy(nq), blocked(nq);
    std::vector<uint8_t> has_echo(nq, 0);
    for (size_t l = 0; l < ls.size(); l++) {
        for (size_t i = ls[l].first; i < ls[l].second; i++) {
            const Instruction &op = c.ops[i];
            if (!is_channel(op.kind())) {
                continue;
            }
            for (uint32_t q : touched(op)) {
                busy[q].insert(l);
                if (op.name == "I" && op.tag == "echo") {
                    has_echo[q] = 1;
                }
                if (is_nonclifford_tag(op) || op.tag == "conjugate") {
                    blocked[q].insert(l);
                }
                if (op.name == "H" && op.tag.empty()) {
                    h_layers[q].push_back(l);
                }
            }
        }
    }
    std::vector<std::vector<uint32_t>> echo_at(ls.size());
    for (size_t q = 0; q < nq; q++) {
        if (has_echo[q]) {
            continue;
        }
        for (size_t j = 0; j + 1 < h_layers[q].size(); j++) {
            size_t a = h_layers[q][j], b = h_layers[q][j + 1];
            auto lo = blocked[q].lower_bound(a);
            if (lo != blocked[q].end() && *lo < b) {
                continue;
            }
            // Idle layer nearest the midpoint.
            size_t best = 0;
            double best_dist = -1;
            for (size_t l = a + 1; l < b; l++) {
                if (busy[q].count(l) || inspect(c, ls[l].first, ls[l].second).window) {
                    continue;
                }
                double dist = std::abs((double)l - 0.5 * (double)(a + b));
                if (best_dist < 0 || dist < best_dist) {
                    best = l;
                    best_dist = dist;
                }
            }
            if (best_dist >= 0) {
                echo_at[best].push_back((uint32_t)q);
            }
        }
    }
    Circuit out;
    for (size_t l = 0; l < ls.size(); l++) {
        auto [a, b] = ls[l];
        for (size_t i = a; i < b; i++) {
            out.ops.push_back(c.ops[i]);
        }
        if (!echo_at[l].empty()) {
            Instruction echo{"I", "echo", {}, {}};
            for (uint32_t q : echo_at[l]) {
                echo.targets.push_back(Target::qubit(q));
            }
            out.ops.push_back(std::move(echo));
        }
        if (b < c.ops.size()) {
            out.ops.push_back(c.ops[b]);
        }
    }
    return out;
}

}  // namespace cultsim
