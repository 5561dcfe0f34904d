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

#include "cultsim/circuit.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cultsim {

namespace {

const GateInfo kGates[] = {
    {"I", OpKind::gate1},
    {"X", OpKind::gate1},
    {"Y", OpKind::gate1},
    {"Z", OpKind::gate1},
    {"H", OpKind::gate1},
    {"H_YZ", OpKind::gate1},
    {"H_XY", OpKind::gate1},
    {"S", OpKind::gate1},
    {"S_DAG", OpKind::gate1},
    {"SQRT_X", OpKind::gate1},
    {"SQRT_X_DAG", OpKind::gate1},
    {"SQRT_Y", OpKind::gate1},
    {"SQRT_Y_DAG", OpKind::gate1},
    {"CX", OpKind::gate2},
    {"CY", OpKind::gate2},
    {"CZ", OpKind::gate2},
    {"SWAP", OpKind::gate2},
    {"M", OpKind::measure},
    {"MX", OpKind::measure},
    {"MD", OpKind::measure},
    {"MXD", OpKind::measure},
    {"MPP", OpKind::measure_pauli},
    {"R", OpKind::reset},
    {"RX", OpKind::reset},
    {"RC", OpKind::reset},
    {"RXC", OpKind::reset},
    {"X_ERROR", OpKind::noise1},
    {"Y_ERROR", OpKind::noise1},
    {"Z_ERROR", OpKind::noise1},
    {"DEPOLARIZE1", OpKind::noise1},
    {"DEPOLARIZE2", OpKind::noise2},
    {"RZ", OpKind::rotation},
    {"TICK", OpKind::tick},
    {"DT", OpKind::detector},
    {"OI", OpKind::observable},
    {"Q", OpKind::coords},
    {"MARKX", OpKind::annotation},
    {"MARKZ", OpKind::annotation},
    {"POLYGON", OpKind::annotation},
};

bool is_name_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

bool is_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

uint32_t parse_u32(std::string_view s) {
    uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    }
    return v;
}

double parse_double(std::string_view s) {
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw std::invalid_argument("bad number '" + std::string(s) + "'");
    }
    return v;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

Target parse_target(std::string_view tok, OpKind kind) {
    if (tok.starts_with("rec[")) {
        if (!tok.starts_with("rec[-") || tok.back() != ']') {
            throw std::invalid_argument("bad record target '" + std::string(tok) + "'");
        }
        uint32_t k = parse_u32(tok.substr(5, tok.size() - 6));
        if (k == 0) {
            throw std::invalid_argument("rec[-0] is not a record");
        }
        return Target::rec(k);
    }
    if (is_digits(tok)) {
        return Target::qubit(parse_u32(tok));
    }
    if (kind == OpKind::measure_pauli) {
        Target t;
        t.kind = Target::Kind::product;
        size_t start = 0;
        while (start <= tok.size()) {
            size_t end = tok.find('*', start);
            if (end == std::string_view::npos) {
                end = tok.size();
            }
            std::string_view f = tok.substr(start, end - start);
            if (f.size() < 2 || (f[0] != 'X' && f[0] != 'Y' && f[0] != 'Z') || !is_digits(f.substr(1))) {
                throw std::invalid_argument("bad Pauli factor '" + std::string(f) + "'");
            }
            t.product.emplace_back(f[0], parse_u32(f.substr(1)));
            start = end + 1;
        }
        return t;
    }
    throw std::invalid_argument("bad target '" + std::string(tok) + "'");
}

void validate(const Instruction &op, size_t records_before) {
    OpKind kind = op.kind();
    auto qubits_only = [&] {
        for (const auto &t : op.targets) {
            if (t.kind != Target::Kind::qubit) {
                throw std::invalid_argument(op.name + " takes qubit targets");
            }
        }
    };
    auto probability_args = [&](size_t max_args) {
        if (op.args.size() > max_args) {
            throw std::invalid_argument(op.name + " takes at most " + std::to_string(max_args) + " argument(s)");
        }
        for (double a : op.args) {
            if (a < 0 || a > 1) {
                throw std::invalid_argument(op.name + " probability outside [0, 1]");
            }
        }
    };
    switch (kind) {
        case OpKind::gate1:
        case OpKind::reset:
        case OpKind::measure:
        case OpKind::noise1:
        case OpKind::rotation:
            qubits_only();
            if (op.targets.empty()) {
                throw std::invalid_argument(op.name + " needs targets");
            }
            if (kind == OpKind::rotation) {
                if (op.args.size() != 1) {
                    throw std::invalid_argument("RZ takes one angle");
                }
            } else if (kind == OpKind::noise1) {
                if (op.args.size() != 1) {
                    throw std::invalid_argument(op.name + " takes one probability");
                }
                probability_args(1);
            } else if (kind == OpKind::measure) {
                probability_args(1);
            } else if (!op.args.empty()) {
                throw std::invalid_argument(op.name + " takes no arguments");
            }
            break;
        case OpKind::gate2:
        case OpKind::noise2:
            qubits_only();
            if (op.targets.empty() || op.targets.size() % 2) {
                throw std::invalid_argument(op.name + " needs an even, nonzero number of targets");
            }
            for (size_t i = 0; i < op.targets.size(); i += 2) {
                if (op.targets[i].value == op.targets[i + 1].value) {
                    throw std::invalid_argument(op.name + " pair acts twice on qubit " +
                                                std::to_string(op.targets[i].value));
                }
            }
            if (kind == OpKind::noise2) {
                if (op.args.size() != 1) {
                    throw std::invalid_argument(op.name + " takes one probability");
                }
                probability_args(1);
            } else if (!op.args.empty()) {
                throw std::invalid_argument(op.name + " takes no arguments");
            }
            break;
        case OpKind::measure_pauli:
            if (op.targets.empty()) {
                throw std::invalid_argument("MPP needs targets");
            }
            for (const auto &t : op.targets) {
                if (t.kind != Target::Kind::product) {
                    throw std::invalid_argument("MPP takes Pauli product targets");
                }
                std::set<uint32_t> seen;
                for (const auto &[p, q] : t.product) {
                    if (!seen.insert(q).second) {
                        throw std::invalid_argument("MPP product repeats qubit " + std::to_string(q));
                    }
                }
            }
            probability_args(1);
            break;
        case OpKind::tick:
            if (!op.targets.empty() || !op.args.empty()) {
                throw std::invalid_argument("TICK takes no targets");
            }
            break;
        case OpKind::detector:
        case OpKind::observable:
            for (const auto &t : op.targets) {
                if (t.kind != Target::Kind::rec) {
                    throw std::invalid_argument(op.name + " takes record targets");
                }
                if (t.value > records_before) {
                    throw std::invalid_argument("rec[-" + std::to_string(t.value) + "] reaches before the first measurement");
                }
            }
            if (kind == OpKind::observable) {
                if (op.args.size() != 1 || op.args[0] < 0 || op.args[0] != std::floor(op.args[0])) {
                    throw std::invalid_argument("OI needs one nonnegative integer index");
                }
            }
            break;
        case OpKind::coords:
            qubits_only();
            if (op.targets.size() != 1) {
                throw std::invalid_argument("Q declares exactly one qubit");
            }
            if (op.args.size() != 2) {
                throw std::invalid_argument("malformed coordinate: Q needs (x,y)");
            }
            break;
        case OpKind::annotation:
            qubits_only();
            break;
    }
}

Instruction parse_line(std::string_view line) {
    size_t end = 0;
    while (end < line.size() && is_name_char(line[end])) {
        end++;
    }
    // Longest known mnemonic followed by a delimiter.
    const GateInfo *best = nullptr;
    for (const auto &g : kGates) {
        std::string_view n = g.name;
        if (n.size() > end || line.substr(0, n.size()) != n) {
            continue;
        }
        if (n.size() < line.size()) {
            char c = line[n.size()];
            if (c != '_' && c != '[' && c != '(' && c != ' ' && c != '\t') {
                continue;
            }
        }
        if (!best || n.size() > std::string_view(best->name).size()) {
            best = &g;
        }
    }
    if (!best) {
        throw std::invalid_argument("unknown mnemonic '" + std::string(line.substr(0, std::max<size_t>(end, 1))) + "'");
    }
    Instruction op;
    op.name = best->name;
    size_t pos = op.name.size();
    if (pos < line.size() && line[pos] == '[') {
        size_t close = line.find(']', pos);
        if (close == std::string_view::npos) {
            throw std::invalid_argument("unterminated tag");
        }
        op.tag = std::string(line.substr(pos + 1, close - pos - 1));
        pos = close + 1;
    }
    if (pos < line.size() && line[pos] == '(') {
        size_t close = line.find(')', pos);
        if (close == std::string_view::npos) {
            throw std::invalid_argument("unterminated argument list");
        }
        std::string_view inner = line.substr(pos + 1, close - pos - 1);
        size_t start = 0;
        while (true) {
            size_t comma = inner.find(',', start);
            op.args.push_back(parse_double(inner.substr(start, comma == std::string_view::npos ? inner.npos : comma - start)));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        pos = close + 1;
    }
    std::string_view rest = line.substr(pos);
    size_t i = 0;
    while (i < rest.size()) {
        if (rest[i] == '_' || rest[i] == ' ' || rest[i] == '\t') {
            i++;
            continue;
        }
        size_t j = i;
        while (j < rest.size() && rest[j] != '_' && rest[j] != ' ' && rest[j] != '\t') {
            j++;
        }
        op.targets.push_back(parse_target(rest.substr(i, j - i), best->kind));
        i = j;
    }
    return op;
}

}  // namespace

const GateInfo *gate_info(std::string_view name) {
    for (const auto &g : kGates) {
        if (name == g.name) {
            return &g;
        }
    }
    return nullptr;
}

char basis_of(const std::string &name) {
    return (name == "MX" || name == "MXD" || name == "RX" || name == "RXC") ? 'X' : 'Z';
}

bool is_destructive_measure(const std::string &name) {
    return name == "MD" || name == "MXD";
}

bool is_creative_reset(const std::string &name) {
    return name == "RC" || name == "RXC";
}

std::string Target::str() const {
    switch (kind) {
        case Kind::qubit:
            return std::to_string(value);
        case Kind::rec:
            return "rec[-" + std::to_string(value) + "]";
        case Kind::product: {
            std::string s;
            for (size_t i = 0; i < product.size(); i++) {
                if (i) {
                    s += '*';
                }
                s += product[i].first;
                s += std::to_string(product[i].second);
            }
            return s;
        }
    }
    return {};
}

OpKind Instruction::kind() const {
    const GateInfo *g = gate_info(name);
    if (!g) {
        throw std::invalid_argument("unknown mnemonic '" + name + "'");
    }
    return g->kind;
}

size_t Instruction::num_results() const {
    OpKind k = kind();
    return (k == OpKind::measure || k == OpKind::measure_pauli) ? targets.size() : 0;
}

void Circuit::append(Instruction op) {
    validate(op, num_measurements());
    ops.push_back(std::move(op));
}

void Circuit::append(std::string name, std::vector<uint32_t> qubits, std::string tag, std::vector<double> args) {
    Instruction op;
    op.name = std::move(name);
    op.tag = std::move(tag);
    op.args = std::move(args);
    for (uint32_t q : qubits) {
        op.targets.push_back(Target::qubit(q));
    }
    append(std::move(op));
}

size_t Circuit::num_measurements() const {
    size_t n = 0;
    for (const auto &op : ops) {
        n += op.num_results();
    }
    return n;
}

size_t Circuit::num_qubits() const {
    size_t n = 0;
    for (const auto &op : ops) {
        for (const auto &t : op.targets) {
            if (t.kind == Target::Kind::qubit) {
                n = std::max<size_t>(n, t.value + 1);
            }
            for (const auto &f : t.product) {
                n = std::max<size_t>(n, f.second + 1);
            }
        }
    }
    return n;
}

std::map<uint32_t, std::vector<double>> Circuit::qubit_coords() const {
    std::map<uint32_t, std::vector<double>> out;
    for (const auto &op : ops) {
        if (op.name == "Q") {
            out[op.targets[0].value] = op.args;
        }
    }
    return out;
}

std::vector<Detector> Circuit::detectors() const {
    std::vector<Detector> out;
    size_t m = 0;
    for (const auto &op : ops) {
        if (op.name == "DT") {
            Detector d{op.args, {}};
            for (const auto &t : op.targets) {
                d.records.push_back(m - t.value);
            }
            out.push_back(std::move(d));
        }
        m += op.num_results();
    }
    return out;
}

std::vector<Observable> Circuit::observables() const {
    std::vector<Observable> out;
    size_t m = 0;
    for (const auto &op : ops) {
        if (op.name == "OI") {
            Observable o{(size_t)op.args[0], {}};
            for (const auto &t : op.targets) {
                o.records.push_back(m - t.value);
            }
            out.push_back(std::move(o));
        }
        m += op.num_results();
    }
    return out;
}

size_t Circuit::num_observables() const {
    size_t n = 0;
    for (const auto &op : ops) {
        if (op.name == "OI") {
            n = std::max(n, (size_t)op.args[0] + 1);
        }
    }
    return n;
}

Circuit parse(std::string_view text) {
    Circuit c;
    size_t line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        line_no++;
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        if (size_t hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        // A ';' also separates instructions, as in listing URLs.
        size_t s = 0;
        while (s <= raw.size()) {
            size_t e = raw.find(';', s);
            if (e == std::string_view::npos) {
                e = raw.size();
            }
            std::string_view line = raw.substr(s, e - s);
            s = e + 1;
            while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
                line.remove_prefix(1);
            }
            while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
                line.remove_suffix(1);
            }
            if (line.empty()) {
                continue;
            }
            try {
                c.append(parse_line(line));
            } catch (const std::invalid_argument &e) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        if (end == text.size()) {
            break;
        }
    }
    return c;
}

Circuit parse_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open circuit file " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string emit(const Instruction &op, EmitStyle style) {
    std::string s = op.name;
    if (!op.tag.empty()) {
        s += "[" + op.tag + "]";
    }
    if (!op.args.empty()) {
        s += '(';
        for (size_t i = 0; i < op.args.size(); i++) {
            if (i) {
                s += ',';
            }
            s += format_double(op.args[i]);
        }
        s += ')';
    }
    for (size_t i = 0; i < op.targets.size(); i++) {
        if (style == EmitStyle::spaced) {
            s += ' ';
        } else if (i > 0 || op.args.empty()) {
            s += '_';
        }
        s += op.targets[i].str();
    }
    return s;
}

std::string emit(const Circuit &c, EmitStyle style) {
    std::string s;
    for (const auto &op : c.ops) {
        s += emit(op, style);
        s += '\n';
    }
    return s;
}

bool is_nonclifford_tag(const Instruction &op) {
    if (op.tag == "T_gate" || op.tag == "T_dagger_gate" || op.tag == "negative_T_gate") {
        return true;
    }
    return op.tag == "injection" && (op.name == "S" || op.name == "H");
}

CircuitStats stats(const Circuit &c) {
    CircuitStats st;
    std::set<uint32_t> qubits;
    for (const auto &op : c.ops) {
        OpKind k = op.kind();
        if (k == OpKind::gate2) {
            st.two_qubit_gates += op.targets.size() / 2;
        } else if (k == OpKind::tick) {
            st.ticks++;
        }
        st.measurements += op.num_results();
        if (is_nonclifford_tag(op)) {
            st.nonclifford_tags += op.targets.size();
        }
        if (k == OpKind::annotation) {
            continue;
        }
        for (const auto &t : op.targets) {
            if (t.kind == Target::Kind::qubit) {
                qubits.insert(t.value);
            }
            for (const auto &f : t.product) {
                qubits.insert(f.second);
            }
        }
    }
    st.qubits = qubits.size();
    return st;
}

RecordEvaluation evaluate_records(const Circuit &c, const std::vector<uint8_t> &record) {
    if (record.size() != c.num_measurements()) {
        throw std::invalid_argument("record has " + std::to_string(record.size()) + " bits, circuit measures " +
                                    std::to_string(c.num_measurements()));
    }
    RecordEvaluation out;
    out.observables.assign(c.num_observables(), 0);
    size_t m = 0;
    for (const auto &op : c.ops) {
        if (op.name == "DT" || op.name == "OI") {
            uint8_t v = 0;
            for (const auto &t : op.targets) {
                v ^= record[m - t.value] & 1;
            }
            if (op.name == "DT") {
                out.detectors.push_back(v);
            } else {
                out.observables[(size_t)op.args[0]] ^= v;
            }
        }
        m += op.num_results();
    }
    return out;
}

}  // namespace cultsim
