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

#include "cultsim/frames.h"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cultsim/noise.h"
#include "cultsim/pauli.h"

namespace cultsim {

namespace {

using Bits = std::vector<uint64_t>;

void xor_into(Bits &a, const Bits &b) {
    for (size_t w = 0; w < a.size(); w++) {
        a[w] ^= b[w];
    }
}

// Aaronson-Gottesman tableau whose stabilizer signs carry record symbols.
struct SymbolicTableau {
    size_t n;
    std::vector<PauliString> G, D;
    std::vector<Bits> sym;
    size_t words;

    SymbolicTableau(size_t n_, size_t records) : n(n_), words(records / 64 + 1) {
        for (size_t q = 0; q < n; q++) {
            G.push_back(PauliString::single(n, q, 'Z'));
            D.push_back(PauliString::single(n, q, 'X'));
            sym.emplace_back(words, 0);
        }
    }

    void apply(const CliffordMap &u, const std::vector<size_t> &targets) {
        for (size_t i = 0; i < n; i++) {
            conjugate_in_place(G[i], u, targets);
            conjugate_in_place(D[i], u, targets);
        }
    }

    // Returns the outcome as (symbols, flip); a random outcome becomes symbol `record`.
    std::pair<Bits, bool> measure(const PauliString &p, size_t record) {
        size_t pivot = n;
        for (size_t i = 0; i < n; i++) {
            if (!commutes(G[i], p)) {
                pivot = i;
                break;
            }
        }
        if (pivot < n) {
            for (size_t j = 0; j < n; j++) {
                if (j != pivot && !commutes(G[j], p)) {
                    G[j] *= G[pivot];
                    xor_into(sym[j], sym[pivot]);
                }
                if (j != pivot && !commutes(D[j], p)) {
                    D[j] *= G[pivot];
                    D[j].log_i = 0;
                }
            }
            D[pivot] = G[pivot];
            D[pivot].log_i = 0;
            G[pivot] = p;
            std::fill(sym[pivot].begin(), sym[pivot].end(), 0);
            sym[pivot][record >> 6] |= uint64_t{1} << (record & 63);
            Bits out(words, 0);
            out[record >> 6] |= uint64_t{1} << (record & 63);
            return {out, false};
        }
        PauliString acc(n);
        Bits out(words, 0);
        for (size_t i = 0; i < n; i++) {
            if (!commutes(D[i], p)) {
                acc *= G[i];
                xor_into(out, sym[i]);
            }
        }
        if (!acc.same_up_to_phase(p)) {
            throw std::logic_error("symbolic tableau lost track of a deterministic outcome");
        }
        bool flip = acc.log_i != p.log_i;
        return {out, flip};
    }

    // Forces the measured Pauli to +1 by flipping every stabilizer that anticommutes with `fix`.
    void condition(const PauliString &fix, const Bits &value, bool flip) {
        for (size_t i = 0; i < n; i++) {
            if (!commutes(G[i], fix)) {
                xor_into(sym[i], value);
                if (flip) {
                    G[i].log_i = (uint8_t)((G[i].log_i + 2) & 3);
                }
            }
        }
    }
};

const char *stand_in_name(const Instruction &op, int k, TStandIn t) {
    static const char *rz[] = {"I", "S", "Z", "S_DAG"};
    static const char *ry[] = {"I", "SQRT_Y", "Y", "SQRT_Y_DAG"};
    if (op.tag == "T_gate") {
        return t == TStandIn::identity ? "I" : "SQRT_Y";
    }
    if (op.tag == "T_dagger_gate" || op.tag == "negative_T_gate") {
        return t == TStandIn::identity ? "I" : "SQRT_Y_DAG";
    }
    if (op.tag == "injection" && op.name == "S") {
        return rz[k];
    }
    if (op.tag == "injection" && op.name == "H") {
        return ry[k];
    }
    return nullptr;
}

std::vector<size_t> to_list(const Bits &b) {
    std::vector<size_t> out;
    for (size_t w = 0; w < b.size(); w++) {
        for (uint64_t x = b[w]; x; x &= x - 1) {
            out.push_back(w * 64 + (size_t)std::countr_zero(x));
        }
    }
    return out;
}

}  // namespace

std::string clifford_stand_in(const Instruction &op, int injection_k, TStandIn t) {
    injection_k = ((injection_k % 4) + 4) % 4;
    const char *name = op.tag.empty() ? nullptr : stand_in_name(op, injection_k, t);
    return name ? name : op.name;
}

std::vector<RecordExpr> record_expressions(const Circuit &c, int injection_k, TStandIn t) {
    injection_k = ((injection_k % 4) + 4) % 4;
    size_t n = std::max<size_t>(1, c.num_qubits());
    size_t total = c.num_measurements();
    size_t reset_targets = 0;
    for (const auto &op : c.ops) {
        if (op.kind() == OpKind::reset) {
            reset_targets += op.targets.size();
        }
    }
    // Symbols at or past `total` stand for unrecorded reset outcomes.
    size_t hidden = total;
    SymbolicTableau tab(n, total + reset_targets);
    std::map<std::string, CliffordMap> cache;
    auto named = [&](const std::string &name) -> const CliffordMap & {
        auto it = cache.find(name);
        if (it == cache.end()) {
            it = cache.emplace(name, CliffordMap::named(name)).first;
        }
        return it->second;
    };
    std::vector<RecordExpr> out;
    auto record = [&](const std::pair<Bits, bool> &v) {
        out.push_back(RecordExpr{to_list(v.first), v.second});
    };
    for (const auto &op : c.ops) {
        OpKind kind = op.kind();
        switch (kind) {
            case OpKind::gate1: {
                const auto &u = named(clifford_stand_in(op, injection_k, t));
                for (const auto &t : op.targets) {
                    tab.apply(u, {t.value});
                }
                break;
            }
            case OpKind::gate2:
                for (size_t j = 0; j < op.targets.size(); j += 2) {
                    tab.apply(named(op.name), {op.targets[j].value, op.targets[j + 1].value});
                }
                break;
            case OpKind::measure:
                for (const auto &t : op.targets) {
                    char b = basis_of(op.name);
                    record(tab.measure(PauliString::single(n, t.value, b), out.size()));
                }
                break;
            case OpKind::measure_pauli:
                for (const auto &t : op.targets) {
                    PauliString p(n);
                    for (auto [ch, q] : t.product) {
                        p *= PauliString::single(n, q, ch);
                    }
                    record(tab.measure(p, out.size()));
                }
                break;
            case OpKind::reset:
                for (const auto &t : op.targets) {
                    char b = basis_of(op.name);
                    auto v = tab.measure(PauliString::single(n, t.value, b), hidden++);
                    tab.condition(PauliString::single(n, t.value, b == 'X' ? 'Z' : 'X'), v.first, v.second);
                }
                break;
            default:
                break;
        }
    }
    return out;
}

RecordExpr parity_expression(const std::vector<RecordExpr> &exprs, const std::vector<size_t> &records) {
    std::map<size_t, int> count;
    bool flip = false;
    for (size_t r : records) {
        if (r >= exprs.size()) {
            throw std::invalid_argument("record index out of range");
        }
        for (size_t s : exprs[r].symbols) {
            count[s] ^= 1;
        }
        flip ^= exprs[r].flip;
    }
    RecordExpr e;
    e.flip = flip;
    for (auto [s, odd] : count) {
        if (odd) {
            e.symbols.push_back(s);
        }
    }
    return e;
}

std::vector<size_t> make_deterministic(const std::vector<RecordExpr> &exprs, const std::vector<size_t> &records) {
    std::map<size_t, int> count;
    for (size_t r : records) {
        count[r] ^= 1;
    }
    for (size_t s : parity_expression(exprs, records).symbols) {
        count[s] ^= 1;
    }
    std::vector<size_t> out;
    for (auto [r, odd] : count) {
        if (odd) {
            out.push_back(r);
        }
    }
    return out;
}

FaultScan single_fault_scan(const Circuit &c, int injection_k) {
    size_t n = std::max<size_t>(1, c.num_qubits());
    size_t total = c.num_measurements();
    std::vector<CliffordMap> maps(c.ops.size());
    std::vector<size_t> first_record(c.ops.size() + 1, 0);
    for (size_t i = 0; i < c.ops.size(); i++) {
        OpKind kind = c.ops[i].kind();
        if (kind == OpKind::gate1 || kind == OpKind::gate2) {
            maps[i] = CliffordMap::named(clifford_stand_in(c.ops[i], injection_k));
        }
        first_record[i + 1] = first_record[i] + c.ops[i].num_results();
    }
    auto dets = c.detectors();
    auto obs = c.observables();

    FaultScan scan;
    std::vector<uint8_t> flips(total);
    // Runs the frame `e` forward from op `start`, starting from record flips already in `flips`.
    auto judge = [&](PauliString e, size_t start, const std::string &what) {
        for (size_t i = start; i < c.ops.size(); i++) {
            const auto &op = c.ops[i];
            switch (op.kind()) {
                case OpKind::gate1:
                    for (const auto &t : op.targets) {
                        conjugate_in_place(e, maps[i], {t.value});
                    }
                    break;
                case OpKind::gate2:
                    for (size_t j = 0; j + 1 < op.targets.size(); j += 2) {
                        conjugate_in_place(e, maps[i], {op.targets[j].value, op.targets[j + 1].value});
                    }
                    break;
                case OpKind::measure: {
                    char b = basis_of(op.name);
                    for (size_t j = 0; j < op.targets.size(); j++) {
                        size_t q = op.targets[j].value;
                        // A Z measurement sees X and Y components, an X measurement sees Z and Y.
                        flips[first_record[i] + j] ^= b == 'X' ? e.z(q) : e.x(q);
                    }
                    break;
                }
                case OpKind::measure_pauli:
                    for (size_t j = 0; j < op.targets.size(); j++) {
                        PauliString p(n);
                        for (auto [ch, q] : op.targets[j].product) {
                            p *= PauliString::single(n, q, ch);
                        }
                        flips[first_record[i] + j] ^= !commutes(e, p);
                    }
                    break;
                case OpKind::reset:
                    for (const auto &t : op.targets) {
                        e.set_x(t.value, false);
                        e.set_z(t.value, false);
                    }
                    break;
                default:
                    break;
            }
        }
        auto odd = [&](const std::vector<size_t> &recs) {
            uint8_t v = 0;
            for (size_t r : recs) {
                v ^= flips[r];
            }
            return v != 0;
        };
        bool detected = false, logical = false;
        for (const auto &d : dets) {
            detected |= odd(d.records);
        }
        for (const auto &o : obs) {
            logical |= odd(o.records);
        }
        scan.sites++;
        if (logical && !detected) {
            scan.undetected_logical++;
            if (scan.examples.size() < 10) {
                scan.examples.push_back(what);
            }
        }
        if (!logical && !detected) {
            scan.silent++;
        }
        std::fill(flips.begin(), flips.end(), 0);
    };
    auto describe = [&](size_t i, const PauliString &e) {
        std::ostringstream out;
        out << e.product_str() << " after op " << i << " (" << c.ops[i].name << ")";
        return out.str();
    };
    static const char kPaulis[] = "XYZ";
    for (size_t i = 0; i < c.ops.size(); i++) {
        const auto &op = c.ops[i];
        OpKind kind = op.kind();
        bool physical = !is_virtual(op);
        if ((kind == OpKind::gate1 && physical) || kind == OpKind::reset) {
            for (const auto &t : op.targets) {
                for (char p : std::string_view(kPaulis, 3)) {
                    auto e = PauliString::single(n, t.value, p);
                    judge(e, i + 1, describe(i, e));
                }
            }
        } else if (kind == OpKind::gate2) {
            for (size_t j = 0; j + 1 < op.targets.size(); j += 2) {
                for (int a = 0; a < 4; a++) {
                    for (int b = 0; b < 4; b++) {
                        if (a == 0 && b == 0) {
                            continue;
                        }
                        PauliString e(n);
                        if (a) e.set(op.targets[j].value, kPaulis[a - 1]);
                        if (b) e.set(op.targets[j + 1].value, kPaulis[b - 1]);
                        judge(e, i + 1, describe(i, e));
                    }
                }
            }
        } else if (kind == OpKind::measure || kind == OpKind::measure_pauli) {
            for (size_t j = 0; j < op.targets.size(); j++) {
                flips[first_record[i] + j] = 1;
                judge(PauliString(n), i + 1, "flip of record " + std::to_string(first_record[i] + j));
            }
        } else if (kind == OpKind::tick) {
            for (size_t q = 0; q < n; q++) {
                for (char p : std::string_view(kPaulis, 3)) {
                    auto e = PauliString::single(n, q, p);
                    judge(e, i + 1, describe(i, e));
                }
            }
        }
    }
    return scan;
}

}  // namespace cultsim
