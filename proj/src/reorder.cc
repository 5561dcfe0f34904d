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

#include "cultsim/reorder.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace cultsim {

namespace {

constexpr size_t kNone = std::numeric_limits<size_t>::max();

enum class Use : uint8_t { none, reset, other };

bool is_channel(OpKind k) {
    switch (k) {
        case OpKind::tick:
        case OpKind::detector:
        case OpKind::observable:
        case OpKind::coords:
        case OpKind::annotation:
            return false;
        default:
            return true;
    }
}

bool is_noise(OpKind k) {
    return k == OpKind::noise1 || k == OpKind::noise2 || k == OpKind::rotation;
}

std::vector<uint32_t> op_qubits(const Instruction &op) {
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

// Appends op, merging into the previous instruction when it has the same head.
void push_merged(Circuit &out, Instruction op) {
    if (!out.ops.empty()) {
        Instruction &last = out.ops.back();
        if (last.name == op.name && last.tag == op.tag && last.args == op.args && op.kind() != OpKind::gate2 &&
            (op.kind() == OpKind::reset || op.kind() == OpKind::measure)) {
            for (auto &t : op.targets) {
                last.targets.push_back(std::move(t));
            }
            return;
        }
    }
    out.ops.push_back(std::move(op));
}

size_t popcount_and_not(const uint64_t *a, const uint64_t *b, size_t words) {
    size_t n = 0;
    for (size_t w = 0; w < words; w++) {
        n += std::popcount(a[w] & ~b[w]);
    }
    return n;
}

bool subset_of(const uint64_t *a, const uint64_t *b, size_t words) {
    for (size_t w = 0; w < words; w++) {
        if (a[w] & ~b[w]) {
            return false;
        }
    }
    return true;
}

void set_bit(std::vector<uint64_t> &bits, size_t i) {
    bits[i >> 6] |= uint64_t{1} << (i & 63);
}

bool get_bit(const uint64_t *bits, size_t i) {
    return (bits[i >> 6] >> (i & 63)) & 1;
}

// Topological order with the reset/measurement chain fixed and other channels placed early.
std::vector<size_t> chained_topo(const CircuitDag &dag, const std::vector<size_t> &sequence) {
    size_t n = dag.nodes.size();
    size_t fixed = 0;
    for (const auto &node : dag.nodes) {
        fixed += node.kind != NodeKind::other;
    }
    std::vector<uint8_t> seen(n, 0);
    for (size_t k : sequence) {
        if (k >= n || dag.nodes[k].kind == NodeKind::other || seen[k]) {
            throw std::invalid_argument("ordering must list each reset and measurement once");
        }
        seen[k] = 1;
    }
    if (sequence.size() != fixed) {
        throw std::invalid_argument("ordering must list every reset and measurement");
    }
    std::vector<size_t> indeg(n, 0);
    for (size_t k = 0; k < n; k++) {
        indeg[k] = dag.pred[k].size();
    }
    std::priority_queue<size_t, std::vector<size_t>, std::greater<>> ready;
    for (size_t k = 0; k < n; k++) {
        if (indeg[k] == 0 && dag.nodes[k].kind == NodeKind::other) {
            ready.push(k);
        }
    }
    std::vector<size_t> order;
    order.reserve(n);
    size_t next = 0;
    auto emit_node = [&](size_t k) {
        order.push_back(k);
        for (size_t s : dag.succ[k]) {
            if (--indeg[s] == 0 && dag.nodes[s].kind == NodeKind::other) {
                ready.push(s);
            }
        }
    };
    while (order.size() < n) {
        if (!ready.empty()) {
            size_t k = ready.top();
            ready.pop();
            emit_node(k);
            continue;
        }
        if (next >= sequence.size() || indeg[sequence[next]] != 0) {
            throw std::invalid_argument("ordering contradicts the circuit DAG");
        }
        emit_node(sequence[next++]);
    }
    return order;
}

double average_over(const CircuitDag &dag, const std::vector<size_t> &order) {
    long live = 0;
    double sum = 0;
    size_t count = 0;
    for (size_t k : order) {
        const auto &node = dag.nodes[k];
        if (node.kind == NodeKind::reset) {
            live++;
        }
        if (!is_noise(node.op.kind())) {
            sum += (double)live;
            count++;
        }
        if (node.kind == NodeKind::measurement) {
            live--;
        }
    }
    return count ? sum / (double)count : 0.0;
}

}  // namespace

Circuit to_destructive_form(const Circuit &c) {
    size_t nq = c.num_qubits();
    // next_use[i][j]: next non-noise use of the j-th qubit of op i after op i.
    std::vector<std::vector<Use>> next_use(c.ops.size());
    std::vector<Use> upcoming(nq, Use::none);
    for (size_t i = c.ops.size(); i-- > 0;) {
        const Instruction &op = c.ops[i];
        OpKind k = op.kind();
        if (!is_channel(k) || is_noise(k)) {
            continue;
        }
        auto qs = op_qubits(op);
        next_use[i].resize(qs.size());
        for (size_t j = 0; j < qs.size(); j++) {
            next_use[i][j] = upcoming[qs[j]];
        }
        for (uint32_t q : qs) {
            upcoming[q] = k == OpKind::reset ? Use::reset : Use::other;
        }
    }
    Circuit out;
    std::vector<uint8_t> live(nq, 0);
    for (size_t i = 0; i < c.ops.size(); i++) {
        const Instruction &op = c.ops[i];
        OpKind k = op.kind();
        if (!is_channel(k) || is_noise(k)) {
            out.ops.push_back(op);
            continue;
        }
        if (k == OpKind::reset) {
            for (const auto &t : op.targets) {
                Instruction r{op.name, op.tag, op.args, {t}};
                char basis = basis_of(op.name);
                if (!live[t.value]) {
                    r.name = basis == 'X' ? "RXC" : "RC";
                    live[t.value] = 1;
                } else {
                    r.name = basis == 'X' ? "RX" : "R";
                }
                push_merged(out, std::move(r));
            }
            continue;
        }
        auto qs = op_qubits(op);
        for (uint32_t q : qs) {
            if (!live[q]) {
                push_merged(out, Instruction{"RC", "", {}, {Target::qubit(q)}});
                live[q] = 1;
            }
        }
        if (k == OpKind::measure) {
            for (size_t j = 0; j < op.targets.size(); j++) {
                Instruction m{op.name, op.tag, op.args, {op.targets[j]}};
                char basis = basis_of(op.name);
                if (next_use[i][j] != Use::other) {
                    m.name = basis == 'X' ? "MXD" : "MD";
                    live[op.targets[j].value] = 0;
                } else {
                    m.name = basis == 'X' ? "MX" : "M";
                }
                push_merged(out, std::move(m));
            }
            continue;
        }
        out.ops.push_back(op);
    }
    return out;
}

std::vector<size_t> CircuitDag::measurements() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < nodes.size(); k++) {
        if (nodes[k].kind == NodeKind::measurement) {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<size_t> CircuitDag::resets() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < nodes.size(); k++) {
        if (nodes[k].kind == NodeKind::reset) {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<size_t> CircuitDag::selectable(const std::vector<uint8_t> &placed) const {
    std::vector<uint64_t> placed_bits(measurement_words, 0);
    for (size_t s = 0; s < placed.size(); s++) {
        if (placed[s]) {
            set_bit(placed_bits, s);
        }
    }
    std::vector<size_t> out;
    for (size_t k = 0; k < nodes.size(); k++) {
        size_t slot = measurement_slot[k];
        if (slot == kNone || (slot < placed.size() && placed[slot])) {
            continue;
        }
        if (subset_of(&upstream_measurement_bits[k * measurement_words], placed_bits.data(), measurement_words)) {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<size_t> CircuitDag::upstream_resets(size_t k) const {
    std::vector<size_t> out;
    const uint64_t *bits = &upstream_reset_bits[k * reset_words];
    for (size_t r = 0; r < nodes.size(); r++) {
        if (reset_slot[r] != kNone && get_bit(bits, reset_slot[r])) {
            out.push_back(r);
        }
    }
    return out;
}

std::vector<std::pair<size_t, size_t>> CircuitDag::pruned_edges() const {
    std::vector<std::set<size_t>> nearest(nodes.size());
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t k = 0; k < nodes.size(); k++) {
        for (size_t p : pred[k]) {
            if (nodes[p].kind != NodeKind::other) {
                nearest[k].insert(p);
            } else {
                nearest[k].insert(nearest[p].begin(), nearest[p].end());
            }
        }
        if (nodes[k].kind != NodeKind::other) {
            for (size_t j : nearest[k]) {
                out.emplace_back(j, k);
            }
        }
    }
    return out;
}

CircuitDag build_dag(const Circuit &input) {
    CircuitDag dag;
    dag.source = to_destructive_form(input);
    const Circuit &c = dag.source;
    size_t nq = c.num_qubits();
    std::vector<size_t> last(nq, kNone);
    size_t record = 0;
    for (size_t i = 0; i < c.ops.size(); i++) {
        const Instruction &op = c.ops[i];
        OpKind k = op.kind();
        if (!is_channel(k)) {
            dag.passive.push_back(i);
            continue;
        }
        size_t step = (k == OpKind::gate2 || k == OpKind::noise2) ? 2 : 1;
        for (size_t j = 0; j < op.targets.size(); j += step) {
            ChannelNode node;
            node.source = i;
            node.op = Instruction{op.name, op.tag, op.args, {}};
            for (size_t t = j; t < j + step; t++) {
                node.op.targets.push_back(op.targets[t]);
            }
            node.qubits = op_qubits(node.op);
            if (is_creative_reset(op.name)) {
                node.kind = NodeKind::reset;
            } else if (is_destructive_measure(op.name)) {
                node.kind = NodeKind::measurement;
            }
            if (k == OpKind::measure || k == OpKind::measure_pauli) {
                node.records.push_back(record++);
            }
            size_t id = dag.nodes.size();
            dag.nodes.push_back(std::move(node));
            dag.pred.emplace_back();
            dag.succ.emplace_back();
            for (uint32_t q : dag.nodes[id].qubits) {
                size_t p = last[q];
                if (p != kNone && (dag.succ[p].empty() || dag.succ[p].back() != id)) {
                    dag.succ[p].push_back(id);
                    dag.pred[id].push_back(p);
                    dag.edges.emplace_back(p, id);
                }
                last[q] = id;
            }
        }
    }
    size_t n = dag.nodes.size();
    dag.reset_slot.assign(n, kNone);
    dag.measurement_slot.assign(n, kNone);
    size_t nr = 0, nm = 0;
    for (size_t k = 0; k < n; k++) {
        if (dag.nodes[k].kind == NodeKind::reset) {
            dag.reset_slot[k] = nr++;
        } else if (dag.nodes[k].kind == NodeKind::measurement) {
            dag.measurement_slot[k] = nm++;
        }
    }
    dag.reset_words = (nr + 63) / 64 + 1;
    dag.measurement_words = (nm + 63) / 64 + 1;
    dag.upstream_reset_bits.assign(n * dag.reset_words, 0);
    dag.upstream_measurement_bits.assign(n * dag.measurement_words, 0);
    // Node ids are already a topological order.
    for (size_t k = 0; k < n; k++) {
        uint64_t *ur = &dag.upstream_reset_bits[k * dag.reset_words];
        uint64_t *um = &dag.upstream_measurement_bits[k * dag.measurement_words];
        for (size_t p : dag.pred[k]) {
            const uint64_t *pr = &dag.upstream_reset_bits[p * dag.reset_words];
            const uint64_t *pm = &dag.upstream_measurement_bits[p * dag.measurement_words];
            for (size_t w = 0; w < dag.reset_words; w++) {
                ur[w] |= pr[w];
            }
            for (size_t w = 0; w < dag.measurement_words; w++) {
                um[w] |= pm[w];
            }
            if (dag.reset_slot[p] != kNone) {
                ur[dag.reset_slot[p] >> 6] |= uint64_t{1} << (dag.reset_slot[p] & 63);
            }
            if (dag.measurement_slot[p] != kNone) {
                um[dag.measurement_slot[p] >> 6] |= uint64_t{1} << (dag.measurement_slot[p] & 63);
            }
        }
    }
    return dag;
}

size_t sequence_peak(const CircuitDag &dag, const std::vector<size_t> &sequence) {
    long live = 0, peak = 0;
    for (size_t k : sequence) {
        if (dag.nodes[k].kind == NodeKind::reset) {
            peak = std::max(peak, ++live);
        } else if (dag.nodes[k].kind == NodeKind::measurement) {
            live--;
        }
    }
    return (size_t)peak;
}

Ordering source_order(const CircuitDag &dag) {
    Ordering o;
    for (size_t k = 0; k < dag.nodes.size(); k++) {
        if (dag.nodes[k].kind != NodeKind::other) {
            o.sequence.push_back(k);
        }
    }
    o.peak = sequence_peak(dag, o.sequence);
    o.average = average_over(dag, chained_topo(dag, o.sequence));
    return o;
}

namespace {

// Appends the not-yet-placed upstream resets of node k, then k.
void place(const CircuitDag &dag, size_t k, std::vector<uint64_t> &placed_r, std::vector<uint64_t> &placed_m,
           std::vector<size_t> &seq) {
    const uint64_t *ur = &dag.upstream_reset_bits[k * dag.reset_words];
    for (size_t r = 0; r < dag.nodes.size(); r++) {
        size_t slot = dag.reset_slot[r];
        if (slot != kNone && get_bit(ur, slot) && !get_bit(placed_r.data(), slot)) {
            set_bit(placed_r, slot);
            seq.push_back(r);
        }
    }
    set_bit(placed_m, dag.measurement_slot[k]);
    seq.push_back(k);
}

void place_leftover_resets(const CircuitDag &dag, const std::vector<uint64_t> &placed_r, std::vector<size_t> &seq) {
    for (size_t r = 0; r < dag.nodes.size(); r++) {
        size_t slot = dag.reset_slot[r];
        if (slot != kNone && !get_bit(placed_r.data(), slot)) {
            seq.push_back(r);
        }
    }
}

}  // namespace

Ordering greedy_order(const CircuitDag &dag, uint64_t seed, size_t restarts) {
    auto ms = dag.measurements();
    Ordering best;
    bool have = false;
    for (size_t run = 0; run < std::max<size_t>(1, restarts); run++) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + run);
        std::vector<uint64_t> placed_r(dag.reset_words, 0), placed_m(dag.measurement_words, 0);
        std::vector<size_t> seq;
        for (size_t step = 0; step < ms.size(); step++) {
            size_t best_cost = kNone;
            std::vector<size_t> ties;
            for (size_t k : ms) {
                if (get_bit(placed_m.data(), dag.measurement_slot[k]) ||
                    !subset_of(&dag.upstream_measurement_bits[k * dag.measurement_words], placed_m.data(),
                               dag.measurement_words)) {
                    continue;
                }
                size_t cost = popcount_and_not(&dag.upstream_reset_bits[k * dag.reset_words], placed_r.data(),
                                               dag.reset_words);
                if (cost < best_cost) {
                    best_cost = cost;
                    ties.clear();
                }
                if (cost == best_cost) {
                    ties.push_back(k);
                }
            }
            place(dag, ties[rng() % ties.size()], placed_r, placed_m, seq);
        }
        place_leftover_resets(dag, placed_r, seq);
        Ordering o;
        o.peak = sequence_peak(dag, seq);
        o.sequence = std::move(seq);
        o.average = average_over(dag, chained_topo(dag, o.sequence));
        if (!have || o.peak < best.peak || (o.peak == best.peak && o.average < best.average)) {
            best = std::move(o);
            have = true;
        }
    }
    return best;
}

Ordering exhaustive_order(const CircuitDag &dag, size_t max_measurements) {
    auto ms = dag.measurements();
    if (ms.size() > max_measurements) {
        throw std::invalid_argument("exhaustive_order: too many measurements");
    }
    size_t total_resets = dag.resets().size();
    size_t best_peak = kNone;
    std::vector<size_t> best_seq;
    std::vector<uint64_t> placed_r(dag.reset_words, 0), placed_m(dag.measurement_words, 0);
    std::vector<size_t> seq;
    std::function<void(size_t, long, size_t, size_t)> dfs = [&](size_t depth, long live, size_t peak,
                                                                size_t resets_used) {
        if (depth == ms.size()) {
            size_t final_peak = std::max<size_t>(peak, (size_t)live + (total_resets - resets_used));
            if (final_peak < best_peak) {
                best_peak = final_peak;
                best_seq = seq;
                place_leftover_resets(dag, placed_r, best_seq);
            }
            return;
        }
        for (size_t k : ms) {
            if (get_bit(placed_m.data(), dag.measurement_slot[k]) ||
                !subset_of(&dag.upstream_measurement_bits[k * dag.measurement_words], placed_m.data(),
                           dag.measurement_words)) {
                continue;
            }
            size_t cost =
                popcount_and_not(&dag.upstream_reset_bits[k * dag.reset_words], placed_r.data(), dag.reset_words);
            size_t new_peak = std::max<size_t>(peak, (size_t)live + cost);
            if (new_peak >= best_peak) {
                continue;
            }
            auto saved_r = placed_r;
            auto saved_m = placed_m;
            size_t saved_len = seq.size();
            place(dag, k, placed_r, placed_m, seq);
            dfs(depth + 1, live + (long)cost - 1, new_peak, resets_used + cost);
            placed_r = saved_r;
            placed_m = saved_m;
            seq.resize(saved_len);
        }
    };
    dfs(0, 0, 0, 0);
    Ordering o;
    o.sequence = best_seq;
    o.peak = sequence_peak(dag, o.sequence);
    o.average = average_over(dag, chained_topo(dag, o.sequence));
    return o;
}

Reordered apply_order(const CircuitDag &dag, const Ordering &ordering) {
    auto order = chained_topo(dag, ordering.sequence);
    const Circuit &src = dag.source;
    size_t num_records = src.num_measurements();

    // Detectors and observables with the absolute records they read.
    struct Pending {
        size_t source;
        std::vector<size_t> records;
        size_t remaining;
    };
    std::vector<Pending> pending;
    std::vector<std::vector<size_t>> waiting(num_records);
    {
        size_t m = 0;
        for (size_t i = 0; i < src.ops.size(); i++) {
            const Instruction &op = src.ops[i];
            if (op.name == "DT" || op.name == "OI") {
                Pending p{i, {}, 0};
                for (const auto &t : op.targets) {
                    p.records.push_back(m - t.value);
                }
                std::set<size_t> distinct(p.records.begin(), p.records.end());
                p.remaining = distinct.size();
                for (size_t r : distinct) {
                    waiting[r].push_back(pending.size());
                }
                pending.push_back(std::move(p));
            }
            m += op.num_results();
        }
    }

    Reordered out;
    out.record_permutation.assign(num_records, kNone);
    size_t produced = 0;
    auto emit_pending = [&](size_t idx) {
        const Pending &p = pending[idx];
        Instruction op = src.ops[p.source];
        op.targets.clear();
        for (size_t r : p.records) {
            op.targets.push_back(Target::rec((uint32_t)(produced - out.record_permutation[r])));
        }
        out.circuit.ops.push_back(std::move(op));
    };
    for (size_t i : dag.passive) {
        if (src.ops[i].name == "Q") {
            out.circuit.ops.push_back(src.ops[i]);
        }
    }
    for (size_t idx = 0; idx < pending.size(); idx++) {
        if (pending[idx].remaining == 0) {
            emit_pending(idx);
        }
    }
    for (size_t k : order) {
        const ChannelNode &node = dag.nodes[k];
        out.circuit.ops.push_back(node.op);
        std::vector<size_t> ready;
        for (size_t r : node.records) {
            out.record_permutation[r] = produced++;
            for (size_t idx : waiting[r]) {
                if (--pending[idx].remaining == 0) {
                    ready.push_back(idx);
                }
            }
        }
        std::sort(ready.begin(), ready.end());
        for (size_t idx : ready) {
            emit_pending(idx);
        }
    }
    return out;
}

size_t peak_live(const Circuit &c) {
    CircuitDag dag = build_dag(c);
    return source_order(dag).peak;
}

double average_live(const Circuit &c) {
    CircuitDag dag = build_dag(c);
    std::vector<size_t> order(dag.nodes.size());
    for (size_t k = 0; k < order.size(); k++) {
        order[k] = k;
    }
    return average_over(dag, order);
}

namespace {

struct RecordTracker {
    Circuit &c;
    size_t total = 0;

    std::vector<size_t> measure(const std::string &name, const std::vector<uint32_t> &qs) {
        std::vector<size_t> idx;
        for (size_t j = 0; j < qs.size(); j++) {
            idx.push_back(total++);
        }
        c.append(name, qs);
        return idx;
    }
    void detector(std::vector<double> coords, const std::vector<size_t> &records) {
        Instruction op{"DT", "", std::move(coords), {}};
        for (size_t r : records) {
            op.targets.push_back(Target::rec((uint32_t)(total - r)));
        }
        c.append(std::move(op));
    }
    void observable(size_t index, const std::vector<size_t> &records) {
        Instruction op{"OI", "", {(double)index}, {}};
        for (size_t r : records) {
            op.targets.push_back(Target::rec((uint32_t)(total - r)));
        }
        c.append(std::move(op));
    }
};

}  // namespace

Circuit repetition_code(size_t d, size_t cycles) {
    if (d < 2 || cycles < 1) {
        throw std::invalid_argument("repetition_code needs d >= 2 and cycles >= 1");
    }
    Circuit c;
    RecordTracker rt{c};
    std::vector<uint32_t> all, data, anc;
    for (uint32_t q = 0; q < 2 * d - 1; q++) {
        all.push_back(q);
        (q % 2 ? anc : data).push_back(q);
    }
    c.append("R", all);
    c.append("TICK", {});
    std::vector<size_t> prev;
    for (size_t cyc = 0; cyc < cycles; cyc++) {
        if (cyc > 0) {
            c.append("R", anc);
            c.append("TICK", {});
        }
        std::vector<uint32_t> l1, l2;
        for (uint32_t a : anc) {
            l1.insert(l1.end(), {a - 1, a});
            l2.insert(l2.end(), {a + 1, a});
        }
        c.append("CX", l1);
        c.append("TICK", {});
        c.append("CX", l2);
        c.append("TICK", {});
        auto cur = rt.measure("M", anc);
        for (size_t i = 0; i < anc.size(); i++) {
            std::vector<size_t> recs = {cur[i]};
            if (cyc > 0) {
                recs.push_back(prev[i]);
            }
            rt.detector({(double)anc[i], (double)cyc}, recs);
        }
        c.append("TICK", {});
        prev = cur;
    }
    auto fin = rt.measure("M", data);
    for (size_t i = 0; i < anc.size(); i++) {
        rt.detector({(double)anc[i], (double)cycles}, {fin[i], fin[i + 1], prev[i]});
    }
    rt.observable(0, {fin[0]});
    return c;
}

Circuit surface_code(size_t d, size_t cycles) {
    if (d < 2 || cycles < 1) {
        throw std::invalid_argument("surface_code needs d >= 2 and cycles >= 1");
    }
    struct Plaquette {
        bool x_type;
        uint32_t anc;
        // TL, TR, BL, BR data ids or kNone.
        size_t corner[4];
        double r, c;
    };
    auto data_id = [&](long r, long col) -> size_t {
        if (r < 0 || col < 0 || r >= (long)d || col >= (long)d) {
            return kNone;
        }
        return (size_t)(r * (long)d + col);
    };
    std::vector<Plaquette> plaqs;
    uint32_t next = (uint32_t)(d * d);
    for (long r = 0; r <= (long)d; r++) {
        for (long col = 0; col <= (long)d; col++) {
            bool x_type = (r + col) % 2 == 0;
            bool bulk = r >= 1 && r <= (long)d - 1 && col >= 1 && col <= (long)d - 1;
            bool top_bottom = (r == 0 || r == (long)d) && col >= 1 && col <= (long)d - 1 && x_type;
            bool left_right = (col == 0 || col == (long)d) && r >= 1 && r <= (long)d - 1 && !x_type;
            if (!bulk && !top_bottom && !left_right) {
                continue;
            }
            Plaquette p{x_type, next++,
                        {data_id(r - 1, col - 1), data_id(r - 1, col), data_id(r, col - 1), data_id(r, col)},
                        (double)r, (double)col};
            plaqs.push_back(p);
        }
    }
    Circuit c;
    RecordTracker rt{c};
    std::vector<uint32_t> data, zanc, xanc;
    for (uint32_t q = 0; q < d * d; q++) {
        data.push_back(q);
    }
    for (const auto &p : plaqs) {
        (p.x_type ? xanc : zanc).push_back(p.anc);
    }
    c.append("R", data);
    c.append("R", zanc);
    c.append("RX", xanc);
    c.append("TICK", {});
    static const int x_order[4] = {0, 1, 2, 3};
    static const int z_order[4] = {0, 2, 1, 3};
    std::vector<size_t> prev_z, prev_x;
    for (size_t cyc = 0; cyc < cycles; cyc++) {
        if (cyc > 0) {
            c.append("R", zanc);
            c.append("RX", xanc);
            c.append("TICK", {});
        }
        for (int layer = 0; layer < 4; layer++) {
            std::vector<uint32_t> targets;
            for (const auto &p : plaqs) {
                size_t q = p.corner[p.x_type ? x_order[layer] : z_order[layer]];
                if (q == kNone) {
                    continue;
                }
                if (p.x_type) {
                    targets.insert(targets.end(), {p.anc, (uint32_t)q});
                } else {
                    targets.insert(targets.end(), {(uint32_t)q, p.anc});
                }
            }
            c.append("CX", targets);
            c.append("TICK", {});
        }
        auto zr = rt.measure("M", zanc);
        auto xr = rt.measure("MX", xanc);
        size_t zi = 0, xi = 0;
        for (const auto &p : plaqs) {
            if (p.x_type) {
                if (cyc > 0) {
                    rt.detector({p.r, p.c, (double)cyc}, {xr[xi], prev_x[xi]});
                }
                xi++;
            } else {
                std::vector<size_t> recs = {zr[zi]};
                if (cyc > 0) {
                    recs.push_back(prev_z[zi]);
                }
                rt.detector({p.r, p.c, (double)cyc}, recs);
                zi++;
            }
        }
        c.append("TICK", {});
        prev_z = zr;
        prev_x = xr;
    }
    auto fin = rt.measure("M", data);
    size_t zi = 0;
    for (const auto &p : plaqs) {
        if (p.x_type) {
            continue;
        }
        std::vector<size_t> recs = {prev_z[zi++]};
        for (size_t q : p.corner) {
            if (q != kNone) {
                recs.push_back(fin[q]);
            }
        }
        rt.detector({p.r, p.c, (double)cycles}, recs);
    }
    std::vector<size_t> logical;
    for (size_t r = 0; r < d; r++) {
        logical.push_back(fin[r * d]);
    }
    rt.observable(0, logical);
    return c;
}

}  // namespace cultsim
