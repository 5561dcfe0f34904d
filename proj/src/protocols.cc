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

#include "cultsim/protocols.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "cultsim/frames.h"
#include "cultsim/noise.h"

namespace cultsim {

namespace {

// A stretch of a listing that ends with the TICK after a block of detector annotations.
struct Segment {
    size_t begin = 0, end = 0;
    size_t first_record = 0, num_records = 0;
};

std::vector<Segment> split_segments(const Circuit &c) {
    std::vector<Segment> out;
    Segment cur;
    size_t records = 0;
    bool annotated = false;
    for (size_t i = 0; i < c.ops.size(); i++) {
        OpKind k = c.ops[i].kind();
        records += c.ops[i].num_results();
        if (k == OpKind::detector || k == OpKind::observable) {
            annotated = true;
        } else if (k == OpKind::tick && annotated) {
            cur.end = i + 1;
            cur.num_records = records - cur.first_record;
            out.push_back(cur);
            cur = Segment{i + 1, 0, records, 0};
            annotated = false;
        }
    }
    if (cur.begin < c.ops.size()) {
        cur.end = c.ops.size();
        cur.num_records = records - cur.first_record;
        out.push_back(cur);
    }
    return out;
}

bool is_set_deterministic(const std::vector<RecordExpr> &exprs, const std::vector<size_t> &recs) {
    return parity_expression(exprs, recs).symbols.empty();
}

// Deterministic with one and the same value whatever stabilizer state was injected.
bool is_state_independent(const std::vector<std::vector<RecordExpr>> &exprs, const std::vector<size_t> &recs) {
    bool flip = false;
    for (size_t k = 0; k < exprs.size(); k++) {
        auto e = parity_expression(exprs[k], recs);
        if (!e.symbols.empty() || (k > 0 && e.flip != flip)) {
            return false;
        }
        flip = e.flip;
    }
    return true;
}

// For each record r, a state-independent record set whose largest member is r, when one exists.
// Built by elimination over GF(2): record columns stack their symbol sets for every injection
// and the flip differences against injection 0.
std::vector<std::vector<size_t>> state_independent_dependencies(const std::vector<std::vector<RecordExpr>> &exprs) {
    size_t n = exprs[0].size();
    size_t symbols = n;
    for (const auto &ek : exprs) {
        for (const auto &e : ek) {
            for (size_t x : e.symbols) {
                symbols = std::max(symbols, x + 1);
            }
        }
    }
    size_t rows = exprs.size() * symbols + exprs.size();
    size_t words = (rows + 63) / 64, cwords = (n + 63) / 64;
    using Bits = std::vector<uint64_t>;
    auto flip_bit = [](Bits &b, size_t i) { b[i >> 6] ^= uint64_t(1) << (i & 63); };
    auto lowest = [&](const Bits &b) -> size_t {
        for (size_t w = 0; w < b.size(); w++) {
            if (b[w]) {
                return w * 64 + (size_t)std::countr_zero(b[w]);
            }
        }
        return SIZE_MAX;
    };
    std::vector<Bits> pivot_col(rows), pivot_combo(rows);
    std::vector<std::vector<size_t>> out(n);
    for (size_t r = 0; r < n; r++) {
        Bits col(words, 0), combo(cwords, 0);
        for (size_t k = 0; k < exprs.size(); k++) {
            for (size_t x : exprs[k][r].symbols) {
                flip_bit(col, k * symbols + x);
            }
            if (exprs[k][r].flip != exprs[0][r].flip) {
                flip_bit(col, exprs.size() * symbols + k);
            }
        }
        flip_bit(combo, r);
        for (size_t piv = lowest(col); piv != SIZE_MAX; piv = lowest(col)) {
            if (pivot_col[piv].empty()) {
                pivot_col[piv] = col;
                pivot_combo[piv] = combo;
                break;
            }
            for (size_t w = 0; w < words; w++) {
                col[w] ^= pivot_col[piv][w];
            }
            for (size_t w = 0; w < cwords; w++) {
                combo[w] ^= pivot_combo[piv][w];
            }
        }
        if (lowest(col) == SIZE_MAX) {
            for (size_t x = 0; x < n; x++) {
                if ((combo[x >> 6] >> (x & 63)) & 1) {
                    out[r].push_back(x);
                }
            }
        }
    }
    return out;
}

// Builds a circuit out of listing pieces and fresh operations. Detector and observable record
// sets are kept as absolute indices until finish(), which repairs the ones that lost records
// and writes relative references.
class Assembler {
   public:
    // Copies ops [begin, end) of `src`. Records of src are mapped to the new numbering; a
    // reference to a record that was never copied marks the annotation for repair.
    void copy(const Circuit &src, size_t begin, size_t end) {
        auto &map = map_for(src);
        size_t src_records = records_before(src, begin);
        for (size_t i = begin; i < end; i++) {
            const auto &op = src.ops[i];
            OpKind k = op.kind();
            if (k == OpKind::detector || k == OpKind::observable) {
                copy_annotation(src, i, op);
                continue;
            }
            for (size_t j = 0; j < op.num_results(); j++) {
                map[src_records + j] = records_ + j;
            }
            src_records += op.num_results();
            push(op);
        }
    }

    // Copies the annotation `op`, whose rec targets are relative to op index `at` of `src`.
    void copy_annotation(const Circuit &src, size_t at, const Instruction &op) {
        auto &map = map_for(src);
        size_t src_records = records_before(src, at);
        Note note;
        note.kind = op.kind() == OpKind::detector ? Note::detector : Note::observable;
        for (const auto &t : op.targets) {
            size_t old = src_records - t.value;
            if (map[old] == kDropped) {
                note.touched = true;
            } else {
                note.records.push_back(map[old]);
            }
        }
        if (note.kind == Note::observable) {
            note.preferred_k = preferred_k(src, src_records, op);
        }
        add_note(op, std::move(note));
    }

    // New index of record `old` of `src`, if it was copied.
    std::optional<size_t> mapped(const Circuit &src, size_t old) {
        size_t r = map_for(src)[old];
        return r == kDropped ? std::nullopt : std::optional<size_t>(r);
    }

    void push(const Instruction &op) {
        if (op.kind() == OpKind::detector || op.kind() == OpKind::observable) {
            throw std::logic_error("annotations go through add_detector");
        }
        for (size_t j = 0; j < op.num_results(); j++) {
            record_qubit_.push_back(op.kind() == OpKind::measure ? (long)op.targets[j].value : -1);
            record_basis_.push_back(op.kind() == OpKind::measure ? basis_of(op.name) : '?');
        }
        records_ += op.num_results();
        out_.ops.push_back(op);
    }

    void push(const std::string &name, const std::vector<uint32_t> &qubits) {
        Instruction op;
        op.name = name;
        for (uint32_t q : qubits) {
            op.targets.push_back(Target::qubit(q));
        }
        push(op);
    }

    // A detector on the given new record indices, kept as is when deterministic.
    void add_detector(std::vector<double> coords, std::vector<size_t> records) {
        Instruction op;
        op.name = "DT";
        op.args = std::move(coords);
        Note note;
        note.kind = Note::detector;
        note.records = std::move(records);
        add_note(op, std::move(note));
    }

    // Detector for record r against the previous measurement of the same qubit when that
    // comparison is deterministic, otherwise against whatever earlier records fix its value.
    void add_local_detector(std::vector<double> coords, size_t r) {
        Instruction op;
        op.name = "DT";
        op.args = std::move(coords);
        Note note;
        note.kind = Note::local;
        note.records = {r};
        add_note(op, std::move(note));
    }

    // Detectors for every deterministic record in [first, records()).
    void add_readout_detectors(size_t first, double t) {
        Instruction op;
        op.name = "DT";
        Note note;
        note.kind = Note::readout;
        note.first = first;
        note.time = t;
        add_note(op, std::move(note));
    }

    // An observable made of the records in [first, records()) that flips between the
    // injections k and k+2 while staying deterministic for both.
    void add_readout_observable(size_t first, int k) {
        Instruction op;
        op.name = "OI";
        op.args = {0};
        Note note;
        note.kind = Note::logical;
        note.first = first;
        note.preferred_k = k;
        add_note(op, std::move(note));
    }

    size_t records() const {
        return records_;
    }

    Circuit finish() {
        std::vector<std::vector<RecordExpr>> exprs;
        for (int k = 0; k < 4; k++) {
            exprs.push_back(record_expressions(out_, k));
        }
        auto hidden = [&](const std::vector<size_t> &s) {
            return std::any_of(s.begin(), s.end(), [&](size_t x) { return x >= records_; });
        };
        // Detectors derived here (not copied from a listing) must hold for every injected state
        // under both T stand-ins, so they never carry logical information.
        std::vector<std::vector<RecordExpr>> all_exprs;
        for (TStandIn t : {TStandIn::sqrt_y, TStandIn::identity}) {
            for (int k = 0; k < 4; k++) {
                all_exprs.push_back(t == TStandIn::sqrt_y ? exprs[k] : record_expressions(out_, k, t));
            }
        }
        auto deps = state_independent_dependencies(all_exprs);
        // A candidate that depends on the injected state is replaced by the dependency ending at
        // its last record, or dropped.
        auto independent = [&](std::vector<size_t> s) -> std::vector<size_t> {
            if (s.empty() || is_state_independent(all_exprs, s)) {
                return s;
            }
            return deps[*std::max_element(s.begin(), s.end())];
        };
        auto coords = out_.qubit_coords();
        // Resolved annotations per placeholder op: list of (args, records).
        std::map<size_t, std::vector<std::pair<std::vector<double>, std::vector<size_t>>>> resolved;
        for (const auto &[at, note] : notes_) {
            const auto &op = out_.ops[at];
            auto &dst = resolved[at];
            switch (note.kind) {
                case Note::detector: {
                    auto s = make_deterministic(exprs[0], note.records);
                    if (!s.empty() && !hidden(s)) {
                        dst.emplace_back(op.args, s);
                    }
                    break;
                }
                case Note::observable: {
                    if (!note.touched) {
                        dst.emplace_back(op.args, note.records);
                    } else {
                        dst.emplace_back(op.args, repair_observable(exprs, note));
                    }
                    break;
                }
                case Note::local: {
                    size_t r = note.records[0];
                    auto s = independent(local_detector(exprs[0], r));
                    if (!s.empty()) {
                        dst.emplace_back(op.args, s);
                    }
                    break;
                }
                case Note::readout: {
                    for (size_t r = note.first; r < note.recs_end; r++) {
                        const auto &e = exprs[0][r];
                        if (e.symbols.size() == 1 && e.symbols[0] == r) {
                            continue;
                        }
                        auto s = local_detector(exprs[0], r);
                        if (s.empty() || hidden(s)) {
                            continue;
                        }
                        s = independent(s);
                        if (s.empty()) {
                            continue;
                        }
                        std::vector<double> args;
                        if (record_qubit_[r] >= 0 && coords.count((uint32_t)record_qubit_[r])) {
                            args = coords[(uint32_t)record_qubit_[r]];
                        }
                        args.push_back(note.time);
                        dst.emplace_back(args, s);
                    }
                    break;
                }
                case Note::logical: {
                    std::vector<double> args = op.args;
                    dst.emplace_back(args, find_logical(exprs, note));
                    break;
                }
            }
        }
        Circuit c;
        size_t seen = 0;
        for (size_t i = 0; i < out_.ops.size(); i++) {
            auto it = resolved.find(i);
            if (it == resolved.end()) {
                seen += out_.ops[i].num_results();
                c.ops.push_back(out_.ops[i]);
                continue;
            }
            for (auto &[args, recs] : it->second) {
                Instruction op;
                op.name = out_.ops[i].name;
                op.args = args;
                std::sort(recs.begin(), recs.end(), std::greater<>());
                for (size_t r : recs) {
                    op.targets.push_back(Target::rec((uint32_t)(seen - r)));
                }
                c.ops.push_back(std::move(op));
            }
        }
        auto check = record_expressions(c, 0);
        for (const auto &d : c.detectors()) {
            if (!is_set_deterministic(check, d.records)) {
                throw std::logic_error("assembled circuit has a nondeterministic detector");
            }
        }
        return c;
    }

   private:
    static constexpr size_t kDropped = (size_t)-1;

    struct Note {
        enum Kind { detector, observable, local, readout, logical } kind = detector;
        std::vector<size_t> records;
        bool touched = false;
        int preferred_k = -1;
        size_t first = 0, recs_end = 0;
        double time = 0;
    };

    std::vector<size_t> &map_for(const Circuit &src) {
        auto &map = maps_[&src];
        if (map.empty()) {
            map.assign(src.num_measurements(), kDropped);
        }
        return map;
    }

    static size_t records_before(const Circuit &src, size_t at) {
        size_t n = 0;
        for (size_t i = 0; i < at; i++) {
            n += src.ops[i].num_results();
        }
        return n;
    }

    void add_note(const Instruction &op, Note note) {
        Instruction placeholder;
        placeholder.name = op.name;
        placeholder.args = op.args;
        note.recs_end = records_;
        notes_.emplace_back(out_.ops.size(), std::move(note));
        out_.ops.push_back(std::move(placeholder));
    }

    // Injection index at which the source observable is deterministic, if any.
    int preferred_k(const Circuit &src, size_t src_records, const Instruction &op) {
        std::vector<size_t> recs;
        for (const auto &t : op.targets) {
            recs.push_back(src_records - t.value);
        }
        for (int k = 0; k < 2; k++) {
            auto key = std::make_pair(&src, k);
            auto it = src_exprs_.find(key);
            if (it == src_exprs_.end()) {
                it = src_exprs_.emplace(key, record_expressions(src, k)).first;
            }
            if (is_set_deterministic(it->second, recs)) {
                return k;
            }
        }
        return -1;
    }

    std::vector<size_t> local_detector(const std::vector<RecordExpr> &exprs, size_t r) {
        if (exprs[r].symbols.empty()) {
            return {r};
        }
        long q = record_qubit_[r];
        if (q >= 0) {
            for (size_t p = r; p-- > 0;) {
                if (record_qubit_[p] == q && record_basis_[p] == record_basis_[r]) {
                    if (is_set_deterministic(exprs, {p, r})) {
                        return {p, r};
                    }
                    break;
                }
            }
        }
        return make_deterministic(exprs, {r});
    }

    bool flips_logically(const std::vector<std::vector<RecordExpr>> &exprs, const std::vector<size_t> &s, int k) {
        if (s.empty()) {
            return false;
        }
        auto a = parity_expression(exprs[k], s), b = parity_expression(exprs[k + 2], s);
        return a.symbols.empty() && b.symbols.empty() && a.flip != b.flip;
    }

    std::vector<size_t> repair_observable(const std::vector<std::vector<RecordExpr>> &exprs, const Note &note) {
        if (note.preferred_k >= 0) {
            auto s = make_deterministic(exprs[note.preferred_k], note.records);
            if (!s.empty()) {
                return s;
            }
        }
        for (int k = 0; k < 2; k++) {
            auto s = make_deterministic(exprs[k], note.records);
            if (flips_logically(exprs, s, k)) {
                return s;
            }
        }
        throw std::logic_error("could not repair an observable after removing records");
    }

    std::vector<size_t> find_logical(const std::vector<std::vector<RecordExpr>> &exprs, const Note &note) {
        int k = note.preferred_k;
        for (size_t r = note.first; r < note.recs_end; r++) {
            const auto &e = exprs[k][r];
            if (e.symbols.size() == 1 && e.symbols[0] == r) {
                continue;
            }
            auto s = make_deterministic(exprs[k], {r});
            if (flips_logically(exprs, s, k)) {
                return s;
            }
        }
        throw std::logic_error("readout carries no logical observable");
    }

    Circuit out_;
    size_t records_ = 0;
    std::vector<long> record_qubit_;
    std::vector<char> record_basis_;
    std::vector<std::pair<size_t, Note>> notes_;
    std::map<const Circuit *, std::vector<size_t>> maps_;
    std::map<std::pair<const Circuit *, int>, std::vector<RecordExpr>> src_exprs_;
};

const Circuit &cached(Listing which) {
    static std::map<Listing, Circuit> cache;
    auto it = cache.find(which);
    if (it == cache.end()) {
        it = cache.emplace(which, parse(listing_text(which))).first;
    }
    return it->second;
}

Circuit finish_params(Circuit c, const ProtocolParams &p) {
    return p.echoes ? c : strip_echoes(c);
}

// Index of the last op with the given name in [begin, end).
size_t last_named(const Circuit &c, size_t begin, size_t end, const std::string &name) {
    for (size_t i = end; i-- > begin;) {
        if (c.ops[i].name == name) {
            return i;
        }
    }
    throw std::logic_error("listing is missing an expected " + name);
}

// Kickback listing segments: 0 injection, 1 QEC, 2-3 cultivation, 4 QEC, 5-6 first kickback
// round, 7 QEC, 8-9 second kickback round, 10 QEC fused with the final readout.
constexpr size_t kKtSegments = 11;
const std::vector<uint32_t> kKtData = {5, 1, 10, 7, 13, 3, 12};
constexpr uint32_t kKtHelper = 9;

}  // namespace

Circuit listing(Listing which) {
    return cached(which);
}

void ProtocolParams::validate() const {
    if (!(theta >= 0 && theta < 2 * std::numbers::pi)) {
        throw std::invalid_argument("theta must lie in [0, 2pi)");
    }
    if (n_cycles < 1) {
        throw std::invalid_argument("n_cycles must be at least 1");
    }
    if (graft_basis != 'X' && graft_basis != 'Z') {
        throw std::invalid_argument("graft basis must be X or Z");
    }
}

Circuit build_injection(double theta) {
    ProtocolParams p;
    p.theta = theta;
    p.validate();
    return cached(Listing::injection);
}

Circuit build_cultivation_round() {
    return cached(Listing::cultivation);
}

namespace {

Circuit qec_cycle(bool after_injection, double t) {
    const Circuit &kt = cached(Listing::fig3_kickback);
    auto segs = split_segments(kt);
    // The second QEC cycle resets all six ancillas, so it stands on its own.
    const Segment &body = segs[4];
    const Segment &first = segs[1];
    size_t m = last_named(kt, body.begin, body.end, "M");
    Circuit c;
    for (size_t i = body.begin; i <= m; i++) {
        c.ops.push_back(kt.ops[i]);
    }
    // Detector coordinates follow the first cycle's ancilla order.
    size_t k = 0;
    for (size_t i = first.begin; i < first.end; i++) {
        const auto &op = kt.ops[i];
        if (op.kind() != OpKind::detector) {
            continue;
        }
        Instruction dt;
        dt.name = "DT";
        dt.args = op.args;
        dt.args.back() = t;
        dt.targets.push_back(Target::rec((uint32_t)(6 - k)));
        if (!after_injection) {
            dt.targets.push_back(Target::rec((uint32_t)(12 - k)));
        }
        c.ops.push_back(dt);
        k++;
    }
    c.ops.push_back(Instruction{"TICK", {}, {}, {}});
    return c;
}

}  // namespace

Circuit build_qec_cycle(bool after_injection) {
    return qec_cycle(after_injection, 0);
}

Circuit build_qec_memory(size_t cycles) {
    if (cycles < 1) {
        throw std::invalid_argument("need at least one QEC cycle");
    }
    const Circuit &kt = cached(Listing::fig3_kickback);
    auto segs = split_segments(kt);
    Circuit c;
    for (size_t i = segs[0].begin; i < segs[0].end; i++) {
        c.ops.push_back(kt.ops[i]);
    }
    for (size_t j = 0; j < cycles; j++) {
        auto cyc = qec_cycle(j == 0, (double)(j + 1));
        c.ops.insert(c.ops.end(), cyc.ops.begin(), cyc.ops.end());
    }
    return c;
}

Circuit build_tomography(const ProtocolParams &params) {
    params.validate();
    Listing which = params.variant == Variant::with_cultivation ? Listing::fig2_cultivation : Listing::injection;
    return finish_params(cached(which), params);
}

Circuit build_kt(const ProtocolParams &params) {
    params.validate();
    const Circuit &kt = cached(Listing::fig3_kickback);
    if (params.variant == Variant::with_cultivation && params.qec_mode == QecMode::full) {
        return finish_params(kt, params);
    }
    auto segs = split_segments(kt);
    if (segs.size() != kKtSegments) {
        throw std::logic_error("kickback listing has an unexpected layout");
    }
    std::set<size_t> drop;
    if (params.variant == Variant::injection_only) {
        drop.insert({2, 3});
    }
    if (params.qec_mode == QecMode::interleaved) {
        drop.insert(4);
    } else if (params.qec_mode == QecMode::none) {
        drop.insert({1, 4, 7});
    }
    bool replace_final = params.qec_mode != QecMode::full;
    Assembler a;
    for (size_t s = 0; s < kKtSegments; s++) {
        if (s == 2 && drop.count(s)) {
            // The first cultivation round leaves the helper in |+>; the kickback rounds rely on it.
            a.push("H", {kKtHelper});
            a.push("TICK", {});
        }
        if (drop.count(s) || (s == kKtSegments - 1 && replace_final)) {
            continue;
        }
        a.copy(kt, segs[s].begin, segs[s].end);
    }
    if (replace_final) {
        a.push("H", kKtData);
        a.push("TICK", {});
        std::vector<uint32_t> measured = kKtData;
        measured.push_back(kKtHelper);
        size_t first = a.records();
        a.push("M", measured);
        a.add_readout_detectors(first, 11);
    }
    return finish_params(a.finish(), params);
}

Circuit build_graft(const ProtocolParams &params) {
    params.validate();
    if (params.n_cycles < 2) {
        throw std::invalid_argument("grafting needs n_cycles >= 2: the grafted-code cycle is fused with the readout");
    }
    const Circuit &g = cached(Listing::fig4_graft_n2);
    bool cultivate = params.variant == Variant::with_cultivation;
    if (cultivate && params.n_cycles == 2 && params.graft_basis == 'X') {
        return finish_params(g, params);
    }
    auto segs = split_segments(g);
    if (segs.size() != 5) {
        throw std::logic_error("grafting listing has an unexpected layout");
    }
    const Segment &fin = segs[4];
    size_t m = last_named(g, fin.begin, fin.end, "M");
    size_t h = last_named(g, fin.begin, m, "H");
    const Instruction &reset = g.ops[fin.begin];
    std::set<uint32_t> ancillas;
    for (const auto &t : reset.targets) {
        ancillas.insert(t.value);
    }
    size_t num_anc = ancillas.size();
    std::vector<uint32_t> anc_order, data_order;
    for (size_t j = 0; j < g.ops[m].targets.size(); j++) {
        uint32_t q = g.ops[m].targets[j].value;
        (j < num_anc ? anc_order : data_order).push_back(q);
    }
    std::vector<uint32_t> anc_h;
    for (const auto &t : g.ops[h].targets) {
        if (ancillas.count(t.value)) {
            anc_h.push_back(t.value);
        }
    }
    // Final-segment detectors whose only in-segment record is one ancilla result compare the
    // grafted cycle with earlier records; the rest belong to the readout.
    struct AncDt {
        size_t op;
        size_t slot;
        std::vector<double> coords;
        std::vector<size_t> before;
    };
    std::vector<AncDt> anc_dts;
    std::set<size_t> anc_dt_ops;
    size_t fin_records_end = fin.first_record + fin.num_records;
    for (size_t i = m + 1; i < fin.end; i++) {
        const auto &op = g.ops[i];
        if (op.kind() != OpKind::detector) {
            continue;
        }
        std::vector<size_t> inside, before;
        for (const auto &t : op.targets) {
            size_t r = fin_records_end - t.value;
            (r >= fin.first_record ? inside : before).push_back(r);
        }
        if (inside.size() == 1 && inside[0] < fin.first_record + num_anc) {
            anc_dts.push_back(AncDt{i, inside[0] - fin.first_record, op.args, before});
            anc_dt_ops.insert(i);
        }
    }

    Assembler a;
    for (size_t s = 0; s < 4; s++) {
        if (!cultivate && (s == 1 || s == 2)) {
            continue;
        }
        a.copy(g, segs[s].begin, segs[s].end);
    }
    size_t idles = params.n_cycles - 2;
    // Cycle bodies without the readout rotation, measuring ancillas only.
    for (size_t j = 0; j < idles; j++) {
        a.copy(g, fin.begin, h);
        a.push("H", anc_h);
        a.push("TICK", {});
        size_t first = a.records();
        a.push("M", anc_order);
        for (const auto &d : anc_dts) {
            auto coords = d.coords;
            coords.back() += 2.0 * (double)j;
            if (j == 0) {
                // Same comparison against the extension cycle as the published grafted cycle.
                std::vector<size_t> recs = {first + d.slot};
                for (size_t r : d.before) {
                    if (auto nr = a.mapped(g, r)) {
                        recs.push_back(*nr);
                    }
                }
                a.add_detector(coords, recs);
            } else {
                a.add_local_detector(coords, first + d.slot);
            }
        }
        a.push("TICK", {});
    }
    // Final grafted cycle with the readout.
    size_t shift_t = 2 * idles;
    if (params.graft_basis == 'X') {
        if (idles == 0) {
            a.copy(g, fin.begin, fin.end);
        } else {
            a.copy(g, fin.begin, m + 1);
            size_t first = a.records() - g.ops[m].targets.size();
            for (size_t i = m + 1; i < fin.end; i++) {
                const auto &op = g.ops[i];
                if (anc_dt_ops.count(i)) {
                    const auto &d = *std::find_if(anc_dts.begin(), anc_dts.end(), [&](const AncDt &x) { return x.op == i; });
                    auto coords = d.coords;
                    coords.back() += (double)shift_t;
                    a.add_local_detector(coords, first + d.slot);
                } else if (op.kind() == OpKind::detector) {
                    Instruction shifted = op;
                    shifted.args.back() += (double)shift_t;
                    a.copy_annotation(g, i, shifted);
                } else {
                    a.copy(g, i, i + 1);
                }
            }
        }
    } else {
        a.copy(g, fin.begin, m);
        a.push("H", data_order);
        a.push("TICK", {});
        size_t first = a.records();
        a.copy(g, m, m + 1);
        for (const auto &d : anc_dts) {
            auto coords = d.coords;
            coords.back() += (double)shift_t;
            if (idles == 0) {
                a.copy_annotation(g, d.op, Instruction{"DT", {}, coords, g.ops[d.op].targets});
            } else {
                a.add_local_detector(coords, first + d.slot);
            }
        }
        a.add_readout_detectors(first + num_anc, 5.0 + (double)shift_t);
        a.add_readout_observable(first + num_anc, 0);
    }
    return finish_params(a.finish(), params);
}

Circuit build_memory(const ProtocolParams &params) {
    if (params.n_cycles < 2) {
        throw std::invalid_argument("the memory experiment needs n_cycles >= 2");
    }
    ProtocolParams p = params;
    p.variant = Variant::with_cultivation;
    p.theta = std::numbers::pi / 4;
    return build_graft(p);
}

Circuit build_experiment(const std::string &name, const ProtocolParams &params) {
    if (name == "injection") {
        return build_injection(params.theta);
    }
    if (name == "cultivation") {
        return build_cultivation_round();
    }
    if (name == "qec") {
        return build_qec_memory(params.n_cycles);
    }
    if (name == "tomography") {
        return build_tomography(params);
    }
    if (name == "kt") {
        return build_kt(params);
    }
    if (name == "kt-interleaved") {
        ProtocolParams p = params;
        p.qec_mode = QecMode::interleaved;
        return build_kt(p);
    }
    if (name == "graft") {
        return build_graft(params);
    }
    if (name == "memory") {
        return build_memory(params);
    }
    throw std::invalid_argument("unknown experiment: " + name);
}

}  // namespace cultsim
