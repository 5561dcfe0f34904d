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

#include "cultsim/engine.h"

#include <algorithm>
#include <cmath>

#include "cultsim/rng.h"

namespace cultsim {

namespace {

constexpr double kPi = std::numbers::pi;

enum class Binding { none, t, t_dag, inj_rz, inj_ry };

Binding binding_of(const Instruction &op) {
    if (op.tag == "T_gate") {
        return Binding::t;
    }
    if (op.tag == "T_dagger_gate" || op.tag == "negative_T_gate") {
        return Binding::t_dag;
    }
    if (op.tag == "injection" && op.name == "S") {
        return Binding::inj_rz;
    }
    if (op.tag == "injection" && op.name == "H") {
        return Binding::inj_ry;
    }
    return Binding::none;
}

int quarter_turns(double theta) {
    double k = theta / (kPi / 2);
    double r = std::round(k);
    if (std::abs(k - r) > 1e-9) {
        throw std::invalid_argument("clifford tag mode needs theta at a multiple of pi/2");
    }
    return (((int)r % 4) + 4) % 4;
}

const char *clifford_rotation(Binding b, int k) {
    static const char *rz[] = {"I", "S", "Z", "S_DAG"};
    static const char *ry[] = {"I", "SQRT_Y", "Y", "SQRT_Y_DAG"};
    return b == Binding::inj_rz ? rz[k] : ry[k];
}

Matrix injection_matrix(Binding b, double theta) {
    return b == Binding::inj_rz ? rz(theta) : ry(theta);
}

char pauli_char(int code) {
    return "IXYZ"[code & 3];
}

struct RankedOps {
    RankedState st;
    const ChannelOptions &copt;

    void clifford(const EngineStep &s, const std::vector<size_t> &t) {
        apply_clifford(st, s.clifford, t);
    }
    void unitary(const KrausChannel &ch, const Matrix &, size_t q) {
        apply_channel_branch(st, {q}, ch, 0, copt);
    }
    void pauli(const PauliString &p) {
        apply_pauli(st, p);
    }
    int measure_pauli(const PauliString &p, double u) {
        return measure(st, p, u);
    }
    int measure_qubit(size_t q, char basis, double u, bool) {
        return measure(st, PauliString::single(st.n(), q, basis), u);
    }
    void reset(size_t q, char basis, double u) {
        if (measure(st, PauliString::single(st.n(), q, basis), u)) {
            apply_pauli(st, PauliString::single(st.n(), q, basis == 'Z' ? 'X' : 'Z'));
        }
    }
    bool live(size_t) const {
        return true;
    }
    double expect(const PauliString &p) const {
        return cultsim::expectation(st, p).real();
    }
    void finish(ShotResult &r) const {
        r.peak_m = std::max(st.peak_m, st.m());
        r.discarded_weight = st.discarded_weight;
        r.peak_live = st.n();
    }
};

struct DenseOps {
    DenseState st;
    size_t peak = 0;

    void ensure(size_t q) {
        if (!st.is_live(q)) {
            if (st.labels.size() + 1 > st.cap) {
                throw CapacityError("dense backend needs more than " + std::to_string(st.cap) + " live qubits");
            }
            creative_reset(st, q, 'Z');
            peak = std::max(peak, st.labels.size());
        }
    }
    void clifford(const EngineStep &s, const std::vector<size_t> &t) {
        for (size_t q : t) {
            ensure(q);
        }
        apply_matrix(st, s.unitary, t);
    }
    void unitary(const KrausChannel &, const Matrix &m, size_t q) {
        ensure(q);
        apply_matrix(st, m, {q});
    }
    void pauli(const PauliString &p) {
        for (size_t q : p.support()) {
            ensure(q);
        }
        apply_pauli(st, p);
    }
    int measure_pauli(const PauliString &p, double u) {
        for (size_t q : p.support()) {
            ensure(q);
        }
        return cultsim::measure_pauli(st, p, u);
    }
    int measure_qubit(size_t q, char basis, double u, bool destructive) {
        ensure(q);
        if (destructive && st.labels.size() > 1) {
            return destructive_measure(st, q, basis, u);
        }
        return cultsim::measure_pauli(st, PauliString::single(q + 1, q, basis), u);
    }
    void reset(size_t q, char basis, double u) {
        if (!st.is_live(q)) {
            if (st.labels.size() + 1 > st.cap) {
                throw CapacityError("dense backend needs more than " + std::to_string(st.cap) + " live qubits");
            }
            creative_reset(st, q, basis);
            peak = std::max(peak, st.labels.size());
            return;
        }
        if (cultsim::measure_pauli(st, PauliString::single(q + 1, q, basis), u)) {
            apply_pauli(st, PauliString::single(q + 1, q, basis == 'Z' ? 'X' : 'Z'));
        }
    }
    bool live(size_t q) const {
        return st.is_live(q);
    }
    double expect(const PauliString &p) const {
        PauliString restricted(p.n);
        restricted.log_i = p.log_i;
        for (size_t q : p.support()) {
            if (st.is_live(q)) {
                restricted.set(q, p.at(q));
            } else if (p.x(q)) {
                return 0;
            }
        }
        return cultsim::expectation(st, restricted);
    }
    void finish(ShotResult &r) const {
        r.peak_live = peak;
    }
};

template <typename Ops>
void run_steps(Ops &ops, const Circuit &c, const std::vector<EngineStep> &steps, size_t n, uint64_t seed,
               uint64_t shot, bool forced, bool reference_pass, bool early_abort,
               const std::vector<uint8_t> &ref_detectors, ShotResult &r) {
    KeyedRng rng(seed, shot);
    auto draw = [&] { return forced ? 0.0 : rng.uniform(); };
    std::vector<uint8_t> obs(c.num_observables(), 0);
    for (const auto &s : steps) {
        const Instruction &op = c.ops[s.op];
        switch (s.kind) {
            case OpKind::gate1:
            case OpKind::gate2:
            case OpKind::rotation: {
                // RZ carries coherent error, which the reference sample leaves out.
                if (s.action == EngineStep::Action::skip || (s.kind == OpKind::rotation && reference_pass)) {
                    break;
                }
                size_t arity = s.kind == OpKind::gate2 ? 2 : 1;
                for (size_t i = 0; i < op.targets.size(); i += arity) {
                    if (s.action == EngineStep::Action::clifford) {
                        if (arity == 2) {
                            ops.clifford(s, {op.targets[i].value, op.targets[i + 1].value});
                        } else {
                            ops.clifford(s, {op.targets[i].value});
                        }
                    } else {
                        size_t q = op.targets[i].value;
                        if (s.kind == OpKind::rotation && !ops.live(q)) {
                            continue;
                        }
                        bool ref = reference_pass && s.has_reference_variant;
                        ops.unitary(ref ? s.reference_channel : s.channel, ref ? s.reference_unitary : s.unitary, q);
                    }
                }
                break;
            }
            case OpKind::measure: {
                char basis = basis_of(op.name);
                double flip = op.args.empty() ? 0 : op.args[0];
                for (size_t i = 0; i < op.targets.size(); i++) {
                    int bit = ops.measure_qubit(op.targets[i].value, basis, draw(), s.destructive[i]);
                    if (flip > 0 && !forced && rng.uniform() < flip) {
                        bit ^= 1;
                    }
                    r.record.push_back((uint8_t)bit);
                }
                break;
            }
            case OpKind::measure_pauli: {
                double flip = op.args.empty() ? 0 : op.args[0];
                for (const auto &t : op.targets) {
                    PauliString p(n);
                    for (const auto &[c2, q] : t.product) {
                        p.set(q, c2);
                    }
                    int bit = ops.measure_pauli(p, draw());
                    if (flip > 0 && !forced && rng.uniform() < flip) {
                        bit ^= 1;
                    }
                    r.record.push_back((uint8_t)bit);
                }
                break;
            }
            case OpKind::reset: {
                char basis = basis_of(op.name);
                for (const auto &t : op.targets) {
                    ops.reset(t.value, basis, draw());
                }
                break;
            }
            case OpKind::noise1: {
                if (forced) {
                    break;
                }
                double p = op.args[0];
                for (const auto &t : op.targets) {
                    double u = rng.uniform();
                    if (u >= p || !ops.live(t.value)) {
                        continue;
                    }
                    char pc = op.name == "X_ERROR"   ? 'X'
                              : op.name == "Y_ERROR" ? 'Y'
                              : op.name == "Z_ERROR" ? 'Z'
                                                     : pauli_char(1 + std::min(2, (int)(u / p * 3)));
                    ops.pauli(PauliString::single(n, t.value, pc));
                }
                break;
            }
            case OpKind::noise2: {
                if (forced) {
                    break;
                }
                double p = op.args[0];
                for (size_t i = 0; i < op.targets.size(); i += 2) {
                    double u = rng.uniform();
                    if (u >= p) {
                        continue;
                    }
                    int idx = 1 + std::min(14, (int)(u / p * 15));
                    PauliString e(n);
                    size_t a = op.targets[i].value, b = op.targets[i + 1].value;
                    if (ops.live(a)) {
                        e.set(a, pauli_char(idx & 3));
                    }
                    if (ops.live(b)) {
                        e.set(b, pauli_char(idx >> 2));
                    }
                    if (!e.is_identity()) {
                        ops.pauli(e);
                    }
                }
                break;
            }
            case OpKind::detector: {
                uint8_t v = 0;
                for (const auto &t : op.targets) {
                    v ^= r.record[r.record.size() - t.value];
                }
                if (!reference_pass) {
                    v ^= ref_detectors[r.detector_events.size()];
                }
                r.detector_events.push_back(v);
                if (v && early_abort) {
                    r.aborted = true;
                    ops.finish(r);
                    return;
                }
                break;
            }
            case OpKind::observable: {
                uint8_t v = 0;
                for (const auto &t : op.targets) {
                    v ^= r.record[r.record.size() - t.value];
                }
                obs[(size_t)op.args[0]] ^= v;
                break;
            }
            case OpKind::tick:
            case OpKind::coords:
            case OpKind::annotation:
                break;
        }
    }
    r.observable_flips = obs;
    ops.finish(r);
}

}  // namespace

bool ShotResult::any_event() const {
    return aborted || std::any_of(detector_events.begin(), detector_events.end(), [](uint8_t v) { return v; });
}

Engine::Engine(Circuit c, EngineOptions opt) : circuit_(std::move(c)), opt_(opt) {
    prepare();
    ShotResult ref = execute(0, 0, true, true, {});
    reference_ = ref.record;
    reference_detectors_ = ref.detector_events;
    reference_observables_ = ref.observable_flips;
}

Engine::Engine(Circuit c, EngineOptions opt, std::vector<uint8_t> reference)
    : circuit_(std::move(c)), opt_(opt), reference_(std::move(reference)) {
    prepare();
    auto ev = evaluate_records(circuit_, reference_);
    reference_detectors_ = ev.detectors;
    reference_observables_ = ev.observables;
}

void Engine::prepare() {
    n_ = std::max<size_t>(1, circuit_.num_qubits());
    if (opt_.backend == Backend::ranked && n_ > kMaxRankedQubits) {
        throw CapacityError("ranked backend supports at most 128 qubits");
    }
    int k = 0, k_ref = 0;
    if (opt_.tags == TagMode::clifford) {
        k = quarter_turns(opt_.theta);
        k_ref = quarter_turns(opt_.reference_theta);
    }
    auto set_unitary = [](EngineStep &s, const Matrix &m) {
        s.action = EngineStep::Action::unitary;
        s.unitary = m;
        s.channel = KrausChannel::unitary(m);
    };
    auto set_clifford = [](EngineStep &s, const std::string &name) {
        if (name == "I") {
            s.action = EngineStep::Action::skip;
            return;
        }
        s.action = EngineStep::Action::clifford;
        s.clifford = CliffordMap::named(name);
        s.clifford.build_table();
        s.unitary = clifford_matrix(name);
    };
    steps_.clear();
    for (size_t i = 0; i < circuit_.ops.size(); i++) {
        const Instruction &op = circuit_.ops[i];
        EngineStep s;
        s.op = i;
        s.kind = op.kind();
        if (s.kind == OpKind::gate1 || s.kind == OpKind::gate2) {
            Binding b = opt_.tags == TagMode::literal ? Binding::none : binding_of(op);
            if (b == Binding::none) {
                set_clifford(s, op.name);
            } else if (opt_.tags == TagMode::clifford) {
                if (b == Binding::t || b == Binding::t_dag) {
                    set_clifford(s, b == Binding::t ? "SQRT_Y" : "SQRT_Y_DAG");
                } else {
                    set_clifford(s, clifford_rotation(b, k));
                    if (k_ref != k) {
                        // Reference variant executes as a unitary so one step can hold both.
                        s.has_reference_variant = true;
                        s.reference_unitary = clifford_matrix(clifford_rotation(b, k_ref));
                        s.reference_channel = KrausChannel::unitary(s.reference_unitary);
                        s.action = EngineStep::Action::unitary;
                        s.unitary = clifford_matrix(clifford_rotation(b, k));
                        s.channel = KrausChannel::unitary(s.unitary);
                    }
                }
            } else if (b == Binding::t || b == Binding::t_dag) {
                set_unitary(s, ry(b == Binding::t ? kPi / 4 : -kPi / 4));
            } else {
                set_unitary(s, injection_matrix(b, opt_.theta));
                s.has_reference_variant = true;
                s.reference_unitary = injection_matrix(b, opt_.reference_theta);
                s.reference_channel = KrausChannel::unitary(s.reference_unitary);
            }
        } else if (s.kind == OpKind::rotation) {
            set_unitary(s, rz(op.args[0]));
        }
        steps_.push_back(std::move(s));
    }
    // A measurement may remove its qubit when the next non-noise use is a reset or nothing.
    std::vector<int> next_use(n_, 0);  // 0 none, 1 reset, 2 other
    for (size_t i = circuit_.ops.size(); i-- > 0;) {
        const Instruction &op = circuit_.ops[i];
        EngineStep &s = steps_[i];
        switch (s.kind) {
            case OpKind::measure:
                s.destructive.resize(op.targets.size());
                for (size_t j = op.targets.size(); j-- > 0;) {
                    size_t q = op.targets[j].value;
                    s.destructive[j] = next_use[q] != 2;
                    next_use[q] = 2;
                }
                break;
            case OpKind::reset:
                for (const auto &t : op.targets) {
                    next_use[t.value] = 1;
                }
                break;
            case OpKind::gate1:
            case OpKind::gate2:
            case OpKind::measure_pauli:
                if (s.action == EngineStep::Action::skip) {
                    break;
                }
                for (const auto &t : op.targets) {
                    if (t.kind == Target::Kind::qubit) {
                        next_use[t.value] = 2;
                    }
                    for (const auto &f : t.product) {
                        next_use[f.second] = 2;
                    }
                }
                break;
            default:
                break;
        }
    }
}

ShotResult Engine::execute(uint64_t seed, uint64_t shot, bool forced, bool reference_pass,
                           const std::vector<PauliString> &final_paulis) const {
    if (opt_.backend == Backend::ranked) {
        return execute_ranked(seed, shot, forced, reference_pass, final_paulis);
    }
    return execute_dense(seed, shot, forced, reference_pass, final_paulis);
}

ShotResult Engine::execute_ranked(uint64_t seed, uint64_t shot, bool forced, bool reference_pass,
                                  const std::vector<PauliString> &final_paulis) const {
    RankedOps ops{init_zero(n_), opt_.channel};
    ops.st.m_max = opt_.m_max;
    ops.st.eps = opt_.eps;
    ShotResult r;
    run_steps(ops, circuit_, steps_, n_, seed, shot, forced, reference_pass, opt_.early_abort && !reference_pass,
              reference_detectors_, r);
    if (!r.aborted) {
        for (const auto &p : final_paulis) {
            r.expectations.push_back(ops.expect(p));
        }
    }
    if (!reference_pass && !r.aborted) {
        for (size_t k = 0; k < r.observable_flips.size(); k++) {
            r.observable_flips[k] ^= reference_observables_[k];
        }
    }
    return r;
}

ShotResult Engine::execute_dense(uint64_t seed, uint64_t shot, bool forced, bool reference_pass,
                                 const std::vector<PauliString> &final_paulis) const {
    DenseOps ops{DenseState::zero({}, opt_.dense_cap)};
    ShotResult r;
    run_steps(ops, circuit_, steps_, n_, seed, shot, forced, reference_pass, opt_.early_abort && !reference_pass,
              reference_detectors_, r);
    if (!r.aborted) {
        for (const auto &p : final_paulis) {
            r.expectations.push_back(ops.expect(p));
        }
    }
    if (!reference_pass && !r.aborted) {
        for (size_t k = 0; k < r.observable_flips.size(); k++) {
            r.observable_flips[k] ^= reference_observables_[k];
        }
    }
    return r;
}

ShotResult Engine::run(uint64_t seed, uint64_t shot, const std::vector<PauliString> &final_paulis) const {
    return execute(seed, shot, false, false, final_paulis);
}

ShotResult Engine::run_forced(const std::vector<PauliString> &final_paulis) const {
    return execute(0, 0, true, false, final_paulis);
}

}  // namespace cultsim
