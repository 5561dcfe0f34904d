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

#include <gtest/gtest.h>

#include <cmath>

#include "cultsim/engine.h"
#include "cultsim/frames.h"

using namespace cultsim;

namespace {

Circuit fixture(const std::string &name) {
    return parse_file(std::string(CULTSIM_FIXTURE_DIR) + "/" + name + ".circ");
}

size_t count_named(const Circuit &c, const std::string &name, const std::string &tag = "") {
    size_t n = 0;
    for (const auto &op : c.ops) {
        n += op.name == name && op.tag == tag;
    }
    return n;
}

// Silent detectors and no observable flips over a few bound shots at the given angle.
void expect_silent(const Circuit &c, const std::string &what, double theta = std::numbers::pi / 4,
                   bool check_observables = false) {
    EngineOptions opt;
    opt.theta = theta;
    Engine e(c, opt);
    for (uint64_t s = 0; s < 4; s++) {
        auto r = e.run(2, s);
        EXPECT_FALSE(r.any_event()) << what << " shot " << s;
        if (check_observables) {
            for (auto f : r.observable_flips) {
                EXPECT_EQ(f, 0) << what;
            }
        }
    }
}

ProtocolParams with(Variant v, QecMode m = QecMode::full, size_t n = 2) {
    ProtocolParams p;
    p.variant = v;
    p.qec_mode = m;
    p.n_cycles = n;
    return p;
}

}  // namespace

TEST(protocols, builders_match_published_listings) {
    EXPECT_EQ(emit(build_injection()), emit(fixture("injection")));
    EXPECT_EQ(emit(build_cultivation_round()), emit(fixture("cultivation")));
    EXPECT_EQ(emit(build_kt({})), emit(fixture("fig3_kickback")));
    EXPECT_EQ(emit(build_graft({})), emit(fixture("fig4_graft_n2")));
    EXPECT_EQ(emit(build_tomography({})), emit(fixture("fig2_cultivation")));
    EXPECT_EQ(emit(listing(Listing::graft_adapt)), emit(fixture("graft_adapt")));
    EXPECT_EQ(emit(listing(Listing::graft_idle)), emit(fixture("graft_idle")));
}

TEST(protocols, published_gate_and_measurement_counts) {
    auto kt = stats(build_kt({}));
    EXPECT_EQ(kt.two_qubit_gates, 216u);
    EXPECT_EQ(kt.measurements, 54u);
    for (bool first : {true, false}) {
        auto q = stats(build_qec_cycle(first));
        EXPECT_EQ(q.two_qubit_gates, 30u);
        EXPECT_EQ(q.measurements, 6u);
    }
}

TEST(protocols, params_are_validated) {
    ProtocolParams p;
    p.theta = -0.1;
    EXPECT_THROW(build_kt(p), std::invalid_argument);
    p.theta = 2 * std::numbers::pi;
    EXPECT_THROW(build_kt(p), std::invalid_argument);
    EXPECT_THROW(build_graft(with(Variant::with_cultivation, QecMode::full, 1)), std::invalid_argument);
    EXPECT_THROW(build_memory(with(Variant::with_cultivation, QecMode::full, 1)), std::invalid_argument);
    ProtocolParams b;
    b.graft_basis = 'Y';
    EXPECT_THROW(build_graft(b), std::invalid_argument);
    EXPECT_THROW(build_experiment("teleport", {}), std::invalid_argument);
    EXPECT_THROW(build_qec_memory(0), std::invalid_argument);
}

TEST(protocols, injection_prepares_the_requested_state) {
    const std::vector<size_t> data = {0, 1, 3, 5, 7, 8, 10};
    auto c = build_injection();
    PauliString x(c.num_qubits()), z(c.num_qubits());
    for (size_t q : data) {
        x.set(q, 'X');
        z.set(q, 'Z');
    }
    for (double theta : {0.0, std::numbers::pi / 4, std::numbers::pi / 2}) {
        EngineOptions opt;
        opt.backend = Backend::dense;
        opt.theta = theta;
        auto r = Engine(c, opt).run(1, 0, {x, z});
        EXPECT_FALSE(r.any_event());
        EXPECT_NEAR(r.expectations[0], std::sin(theta), 1e-10);
        EXPECT_NEAR(r.expectations[1], std::cos(theta), 1e-10);
    }
}

TEST(protocols, qec_cycles_compose) {
    for (size_t n : {1, 2, 4}) {
        auto c = build_qec_memory(n);
        EXPECT_EQ(stats(c).two_qubit_gates - stats(build_qec_memory(1)).two_qubit_gates, 30 * (n - 1));
        EXPECT_EQ(c.detectors().size(), 4 + 6 * n);
        expect_silent(c, "qec memory");
    }
    auto exprs = record_expressions(build_qec_memory(3), 0);
    for (const auto &d : build_qec_memory(3).detectors()) {
        EXPECT_TRUE(parity_expression(exprs, d.records).symbols.empty());
    }
}

TEST(protocols, kt_variants_are_silent_without_noise) {
    auto full = build_kt({});
    expect_silent(full, "kt", std::numbers::pi / 4, true);
    for (Variant v : {Variant::with_cultivation, Variant::injection_only}) {
        for (QecMode m : {QecMode::full, QecMode::interleaved, QecMode::none}) {
            auto c = build_kt(with(v, m));
            expect_silent(c, "kt variant", std::numbers::pi / 4, true);
            EXPECT_EQ(c.num_observables(), 1u);
        }
    }
}

TEST(protocols, interleaved_kt_drops_two_cycles) {
    auto full = stats(build_kt({}));
    auto inter = stats(build_kt(with(Variant::with_cultivation, QecMode::interleaved)));
    EXPECT_EQ(full.two_qubit_gates - inter.two_qubit_gates, 60u);
    // Two six-ancilla cycles go away; the final readout keeps data and helper only.
    EXPECT_EQ(full.measurements - inter.measurements, 12u);
    auto inj = stats(build_kt(with(Variant::injection_only)));
    EXPECT_EQ(full.two_qubit_gates - inj.two_qubit_gates, 24u);
    EXPECT_EQ(count_named(build_kt(with(Variant::injection_only)), "I", "T_gate"), 2u);
}

TEST(protocols, kt_fault_distance_in_the_clifford_picture) {
    auto full = single_fault_scan(build_kt({}), 0);
    EXPECT_EQ(full.undetected_logical, 0u) << (full.examples.empty() ? "" : full.examples[0]);
    auto inj = single_fault_scan(build_kt(with(Variant::injection_only)), 0);
    EXPECT_GT(inj.undetected_logical, 0u);
}

TEST(protocols, graft_cycles_extend_linearly) {
    auto g2 = build_graft({});
    auto g3 = build_graft(with(Variant::with_cultivation, QecMode::full, 3));
    auto g4 = build_graft(with(Variant::with_cultivation, QecMode::full, 4));
    EXPECT_EQ(g2.num_qubits(), 54u);
    auto s2 = stats(g2), s3 = stats(g3), s4 = stats(g4);
    EXPECT_EQ(s3.two_qubit_gates - s2.two_qubit_gates, s4.two_qubit_gates - s3.two_qubit_gates);
    EXPECT_EQ(s3.measurements - s2.measurements, 27u);
    EXPECT_EQ(s4.measurements - s3.measurements, 27u);
    // Three ancilla comparisons per extra cycle would depend on the injected state and are left out.
    EXPECT_EQ(g3.detectors().size() - g2.detectors().size(), 24u);
    EXPECT_EQ(g4.detectors().size() - g3.detectors().size(), 24u);
    expect_silent(g3, "graft N=3");
    expect_silent(g4, "graft N=4");
}

TEST(protocols, graft_variants_are_silent_without_noise) {
    for (size_t n : {2, 3}) {
        expect_silent(build_graft(with(Variant::injection_only, QecMode::full, n)), "graft injection-only");
        for (Variant v : {Variant::with_cultivation, Variant::injection_only}) {
            auto p = with(v, QecMode::full, n);
            p.graft_basis = 'Z';
            auto c = build_graft(p);
            EXPECT_EQ(c.num_observables(), 1u);
            expect_silent(c, "graft Z basis");
        }
    }
    // Derived detectors hold for any injected state, not only the reference one.
    for (char basis : {'X', 'Z'}) {
        auto p = with(Variant::injection_only, QecMode::full, 3);
        p.graft_basis = basis;
        expect_silent(build_graft(p), "graft at pi/2", std::numbers::pi / 2);
        expect_silent(build_graft(p), "graft at 2.5", 2.5);
    }
}

// In the injection-only graft the X readout is a logical X: it never flips for |+>.
TEST(protocols, graft_readout_observables_are_logical) {
    auto x = build_graft(with(Variant::injection_only));
    expect_silent(x, "graft X at |+>", std::numbers::pi / 2, false);
    EngineOptions opt;
    opt.theta = std::numbers::pi / 2;
    opt.reference_theta = std::numbers::pi / 2;
    Engine e(x, opt);
    for (uint64_t s = 0; s < 4; s++) {
        EXPECT_EQ(e.run(4, s).observable_flips, std::vector<uint8_t>{0});
    }
    opt.theta = 3 * std::numbers::pi / 2;
    Engine flipped(x, opt);
    EXPECT_EQ(flipped.run(4, 0).observable_flips, std::vector<uint8_t>{1});
}

TEST(protocols, memory_matches_graft) {
    EXPECT_EQ(build_memory(with(Variant::injection_only, QecMode::full, 2)), build_graft({}));
    auto m5 = build_memory(with(Variant::with_cultivation, QecMode::full, 5));
    EXPECT_EQ(stats(m5).measurements, stats(build_graft({})).measurements + 3 * 27);
}

TEST(protocols, echoes_can_be_removed) {
    ProtocolParams p;
    p.echoes = false;
    auto c = build_kt(p);
    EXPECT_EQ(count_named(c, "I", "echo"), 0u);
    EXPECT_GT(count_named(build_kt({}), "I", "echo"), 0u);
    EXPECT_EQ(stats(c).two_qubit_gates, 216u);
    expect_silent(c, "kt without echoes");
}

TEST(protocols, experiments_by_name) {
    ProtocolParams p;
    p.n_cycles = 3;
    EXPECT_EQ(build_experiment("kt-interleaved", p), build_kt(with(Variant::with_cultivation, QecMode::interleaved)));
    EXPECT_EQ(build_experiment("memory", p), build_memory(p));
    EXPECT_EQ(build_experiment("qec", p), build_qec_memory(3));
    EXPECT_EQ(build_experiment("injection", p), build_injection());
}
