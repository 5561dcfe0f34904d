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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace cultsim;

namespace {

Circuit fixture(const std::string &name) {
    return parse_file(std::string(CULTSIM_FIXTURE_DIR) + "/" + name + ".circ");
}

PauliString transversal(size_t n, const std::vector<size_t> &qs, char p) {
    PauliString out(n);
    for (size_t q : qs) {
        out.set(q, p);
    }
    return out;
}

const std::vector<size_t> kPatchData = {0, 1, 3, 5, 7, 8, 10};

Circuit random_circuit(std::mt19937_64 &rng, size_t n, size_t depth) {
    const char *ops[] = {"H", "S", "CX", "CZ", "I[T_gate]", "I[T_dagger_gate]", "M", "MX(0.1)", "R", "RX",
                         "DEPOLARIZE1(0.2)", "X_ERROR(0.3)", "DEPOLARIZE2(0.2)", "SQRT_Y"};
    std::string text;
    for (size_t d = 0; d < depth; d++) {
        std::string op = ops[rng() % 14];
        size_t a = rng() % n, b = (a + 1 + rng() % (n - 1)) % n;
        bool two = op == "CX" || op == "CZ" || op.starts_with("DEPOLARIZE2");
        text += op + " " + std::to_string(a) + (two ? " " + std::to_string(b) : "") + "\n";
    }
    text += "H";
    for (size_t q = 0; q < n; q++) {
        text += " " + std::to_string(q);
    }
    return parse(text + "\n");
}

}  // namespace

TEST(engine, injection_traces_unit_circle) {
    auto c = fixture("injection");
    size_t n = c.num_qubits();
    auto x = transversal(n, kPatchData, 'X'), z = transversal(n, kPatchData, 'Z');
    for (int k = 0; k < 16; k++) {
        EngineOptions opt;
        opt.theta = 2 * std::numbers::pi * k / 16;
        Engine e(c, opt);
        auto r = e.run(3, k, {x, z});
        EXPECT_FALSE(r.any_event());
        EXPECT_NEAR(r.expectations[0], std::sin(opt.theta), 1e-10);
        EXPECT_NEAR(r.expectations[1], std::cos(opt.theta), 1e-10);
    }
}

TEST(engine, fixtures_are_silent_without_noise) {
    for (const char *name : {"injection", "cultivation", "fig2_cultivation", "fig3_kickback", "fig4_graft_n2",
                             "graft_adapt", "graft_idle"}) {
        Engine e(fixture(name));
        for (uint64_t s = 0; s < 5; s++) {
            EXPECT_FALSE(e.run(11, s).any_event()) << name;
        }
    }
}

TEST(engine, kickback_keeps_everything_at_the_magic_angle) {
    Engine e(fixture("fig3_kickback"));
    for (uint64_t s = 0; s < 20; s++) {
        auto r = e.run(2, s);
        EXPECT_FALSE(r.any_event());
        EXPECT_EQ(r.observable_flips, std::vector<uint8_t>{0});
    }
}

TEST(engine, orthogonal_input_is_never_kept) {
    EngineOptions opt;
    opt.theta = 5 * std::numbers::pi / 4;
    Engine e(fixture("fig2_cultivation"), opt);
    for (uint64_t s = 0; s < 20; s++) {
        EXPECT_TRUE(e.run(2, s).any_event());
    }
}

TEST(engine, early_abort_stops_at_first_event) {
    EngineOptions opt;
    opt.theta = 5 * std::numbers::pi / 4;
    opt.early_abort = true;
    Engine e(fixture("fig2_cultivation"), opt);
    auto r = e.run(2, 0);
    EXPECT_TRUE(r.aborted);
    ASSERT_FALSE(r.detector_events.empty());
    EXPECT_EQ(r.detector_events.back(), 1);
    EXPECT_LT(r.record.size(), e.circuit().num_measurements());
}

TEST(engine, clifford_mode_keeps_one_coefficient) {
    EngineOptions opt;
    opt.tags = TagMode::clifford;
    opt.theta = opt.reference_theta = 0;
    Engine e(fixture("fig3_kickback"), opt);
    for (uint64_t s = 0; s < 5; s++) {
        auto r = e.run(1, s);
        EXPECT_EQ(r.peak_m, 1u);
        EXPECT_FALSE(r.any_event());
    }
    opt.theta = 0.3;
    EXPECT_THROW(Engine(fixture("fig3_kickback"), opt), std::invalid_argument);
}

TEST(engine, dense_and_ranked_backends_agree) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; trial++) {
        size_t n = 2 + rng() % 4;
        Circuit c = random_circuit(rng, n, 30);
        EngineOptions ro, dop;
        ro.eps = 0;
        ro.m_max = 1 << 20;
        dop.backend = Backend::dense;
        Engine ranked(c, ro), dense(c, dop);
        std::vector<PauliString> probes;
        for (int k = 0; k < 6; k++) {
            PauliString p(n);
            for (size_t q = 0; q < n; q++) {
                p.set(q, "IXYZ"[rng() & 3]);
            }
            probes.push_back(p);
        }
        auto a = ranked.run(8, trial, probes), b = dense.run(8, trial, probes);
        ASSERT_EQ(a.record, b.record) << emit(c);
        for (size_t k = 0; k < probes.size(); k++) {
            ASSERT_NEAR(a.expectations[k], b.expectations[k], 1e-9) << emit(c);
        }
    }
}

TEST(engine, dense_capacity_is_enforced) {
    EngineOptions opt;
    opt.backend = Backend::dense;
    opt.dense_cap = 8;
    EXPECT_THROW(Engine(fixture("fig3_kickback"), opt), CapacityError);
    opt.dense_cap = 14;
    Engine e(fixture("fig3_kickback"), opt);
    auto r = e.run(1, 0);
    EXPECT_FALSE(r.any_event());
    EXPECT_LE(r.peak_live, 14u);
}

TEST(engine, runs_are_reproducible) {
    auto c = fixture("fig2_cultivation");
    Circuit noisy;
    for (const auto &op : c.ops) {
        noisy.append(op);
        if (op.name == "CZ") {
            Instruction dep{"DEPOLARIZE2", "", {0.01}, op.targets};
            noisy.append(dep);
        }
    }
    Engine e(noisy);
    for (uint64_t s = 0; s < 10; s++) {
        auto a = e.run(99, s), b = e.run(99, s);
        EXPECT_EQ(a.record, b.record);
        EXPECT_EQ(a.detector_events, b.detector_events);
    }
}
