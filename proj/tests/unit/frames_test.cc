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

#include <gtest/gtest.h>

#include <random>

#include "cultsim/engine.h"
#include "cultsim/reorder.h"

using namespace cultsim;

namespace {

Circuit fixture(const std::string &name) {
    return parse_file(std::string(CULTSIM_FIXTURE_DIR) + "/" + name + ".circ");
}

Circuit random_clifford(std::mt19937_64 &rng, size_t n, size_t depth) {
    const char *ops[] = {"H", "S", "SQRT_Y", "CX", "CZ", "M", "MX", "R", "RX", "X"};
    std::string text = "H 0\n";
    for (size_t d = 0; d < depth; d++) {
        std::string op = ops[rng() % 10];
        size_t a = rng() % n, b = (a + 1 + rng() % (n - 1)) % n;
        bool two = op == "CX" || op == "CZ";
        text += op + " " + std::to_string(a) + (two ? " " + std::to_string(b) : "") + "\n";
    }
    text += "M";
    for (size_t q = 0; q < n; q++) {
        text += " " + std::to_string(q);
    }
    return parse(text + "\n");
}

}  // namespace

TEST(frames, bell_pair_records) {
    auto e = record_expressions(parse("H 0\nCX 0 1\nM 0 1\nX 1\nM 1\n"));
    ASSERT_EQ(e.size(), 3u);
    EXPECT_TRUE(e[0].random());
    EXPECT_EQ(e[1].symbols, std::vector<size_t>{0});
    EXPECT_FALSE(e[1].flip);
    EXPECT_EQ(e[2].symbols, std::vector<size_t>{0});
    EXPECT_TRUE(e[2].flip);
    EXPECT_EQ(make_deterministic(e, {1}), (std::vector<size_t>{0, 1}));
    EXPECT_TRUE(parity_expression(e, {0, 2}).flip);
    EXPECT_THROW(parity_expression(e, {3}), std::invalid_argument);
}

TEST(frames, unrecorded_reset_outcomes_stay_random) {
    auto e = record_expressions(parse("H 0\nCX 0 1\nR 0\nM 1\n"));
    ASSERT_EQ(e.size(), 1u);
    ASSERT_EQ(e[0].symbols.size(), 1u);
    EXPECT_GE(e[0].symbols[0], 1u);
    // A reset of an already fixed qubit leaves nothing hidden.
    auto f = record_expressions(parse("X 0\nR 0\nM 0\nRX 1\nMX 1\n"));
    EXPECT_TRUE(f[0].symbols.empty());
    EXPECT_FALSE(f[0].flip);
    EXPECT_TRUE(f[1].symbols.empty());
}

TEST(frames, pauli_product_measurement) {
    auto e = record_expressions(parse("H 0\nCX 0 1\nMPP X0*X1 Z0*Z1 Y0*Y1\n"));
    for (const auto &r : e) {
        EXPECT_TRUE(r.symbols.empty());
    }
    EXPECT_FALSE(e[0].flip);
    EXPECT_FALSE(e[1].flip);
    EXPECT_TRUE(e[2].flip);
}

TEST(frames, injection_stand_ins) {
    auto c = parse("H_YZ[conjugate] 0\nS[injection] 0\nH_YZ[conjugate] 0\nM 0\nMX 0\n");
    // k=0 prepares |0>, k=1 prepares |+>, k=2 prepares |1>.
    auto k0 = record_expressions(c, 0), k1 = record_expressions(c, 1), k2 = record_expressions(c, 2);
    EXPECT_TRUE(k0[0].symbols.empty());
    EXPECT_FALSE(k0[0].flip);
    EXPECT_TRUE(k1[0].random());
    EXPECT_TRUE(k2[0].symbols.empty());
    EXPECT_TRUE(k2[0].flip);
    EXPECT_EQ(clifford_stand_in(c.ops[1], 3), "S_DAG");
    EXPECT_EQ(clifford_stand_in(parse("I[T_gate] 0\n").ops[0], 0), "SQRT_Y");
    EXPECT_EQ(clifford_stand_in(parse("H[injection] 0\n").ops[0], 1), "SQRT_Y");
    EXPECT_EQ(clifford_stand_in(parse("I[echo] 0\n").ops[0], 1), "I");
    EXPECT_EQ(clifford_stand_in(parse("I[T_gate] 0\n").ops[0], 0, TStandIn::identity), "I");
    EXPECT_EQ(clifford_stand_in(parse("I[negative_T_gate] 0\n").ops[0], 2, TStandIn::identity), "I");
}

// Deterministic records must equal the predicted parity in every sampled shot.
TEST(frames, expressions_match_sampled_records) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; trial++) {
        size_t n = 2 + rng() % 4;
        auto c = random_clifford(rng, n, 30);
        auto exprs = record_expressions(c);
        EngineOptions opt;
        opt.tags = TagMode::literal;
        Engine e(c, opt);
        for (uint64_t s = 0; s < 8; s++) {
            auto rec = e.run(trial, s).record;
            for (size_t r = 0; r < exprs.size(); r++) {
                uint8_t v = exprs[r].flip;
                bool hidden = false;
                for (size_t sym : exprs[r].symbols) {
                    if (sym >= rec.size()) {
                        hidden = true;
                        break;
                    }
                    v ^= rec[sym];
                }
                if (!hidden) {
                    ASSERT_EQ(rec[r], v) << emit(c) << " record " << r;
                }
            }
        }
    }
}

TEST(frames, published_detectors_are_deterministic) {
    for (const char *name : {"fig2_cultivation", "fig3_kickback", "fig4_graft_n2", "graft_adapt", "graft_idle"}) {
        auto c = fixture(name);
        auto exprs = record_expressions(c, 0);
        for (const auto &d : c.detectors()) {
            auto p = parity_expression(exprs, d.records);
            EXPECT_TRUE(p.symbols.empty() && !p.flip) << name;
        }
    }
    auto kt = fixture("fig3_kickback");
    auto exprs = record_expressions(kt, 0);
    EXPECT_TRUE(parity_expression(exprs, kt.observables()[0].records).symbols.empty());
}

TEST(frames, single_fault_scan_on_small_codes) {
    auto bare = single_fault_scan(parse("R 0\nTICK\nM 0\nOI(0) rec[-1]\n"));
    EXPECT_GT(bare.undetected_logical, 0u);
    EXPECT_FALSE(bare.examples.empty());
    // A distance-3 repetition code cannot be fooled by one fault.
    auto rep = single_fault_scan(repetition_code(3, 2));
    EXPECT_EQ(rep.undetected_logical, 0u);
    EXPECT_GT(rep.sites, 100u);
}
