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

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace cultsim;

namespace {

const char *kFixtures[] = {"injection", "cultivation", "fig2_cultivation", "fig3_kickback",
                           "fig4_graft_n2", "graft_adapt", "graft_idle"};

std::string read_fixture(const std::string &name) {
    std::ifstream in(std::string(CULTSIM_FIXTURE_DIR) + "/" + name + ".circ");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(circuit, trivial_example) {
    auto c = parse("Q(0,0)0\nH 0\nM 0\nDT(0,0,0) rec[-1]");
    EXPECT_EQ(c.qubit_coords().size(), 1u);
    EXPECT_EQ(c.num_measurements(), 1u);
    EXPECT_EQ(c.detectors().size(), 1u);
    size_t gates = 0;
    for (const auto &op : c.ops) {
        OpKind k = op.kind();
        gates += k == OpKind::gate1 || k == OpKind::measure;
    }
    EXPECT_EQ(gates, 2u);
    EXPECT_EQ(c.detectors()[0].records, std::vector<size_t>{0});
    EXPECT_EQ(c.detectors()[0].coords, (std::vector<double>{0, 0, 0}));
}

TEST(circuit, mnemonics_with_underscores_and_tags) {
    auto c = parse("H_YZ[conjugate]_5\nI[T_dagger_gate]_3_0\nS_DAG 2\nMPP_X11*Z18*Y6\nM[root_measurement]_6_9");
    EXPECT_EQ(c.ops[0].name, "H_YZ");
    EXPECT_EQ(c.ops[0].tag, "conjugate");
    EXPECT_EQ(c.ops[0].targets, std::vector<Target>{Target::qubit(5)});
    EXPECT_EQ(c.ops[1].tag, "T_dagger_gate");
    EXPECT_EQ(c.ops[1].targets.size(), 2u);
    EXPECT_EQ(c.ops[2].name, "S_DAG");
    EXPECT_EQ(c.ops[3].name, "MPP");
    EXPECT_EQ(c.ops[3].targets[0].product,
              (std::vector<std::pair<char, uint32_t>>{{'X', 11}, {'Z', 18}, {'Y', 6}}));
    EXPECT_EQ(c.ops[4].tag, "root_measurement");
    EXPECT_EQ(c.num_measurements(), 3u);
}

TEST(circuit, parse_errors) {
    EXPECT_THROW(parse("FOO 1"), std::invalid_argument);
    EXPECT_THROW(parse("M 0\nDT(0,0) rec[-2]"), std::invalid_argument);
    EXPECT_THROW(parse("Q(1)0"), std::invalid_argument);
    EXPECT_THROW(parse("Q(1,x)0"), std::invalid_argument);
    EXPECT_THROW(parse("CZ 0 1 2"), std::invalid_argument);
    EXPECT_THROW(parse("CZ 3 3"), std::invalid_argument);
    EXPECT_THROW(parse("MPP X1*Z1"), std::invalid_argument);
    EXPECT_THROW(parse("H rec[-1]"), std::invalid_argument);
    EXPECT_THROW(parse("DEPOLARIZE1(1.5) 0"), std::invalid_argument);
    try {
        parse("H 0\nM 0\nBAD 0");
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(circuit, separators_are_interchangeable) {
    auto a = parse("CZ_0_1_2_3;TICK;M_0_1;DT(1,2,0)rec[-2]_rec[-1]");
    auto b = parse("CZ 0 1 2 3\nTICK\nM 0 1\nDT(1,2,0) rec[-2] rec[-1]  # comment\n");
    EXPECT_EQ(a, b);
    EXPECT_EQ(emit(a), "CZ 0 1 2 3\nTICK\nM 0 1\nDT(1,2,0) rec[-2] rec[-1]\n");
}

TEST(circuit, empty_circuit) {
    Circuit c = parse("");
    EXPECT_EQ(emit(c), "");
    EXPECT_EQ(stats(c), CircuitStats{});
    EXPECT_TRUE(evaluate_records(c, {}).detectors.empty());
}

TEST(circuit, detector_offsets_emitted_verbatim) {
    auto c = parse("M 0 1 2\nDT(0.5,-1,3) rec[-3] rec[-1]\nOI(2) rec[-2]");
    EXPECT_EQ(emit(c), "M 0 1 2\nDT(0.5,-1,3) rec[-3] rec[-1]\nOI(2) rec[-2]\n");
    EXPECT_EQ(c.num_observables(), 3u);
}

TEST(circuit, fixtures_round_trip) {
    for (const char *name : kFixtures) {
        std::string text = read_fixture(name);
        ASSERT_FALSE(text.empty()) << name;
        Circuit c = parse(text);
        EXPECT_EQ(parse(emit(c)), c) << name;
        EXPECT_EQ(emit(parse(emit(c))), emit(c)) << name;
        EXPECT_EQ(emit(c, EmitStyle::listing), text) << name;
    }
}

TEST(circuit, published_stats) {
    auto kt = stats(parse(read_fixture("fig3_kickback")));
    EXPECT_EQ(kt.two_qubit_gates, 216u);
    EXPECT_EQ(kt.measurements, 54u);
    EXPECT_EQ(kt.qubits, 14u);

    auto cult = parse(read_fixture("cultivation"));
    EXPECT_EQ(stats(cult).measurements, 6u);
    EXPECT_EQ(stats(cult).nonclifford_tags, 14u);

    auto fig2 = parse(read_fixture("fig2_cultivation"));
    EXPECT_EQ(stats(fig2).qubits, 12u);
    EXPECT_EQ(stats(parse(read_fixture("fig4_graft_n2"))).qubits, 54u);
}

TEST(circuit, evaluate_records_linearity) {
    auto c = parse(read_fixture("fig3_kickback"));
    auto dets = c.detectors();
    std::mt19937_64 rng(4);
    std::vector<uint8_t> rec(c.num_measurements());
    for (auto &b : rec) {
        b = rng() & 1;
    }
    auto base = evaluate_records(c, rec);
    for (size_t k = 0; k < rec.size(); k++) {
        auto flipped = rec;
        flipped[k] ^= 1;
        auto ev = evaluate_records(c, flipped);
        for (size_t d = 0; d < dets.size(); d++) {
            size_t refs = std::count(dets[d].records.begin(), dets[d].records.end(), k);
            ASSERT_EQ(ev.detectors[d] ^ base.detectors[d], refs & 1);
        }
    }
    for (const auto &o : c.observables()) {
        uint8_t parity = 0;
        for (size_t k : o.records) {
            parity ^= rec[k];
        }
        EXPECT_EQ(base.observables[o.index], parity);
    }
    EXPECT_THROW(evaluate_records(c, {}), std::invalid_argument);
}

TEST(circuit, append_checks_records) {
    Circuit c;
    c.append("M", {0});
    Instruction dt{"DT", "", {0, 0}, {Target::rec(2)}};
    EXPECT_THROW(c.append(dt), std::invalid_argument);
    dt.targets = {Target::rec(1)};
    c.append(dt);
    EXPECT_EQ(c.detectors().size(), 1u);
}
