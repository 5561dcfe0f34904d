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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "cultsim/engine.h"

using namespace cultsim;

namespace {

Circuit fixture(const std::string &name) {
    return parse_file(std::string(CULTSIM_FIXTURE_DIR) + "/" + name + ".circ");
}

const char *kFixtures[] = {"injection",     "cultivation", "fig2_cultivation", "fig3_kickback",
                           "fig4_graft_n2", "graft_adapt", "graft_idle"};

size_t count_named(const Circuit &c, const std::string &name) {
    size_t n = 0;
    for (const auto &op : c.ops) {
        n += op.name == name;
    }
    return n;
}

}  // namespace

TEST(noise, shipped_table_matches_defaults) {
    auto t = NoiseTable::load(std::string(CULTSIM_DATA_DIR) + "/si1000.tsv");
    EXPECT_EQ(t, NoiseTable{});
    EXPECT_THROW(NoiseTable::parse("bogus DEPOLARIZE1 1\n"), std::invalid_argument);
    EXPECT_THROW(NoiseTable::parse("idle DEPOLARIZE1\n"), std::invalid_argument);
    EXPECT_EQ(NoiseTable::parse("idle DEPOLARIZE1 0.5 # tweak\n").idle, 0.5);
}

TEST(noise, zero_strength_leaves_circuit_unchanged) {
    for (const char *name : kFixtures) {
        auto c = fixture(name);
        EXPECT_EQ(apply_si1000(c, 0), c) << name;
    }
    EXPECT_THROW(apply_si1000(fixture("injection"), 0.2), std::invalid_argument);
    EXPECT_THROW(apply_si1000(fixture("injection"), -1e-3), std::invalid_argument);
}

TEST(noise, si1000_channels_follow_the_table) {
    auto c = parse("R 0 1 2\nTICK\nH 0\nTICK\nCZ 0 1\nTICK\nI[echo] 2\nTICK\nM 0\nRX 1\nTICK\nMX 2\n");
    double p = 1e-3;
    auto n = apply_si1000(c, p);
    std::string want =
        "R 0 1 2\nX_ERROR(0.002) 0 1 2\nTICK\n"
        "H 0\nDEPOLARIZE1(1e-04) 0\nDEPOLARIZE1(1e-04) 1 2\nTICK\n"
        "CZ 0 1\nDEPOLARIZE2(0.001) 0 1\nDEPOLARIZE1(1e-04) 2\nTICK\n"
        "I[echo] 2\nTICK\n"
        "M(0.005) 0\nRX 1\nZ_ERROR(0.002) 1\nDEPOLARIZE1(0.002) 2\nTICK\n"
        "MX(0.005) 2\nDEPOLARIZE1(0.002) 0 1\n";
    EXPECT_EQ(emit(n), want);
    EXPECT_EQ(n.num_measurements(), c.num_measurements());
}

TEST(noise, inserted_channels_scale_with_gate_count) {
    auto c = fixture("fig3_kickback");
    auto n = apply_si1000(c, 2.3e-3);
    EXPECT_EQ(count_named(n, "DEPOLARIZE2"), count_named(c, "CZ"));
    size_t doubled = apply_si1000(parse(emit(c) + "TICK\n" + emit(c)), 2.3e-3).ops.size();
    EXPECT_EQ(doubled - n.ops.size(), n.ops.size() + 1);
    // Noisy circuits keep their detectors and records.
    EXPECT_EQ(n.detectors().size(), c.detectors().size());
    EXPECT_EQ(n.num_measurements(), c.num_measurements());
}

TEST(noise, noisy_fixture_fires_detectors) {
    auto n = apply_si1000(fixture("fig2_cultivation"), 0.02);
    Engine e(n);
    size_t fired = 0;
    for (uint64_t s = 0; s < 40; s++) {
        fired += e.run(17, s).any_event();
    }
    EXPECT_GT(fired, 10u);
}

TEST(noise, detuning_sampling) {
    std::mt19937_64 rng(1);
    auto zero = sample_detunings(rng, 5, 0.0);
    EXPECT_EQ(zero.offsets_hz, std::vector<double>(5, 0.0));
    auto prof = sample_detunings(rng, 10000);
    EXPECT_EQ(prof.range_hz, 200e3);
    double mean = std::accumulate(prof.offsets_hz.begin(), prof.offsets_hz.end(), 0.0) / 10000;
    double sigma = 200e3 / std::sqrt(3.0) / std::sqrt(10000.0);
    EXPECT_LT(std::abs(mean), 5 * sigma);
    for (double f : prof.offsets_hz) {
        EXPECT_LE(std::abs(f), 200e3);
    }
    EXPECT_THROW(sample_detunings(rng, 2, -1.0), std::invalid_argument);
}

TEST(noise, detuning_phase_per_layer) {
    DetuningProfile prof;
    prof.offsets_hz = {200e3};
    EXPECT_NEAR(prof.layer_phase(0), 0.04398229715, 1e-10);

    auto one = apply_detuning(parse("H 0\nTICK\n"), prof);
    EXPECT_NEAR(net_detuning_phase(one)[0], 0.04398229715, 1e-10);

    auto echoed = apply_detuning(parse("H 0\nTICK\nI[echo] 0\nTICK\nH 0\n"), prof);
    EXPECT_NEAR(net_detuning_phase(echoed)[0], 0.0, 1e-15);

    // No phase while measuring or resetting.
    auto window = apply_detuning(parse("H 0\nTICK\nM 0\nTICK\nR 0\nTICK\n"), prof);
    EXPECT_NEAR(net_detuning_phase(window)[0], prof.layer_phase(0), 1e-15);

    EXPECT_THROW(apply_detuning(parse("H 0\nM 0\n"), prof), std::invalid_argument);
    DetuningProfile zero;
    zero.offsets_hz.assign(14, 0.0);
    auto c = fixture("fig3_kickback");
    EXPECT_EQ(apply_detuning(c, zero), c);
}

TEST(noise, detuned_reference_stays_clean) {
    DetuningProfile zero;
    zero.offsets_hz.assign(12, 1.0);
    Engine e(apply_detuning(fixture("fig2_cultivation"), zero));
    EXPECT_FALSE(e.run(1, 0).any_event());
}

TEST(noise, echoes_are_idempotent_on_published_circuits) {
    for (const char *name : {"fig2_cultivation", "fig3_kickback", "fig4_graft_n2"}) {
        auto c = fixture(name);
        EXPECT_TRUE(insert_echoes(c) == c) << name;
    }
    for (const char *name : kFixtures) {
        auto once = insert_echoes(fixture(name));
        EXPECT_TRUE(insert_echoes(once) == once) << name;
    }
    auto plain = parse("R 0\nTICK\nM 0\n");
    EXPECT_EQ(insert_echoes(plain), plain);
}

TEST(noise, echo_insertion_between_hadamards) {
    auto c = parse("H 0 1\nTICK\nCZ 1 2\nTICK\nTICK\nCZ 1 2\nTICK\nH 0 1\n");
    auto e = insert_echoes(c);
    EXPECT_EQ(emit(e), "H 0 1\nTICK\nCZ 1 2\nTICK\nI[echo] 0 1\nTICK\nCZ 1 2\nTICK\nH 0 1\n");
    EXPECT_EQ(insert_echoes(e), e);
    // Same final state without noise.
    std::vector<PauliString> probes = {PauliString::from_str("XIZ"), PauliString::from_str("ZXI")};
    auto a = Engine(c).run(1, 0, probes), b = Engine(e).run(1, 0, probes);
    EXPECT_EQ(a.expectations, b.expectations);
}

TEST(noise, echoes_cut_accumulated_phase) {
    auto base = strip_echoes(fixture("fig2_cultivation"));
    EXPECT_EQ(count_named(base, "I"), count_named(fixture("fig2_cultivation"), "I") - 15);
    auto echoed = insert_echoes(base);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; trial++) {
        auto prof = sample_detunings(rng, 12);
        auto mean_abs = [&](const Circuit &c) {
            auto net = net_detuning_phase(apply_detuning(c, prof));
            double s = 0;
            for (double v : net) s += std::abs(v);
            return s / (double)net.size();
        };
        EXPECT_LT(mean_abs(echoed), mean_abs(base));
        EXPECT_LT(mean_abs(fixture("fig2_cultivation")), mean_abs(base));
    }
}
