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

#include "cultsim/runner.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace cultsim;

namespace {

RunConfig kt(double p, size_t shots) {
    RunConfig c;
    c.engine = EngineChoice::ranked;
    c.p = p;
    c.shots = shots;
    c.seed = 17;
    return c;
}

}  // namespace

TEST(runner, rejects_bad_configs) {
    auto c = kt(0, 10);
    c.experiment = "teleport";
    EXPECT_THROW(c.validate(), ConfigError);
    c = kt(0.2, 10);
    EXPECT_THROW(c.validate(), ConfigError);
    c = kt(0, 0);
    EXPECT_THROW(c.validate(), ConfigError);
    c = kt(0, 10);
    c.experiment = "graft";
    c.params.n_cycles = 1;
    EXPECT_THROW(c.validate(), ConfigError);
    EXPECT_THROW(RunConfig::from_json("{\"variant\": \"none\"}"), ConfigError);
    EXPECT_THROW(RunConfig::from_json("not json"), ConfigError);
}

TEST(runner, config_json_round_trip) {
    auto c = kt(1e-3, 123);
    c.params.theta = 1.25;
    c.params.variant = Variant::injection_only;
    c.params.qec_mode = QecMode::interleaved;
    c.detuning_khz = 50;
    c.early_abort = false;
    c.policy.all_detectors = false;
    c.policy.detectors = {1, 4};
    auto back = RunConfig::from_json(c.to_json());
    EXPECT_EQ(back.to_json(), c.to_json());
}

TEST(runner, runs_are_reproducible_across_threads) {
    auto c = kt(2e-3, 60);
    c.keep_shots = true;
    auto a = run(c);
    c.threads = 3;
    auto b = run(c);
    ASSERT_EQ(a.shots.size(), b.shots.size());
    for (size_t i = 0; i < a.shots.size(); i++) {
        EXPECT_EQ(format_shot(a.shots[i]), format_shot(b.shots[i])) << i;
    }
    EXPECT_EQ(a.kept, b.kept);
    c.seed++;
    EXPECT_NE(run(c).to_json(), a.to_json());
}

TEST(runner, forced_dense_respects_capacity) {
    auto c = kt(0, 1);
    c.engine = EngineChoice::dense;
    c.dense_threshold = 4;
    EXPECT_THROW(run(c), CapacityError);
}

TEST(runner, noiseless_tomography_matches_injected_state) {
    for (double theta : {0.3, std::numbers::pi / 4, 2.0}) {
        RunConfig c = kt(0, 3);
        c.experiment = "tomography";
        c.params.variant = Variant::injection_only;
        c.params.theta = theta;
        auto r = run(c);
        ASSERT_TRUE(r.bloch);
        EXPECT_NEAR((*r.bloch)[0], std::sin(theta), 1e-10);
        EXPECT_NEAR((*r.bloch)[1], 0, 1e-10);
        EXPECT_NEAR((*r.bloch)[2], std::cos(theta), 1e-10);
        EXPECT_FALSE(r.logical_error);
    }
}

TEST(runner, transversal_tomography_without_noise) {
    RunConfig c = kt(0, 4);
    c.params.variant = Variant::injection_only;
    c.params.theta = 0.9;
    auto t = transversal_tomography(c);
    EXPECT_NEAR(t.bloch[0], std::sin(0.9), 1e-9);
    EXPECT_NEAR(t.bloch[2], std::cos(0.9), 1e-9);
    EXPECT_NEAR(t.norm2(), 1, 1e-9);
}

TEST(runner, sweep_rows) {
    auto rs = sweep(kt(0, 5), SweepAxis::p, {0, 1e-3});
    ASSERT_EQ(rs.size(), 2u);
    EXPECT_DOUBLE_EQ(rs[1].config.p, 1e-3);
    auto header = sweep_csv_header();
    auto row = sweep_csv_row(rs[0]);
    auto commas = [](const std::string &s) { return std::count(s.begin(), s.end(), ','); };
    EXPECT_EQ(commas(header), commas(row));
    EXPECT_THROW(sweep(kt(0, 5), SweepAxis::theta, {}), ConfigError);
}

TEST(runner, strip_final_readout_leaves_data_live) {
    auto c = strip_final_readout(build_tomography({}));
    EXPECT_LT(c.num_measurements(), build_tomography({}).num_measurements());
    EXPECT_EQ(tomography_data_qubits(Variant::with_cultivation).size(), 7u);
    EXPECT_EQ(tomography_plaquettes(Variant::injection_only).size(), 3u);
}
