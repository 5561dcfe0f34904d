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

#include "cultsim/densesim.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cultsim/rng.h"

using namespace cultsim;

namespace {

PauliString on(size_t n, size_t q, char p) {
    return PauliString::single(n, q, p);
}

}  // namespace

TEST(densesim, x_flips_zero) {
    auto st = DenseState::zero({0});
    apply_unitary(st, clifford_matrix("X"), {0});
    EXPECT_NEAR(std::abs(st.amps[1]), 1, 1e-15);
    EXPECT_THROW(apply_unitary(st, clifford_matrix("X"), {4}), std::invalid_argument);
    Matrix bad = Matrix::Identity(2, 2) * 2.0;
    EXPECT_THROW(apply_unitary(st, bad, {0}), std::invalid_argument);
}

TEST(densesim, t_gate_period) {
    auto st = DenseState::zero({0, 1});
    apply_unitary(st, clifford_matrix("H"), {1});
    auto start = st;
    for (int k = 0; k < 8; k++) {
        apply_unitary(st, t_gate(), {1});
    }
    EXPECT_NEAR(fidelity(st, start), 1, 1e-12);
}

TEST(densesim, cz_squared_is_identity) {
    auto st = DenseState::zero({3, 5});
    apply_unitary(st, clifford_matrix("H"), {3});
    apply_unitary(st, clifford_matrix("H"), {5});
    auto start = st;
    apply_unitary(st, clifford_matrix("CZ"), {3, 5});
    EXPECT_LT(fidelity(st, start), 1 - 1e-3);
    apply_unitary(st, clifford_matrix("CZ"), {5, 3});
    EXPECT_NEAR(fidelity(st, start), 1, 1e-12);
}

TEST(densesim, expectations) {
    auto st = DenseState::zero({0});
    EXPECT_NEAR(expectation(st, on(1, 0, 'Z')), 1, 1e-15);
    apply_unitary(st, t_gate(), {0});
    EXPECT_NEAR(expectation(st, on(1, 0, 'X')), std::cos(std::numbers::pi / 4), 1e-12);
    EXPECT_NEAR(expectation(st, on(1, 0, 'Z')), std::cos(std::numbers::pi / 4), 1e-12);
    EXPECT_NEAR(expectation(st, on(1, 0, 'Y')), 0, 1e-12);
}

TEST(densesim, kraus_single_unitary_is_branch_zero) {
    auto st = DenseState::zero({0});
    for (double u : {0.0, 0.3, 0.999}) {
        EXPECT_EQ(apply_kraus(st, {clifford_matrix("H")}, {0}, u), 0u);
    }
    std::vector<Matrix> incomplete = {Matrix::Identity(2, 2) * 0.5};
    EXPECT_THROW(apply_kraus(st, incomplete, {0}, 0.5), std::invalid_argument);
}

TEST(densesim, measurement_channel_on_plus_is_balanced) {
    Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    int ones = 0;
    const int shots = 10000;
    for (int s = 0; s < shots; s++) {
        KeyedRng rng(7, s);
        auto st = DenseState::zero({0});
        apply_unitary(st, clifford_matrix("H"), {0});
        ones += (int)apply_kraus(st, {p0, p1}, {0}, rng.uniform());
    }
    double sigma = std::sqrt(shots * 0.25);
    EXPECT_LT(std::abs(ones - shots / 2.0), 5 * sigma);
}

TEST(densesim, destructive_measure_basics) {
    auto st = DenseState::zero({0, 1});
    apply_unitary(st, clifford_matrix("X"), {1});
    EXPECT_EQ(destructive_measure(st, 1, 'Z', 0.5), 1);
    EXPECT_EQ(st.labels, std::vector<size_t>{0});
    EXPECT_EQ(st.amps.size(), 2u);
    EXPECT_NEAR(std::abs(st.amps[0]), 1, 1e-15);
    EXPECT_THROW(destructive_measure(st, 9, 'Z', 0.5), std::invalid_argument);

    for (double u : {0.1, 0.9}) {
        auto bell = DenseState::zero({4, 2});
        apply_unitary(bell, clifford_matrix("H"), {4});
        apply_unitary(bell, clifford_matrix("CX"), {4, 2});
        int b = destructive_measure(bell, 4, 'Z', u);
        EXPECT_NEAR(std::abs(bell.amps[b]), 1, 1e-12);
    }
}

TEST(densesim, creative_reset_basics) {
    auto st = DenseState::zero({0});
    creative_reset(st, 1, 'Z');
    EXPECT_EQ(st.amps.size(), 4u);
    EXPECT_NEAR(std::abs(st.amps[0]), 1, 1e-15);
    EXPECT_THROW(creative_reset(st, 1, 'Z'), std::invalid_argument);
    creative_reset(st, 7, 'X');
    EXPECT_NEAR(st.norm2(), 1, 1e-12);
    EXPECT_NEAR(expectation(st, on(8, 7, 'X')), 1, 1e-12);
}

TEST(densesim, destructive_then_creative_equals_measure_and_reset) {
    for (double u : {0.2, 0.8}) {
        auto a = DenseState::zero({0, 1, 2});
        apply_unitary(a, clifford_matrix("H"), {0});
        apply_unitary(a, t_gate(), {1});
        apply_unitary(a, clifford_matrix("CX"), {0, 1});
        apply_unitary(a, clifford_matrix("CX"), {1, 2});
        auto b = a;
        int ra = destructive_measure(a, 1, 'Z', u);
        creative_reset(a, 1, 'Z');
        int rb = measure_pauli(b, on(3, 1, 'Z'), u);
        if (rb) {
            apply_unitary(b, clifford_matrix("X"), {1});
        }
        EXPECT_EQ(ra, rb);
        EXPECT_NEAR(fidelity(a, b), 1, 1e-12);
    }
}

TEST(densesim, mpp_on_bell_is_deterministic) {
    for (double u : {0.0, 0.5, 0.99}) {
        auto st = DenseState::zero({0, 1});
        apply_unitary(st, clifford_matrix("H"), {0});
        apply_unitary(st, clifford_matrix("CX"), {0, 1});
        EXPECT_EQ(measure_pauli(st, PauliString::from_str("XX"), u), 0);
        EXPECT_EQ(measure_pauli(st, PauliString::from_str("-ZZ"), u), 1);
    }
}

TEST(densesim, tilted_tomography_identity_gives_ideal_state) {
    auto r = tilted_tomography(Matrix::Identity(2, 2));
    EXPECT_NEAR(r.keep_x, 1, 1e-12);
    EXPECT_NEAR(r.keep_y, 1, 1e-12);
    EXPECT_NEAR(r.keep_z, 1, 1e-12);
    double h = std::sqrt(0.5);
    EXPECT_NEAR(r.x_kept, h, 1e-12);
    // Transversal Y on the 7-qubit code is -Y_L, so the raw product sees -sin(pi/4).
    EXPECT_NEAR(std::abs(r.y_kept), h, 1e-12);
    EXPECT_NEAR(r.z_kept, 0, 1e-12);
    EXPECT_NEAR(r.x_kept * r.x_kept + r.y_kept * r.y_kept + r.z_kept * r.z_kept, 1, 1e-12);
}

TEST(densesim, tilted_tomography_frozen_values) {
    // Frozen from an independent numpy evaluation of the same construction.
    auto r = tilted_tomography();
    EXPECT_NEAR(r.keep_x, 0.8202, 2e-4);
    EXPECT_NEAR(r.keep_y, 0.7778, 2e-4);
    EXPECT_NEAR(r.keep_z, 0.9488, 2e-4);
    EXPECT_NEAR(r.x_kept, 0.6525, 2e-4);
    EXPECT_NEAR(r.y_kept, -0.7581, 2e-4);
    EXPECT_NEAR(r.z_kept, 0.0064, 2e-4);
}
