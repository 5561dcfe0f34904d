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

#include "cultsim/pauli.h"

#include <gtest/gtest.h>

#include <random>

#include "cultsim/densesim.h"

using namespace cultsim;

namespace {

PauliString from_index(size_t n, size_t pat, uint8_t log_i = 0) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.set_x(q, (pat >> q) & 1);
        p.set_z(q, (pat >> (q + n)) & 1);
    }
    p.log_i = log_i;
    return p;
}

PauliString random_pauli(size_t n, std::mt19937_64 &rng, bool hermitian = false) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.set(q, "IXYZ"[rng() & 3]);
    }
    p.log_i = hermitian ? (rng() & 1) * 2 : rng() & 3;
    return p;
}

Eigen::VectorXcd random_vector(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::VectorXcd v(dim);
    for (size_t k = 0; k < dim; k++) {
        v[k] = Amp(g(rng), g(rng));
    }
    return v;
}

}  // namespace

TEST(pauli, parse_and_format) {
    auto p = PauliString::from_str("-X_ZY");
    EXPECT_EQ(p.n, 4u);
    EXPECT_EQ(p.at(0), 'X');
    EXPECT_EQ(p.at(1), 'I');
    EXPECT_EQ(p.at(3), 'Y');
    EXPECT_EQ(p.sign(), -1);
    EXPECT_EQ(p.str(), "-X_ZY");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.support(), (std::vector<size_t>{0, 2, 3}));
    EXPECT_EQ(p.product_str(), "-X0*Z2*Y3");
    EXPECT_EQ(PauliString::from_product("X11*X18*X13*X6", 20).product_str(), "X6*X11*X13*X18");
    EXPECT_TRUE(PauliString::from_str("+iX").log_i == 1);
    EXPECT_FALSE(PauliString::from_str("+iX").is_hermitian());
}

TEST(pauli, multiply_examples) {
    auto x = PauliString::from_str("X");
    auto z = PauliString::from_str("Z");
    EXPECT_EQ(multiply(x, z), PauliString::from_str("-iY"));
    for (const char *s : {"X", "-Y", "ZZ", "-XYZ_"}) {
        auto p = PauliString::from_str(s);
        EXPECT_TRUE(multiply(p, p).is_identity());
        EXPECT_EQ(multiply(p, p).log_i, 0);
    }
    EXPECT_EQ(multiply(PauliString::from_str("XZ"), PauliString::from_str("ZZ")), PauliString::from_str("-iY_"));
    EXPECT_THROW(multiply(PauliString(2), PauliString(3)), std::invalid_argument);
}

TEST(pauli, exhaustive_matrix_oracle_small) {
    for (size_t n = 1; n <= 3; n++) {
        size_t total = size_t{1} << (2 * n);
        for (size_t a = 0; a < total; a++) {
            for (size_t b = 0; b < total; b++) {
                auto pa = from_index(n, a, a & 3);
                auto pb = from_index(n, b, b & 1 ? 2 : 0);
                Matrix ma = pauli_matrix(pa), mb = pauli_matrix(pb);
                Matrix prod = pauli_matrix(multiply(pa, pb));
                ASSERT_LT((ma * mb - prod).cwiseAbs().maxCoeff(), 1e-12) << pa.str() << " " << pb.str();
                bool comm = (ma * mb - mb * ma).cwiseAbs().maxCoeff() < 1e-12;
                ASSERT_EQ(comm, commutes(pa, pb));
            }
        }
    }
}

TEST(pauli, random_matrix_oracle_up_to_8_qubits) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 1000; trial++) {
        size_t n = 1 + rng() % 8;
        auto pa = random_pauli(n, rng), pb = random_pauli(n, rng);
        Matrix ma = pauli_matrix(pa), mb = pauli_matrix(pb);
        Eigen::VectorXcd v = random_vector(ma.rows(), rng);
        Eigen::VectorXcd lhs = ma * (mb * v);
        Eigen::VectorXcd rhs = pauli_matrix(multiply(pa, pb)) * v;
        ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-9);
        Eigen::VectorXcd ba = mb * (ma * v);
        bool comm = (lhs - ba).cwiseAbs().maxCoeff() < 1e-9;
        ASSERT_EQ(comm, commutes(pa, pb));
    }
}

TEST(pauli, multiplication_is_associative) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; trial++) {
        size_t n = 1 + rng() % 130;
        auto a = random_pauli(n, rng), b = random_pauli(n, rng), c = random_pauli(n, rng);
        ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    }
}

TEST(pauli, commutes_examples) {
    EXPECT_FALSE(commutes(PauliString::from_str("X"), PauliString::from_str("Z")));
    EXPECT_TRUE(commutes(PauliString::from_str("XX"), PauliString::from_str("ZZ")));
}

TEST(pauli, puncture_examples) {
    EXPECT_EQ(puncture(PauliString::from_str("XZ"), {0}), PauliString::from_str("X"));
    auto p = PauliString::from_str("-XZY");
    EXPECT_EQ(puncture(p, {0, 1, 2}), p);
    EXPECT_EQ(puncture(PauliString::from_str("Z_ZZ"), {2, 3}), PauliString::from_str("ZZ"));
}

TEST(clifford_map, named_gates_match_unitaries) {
    for (const char *name : {"I", "X", "Y", "Z", "H", "S", "S_DAG", "SQRT_X", "SQRT_X_DAG", "SQRT_Y", "SQRT_Y_DAG", "H_YZ", "H_XY", "CZ",
                             "CX", "CY", "SWAP"}) {
        auto u = CliffordMap::named(name);
        Matrix m = clifford_matrix(name);
        size_t total = size_t{1} << (2 * u.k);
        for (size_t pat = 0; pat < total; pat++) {
            auto p = from_index(u.k, pat, pat & 2);
            Matrix lhs = m * pauli_matrix(p) * m.adjoint();
            Matrix rhs = pauli_matrix(u.apply(p));
            ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12) << name << " " << p.str();
        }
        auto inv = u.inverse();
        for (size_t pat = 0; pat < total; pat++) {
            auto p = from_index(u.k, pat);
            ASSERT_EQ(inv.apply(u.apply(p)), p);
        }
    }
    EXPECT_THROW(CliffordMap::named("T"), std::invalid_argument);
}

TEST(clifford_map, rejects_bad_images) {
    EXPECT_THROW(CliffordMap::from_images({PauliString::from_str("X")}, {PauliString::from_str("X")}),
                 std::invalid_argument);
    EXPECT_THROW(CliffordMap::from_images({PauliString::from_str("iX")}, {PauliString::from_str("Z")}),
                 std::invalid_argument);
}

TEST(clifford_map, table_path_equals_generic_path) {
    std::mt19937_64 rng(3);
    auto u = CliffordMap::then(CliffordMap::named("CX"), CliffordMap::named("CZ"));
    for (int trial = 0; trial < 200; trial++) {
        auto p = random_pauli(5, rng);
        auto a = p;
        conjugate_in_place(a, u, {3, 1});
        CliffordMap slow = u;
        slow.table.clear();
        auto b = p;
        conjugate_in_place(b, slow, {3, 1});
        ASSERT_EQ(a, b);
    }
}

TEST(tableau, hadamard_swaps_roles) {
    auto t = conjugate(Tableau::identity(3), CliffordMap::named("H"), {0});
    EXPECT_EQ(t.G[0], PauliString::from_str("X__"));
    EXPECT_EQ(t.D[0], PauliString::from_str("Z__"));
    EXPECT_TRUE(t.satisfies_invariants());
}

TEST(tableau, pauli_conjugation_only_flips_signs) {
    auto t0 = Tableau::identity(4);
    conjugate_in_place(t0, CliffordMap::named("H"), {1});
    conjugate_in_place(t0, CliffordMap::named("CX"), {1, 2});
    auto t = conjugate(t0, CliffordMap::named("Y"), {2});
    for (size_t i = 0; i < 4; i++) {
        EXPECT_TRUE(t.G[i].same_up_to_phase(t0.G[i]));
        EXPECT_TRUE(t.D[i].same_up_to_phase(t0.D[i]));
    }
    EXPECT_NE(t.G[2], t0.G[2]);
}

TEST(tableau, conjugation_matches_dense_oracle_and_keeps_invariants) {
    std::mt19937_64 rng(9);
    const char *gates[] = {"H", "S", "S_DAG", "H_YZ", "SQRT_X", "CZ", "CX", "CY", "SWAP"};
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 2 + rng() % 3;
        auto t = Tableau::identity(n);
        Matrix u = Matrix::Identity(size_t{1} << n, size_t{1} << n);
        for (int g = 0; g < 12; g++) {
            const char *name = gates[rng() % 9];
            auto cm = CliffordMap::named(name);
            std::vector<size_t> targets;
            while (targets.size() < cm.k) {
                size_t q = rng() % n;
                if (std::find(targets.begin(), targets.end(), q) == targets.end()) {
                    targets.push_back(q);
                }
            }
            conjugate_in_place(t, cm, targets);
            DenseState st;
            for (size_t q = 0; q < n; q++) {
                st.labels.push_back(q);
            }
            Matrix next(u.rows(), u.cols());
            for (Eigen::Index c = 0; c < u.cols(); c++) {
                st.amps.assign(u.col(c).data(), u.col(c).data() + u.rows());
                apply_matrix(st, clifford_matrix(name), targets);
                for (Eigen::Index r = 0; r < u.rows(); r++) {
                    next(r, c) = st.amps[r];
                }
            }
            u = next;
            ASSERT_TRUE(t.satisfies_invariants()) << t.invariant_violation();
        }
        auto t0 = Tableau::identity(n);
        for (size_t i = 0; i < n; i++) {
            Matrix g = u * pauli_matrix(t0.G[i]) * u.adjoint();
            ASSERT_LT((g - pauli_matrix(t.G[i])).cwiseAbs().maxCoeff(), 1e-10);
            Matrix d = u * pauli_matrix(t0.D[i]) * u.adjoint();
            ASSERT_LT((d - pauli_matrix(t.D[i])).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
}

TEST(tableau, invariant_checker_catches_violations) {
    auto t = Tableau::identity(2);
    t.D[1] = PauliString::from_str("X_");
    EXPECT_FALSE(t.satisfies_invariants());
    auto t2 = Tableau::identity(2);
    t2.G[0].log_i = 1;
    EXPECT_FALSE(t2.satisfies_invariants());
    EXPECT_THROW(conjugate(Tableau::identity(2), CliffordMap::named("H"), {2}), std::invalid_argument);
}
