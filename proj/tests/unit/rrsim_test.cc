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

#include "cultsim/rrsim.h"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "cultsim/rng.h"

using namespace cultsim;

namespace {

const char *kGates[] = {"H", "S", "S_DAG", "SQRT_X", "H_YZ", "X", "Y", "Z", "CX", "CZ", "CY", "SWAP"};

double overlap2(const std::vector<Amp> &a, const std::vector<Amp> &b) {
    Amp ip{0, 0};
    double na = 0, nb = 0;
    for (size_t i = 0; i < a.size(); i++) {
        ip += std::conj(a[i]) * b[i];
        na += std::norm(a[i]);
        nb += std::norm(b[i]);
    }
    return std::norm(ip) / (na * nb);
}

DenseState dense_zero(size_t n) {
    std::vector<size_t> labels(n);
    for (size_t q = 0; q < n; q++) {
        labels[q] = q;
    }
    return DenseState::zero(labels);
}

RankedState exact(size_t n) {
    auto st = init_zero(n);
    st.eps = 0;
    st.m_max = 1 << 20;
    return st;
}

std::vector<size_t> distinct(size_t n, size_t k, std::mt19937_64 &rng) {
    std::vector<size_t> r;
    while (r.size() < k) {
        size_t q = rng() % n;
        if (std::find(r.begin(), r.end(), q) == r.end()) {
            r.push_back(q);
        }
    }
    return r;
}

void random_clifford_layer(RankedState &st, DenseState *d, std::mt19937_64 &rng, int count) {
    size_t n = st.n();
    for (int g = 0; g < count; g++) {
        const char *name = kGates[rng() % (n > 1 ? 12 : 8)];
        auto cm = CliffordMap::named(name);
        auto t = distinct(n, cm.k, rng);
        apply_clifford(st, cm, t);
        if (d) {
            apply_unitary(*d, clifford_matrix(name), t);
        }
    }
}

// Clifford gates interleaved with T gates on random qubits.
RankedState random_magic_state(size_t n, int t_count, std::mt19937_64 &rng, DenseState *d = nullptr) {
    auto st = exact(n);
    for (int i = 0; i < t_count; i++) {
        random_clifford_layer(st, d, rng, 6);
        size_t q = rng() % n;
        apply_channel(st, {q}, KrausChannel::unitary(t_gate()), 0.5);
        if (d) {
            apply_unitary(*d, t_gate(), {q});
        }
    }
    random_clifford_layer(st, d, rng, 6);
    return st;
}

Matrix reduced_density(const std::vector<Amp> &psi, size_t n, const std::vector<size_t> &A) {
    size_t k = A.size(), dim = size_t{1} << k;
    Matrix rho = Matrix::Zero(dim, dim);
    for (size_t a = 0; a < psi.size(); a++) {
        for (size_t b = 0; b < psi.size(); b++) {
            bool same_rest = true;
            for (size_t q = 0; q < n; q++) {
                if (std::find(A.begin(), A.end(), q) == A.end() && ((a >> q) & 1) != ((b >> q) & 1)) {
                    same_rest = false;
                    break;
                }
            }
            if (!same_rest) {
                continue;
            }
            size_t ia = 0, ib = 0;
            for (size_t c = 0; c < k; c++) {
                ia |= ((a >> A[c]) & 1) << c;
                ib |= ((b >> A[c]) & 1) << c;
            }
            rho(ia, ib) += psi[a] * std::conj(psi[b]);
        }
    }
    return rho;
}

// Traces out local qubits k.. of a (k+p)-qubit operator.
Matrix trace_ancillas(const Matrix &rho, size_t k, size_t p) {
    size_t dk = size_t{1} << k, dp = size_t{1} << p;
    Matrix r = Matrix::Zero(dk, dk);
    for (size_t a = 0; a < dk; a++) {
        for (size_t b = 0; b < dk; b++) {
            for (size_t e = 0; e < dp; e++) {
                r(a, b) += rho(a | (e << k), b | (e << k));
            }
        }
    }
    return r;
}

size_t numeric_rank(const Matrix &m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    size_t r = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); i++) {
        r += es.eigenvalues()[i] > 1e-9;
    }
    return r;
}

Matrix kron(const Matrix &hi, const Matrix &lo) {
    Matrix r(hi.rows() * lo.rows(), hi.cols() * lo.cols());
    for (Eigen::Index a = 0; a < hi.rows(); a++) {
        for (Eigen::Index b = 0; b < hi.cols(); b++) {
            r.block(a * lo.rows(), b * lo.cols(), lo.rows(), lo.cols()) = hi(a, b) * lo;
        }
    }
    return r;
}

Matrix amplitude_damping_0() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = std::sqrt(0.7);
    return m;
}
Matrix amplitude_damping_1() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = std::sqrt(0.3);
    return m;
}

}  // namespace

TEST(rrsim, init_zero_is_all_zeros) {
    auto st = init_zero(3);
    EXPECT_EQ(st.m(), 1u);
    auto v = to_dense(st);
    EXPECT_NEAR(std::norm(v[0]), 1, 1e-12);
    EXPECT_NEAR(expectation(st, PauliString::from_str("Z__")).real(), 1, 1e-15);
    EXPECT_NEAR(expectation(st, PauliString::from_str("X__")).real(), 0, 1e-15);
    EXPECT_NE(st.dump().find("G0 +Z__"), std::string::npos);
    EXPECT_THROW(init_zero(0), std::invalid_argument);
    EXPECT_THROW(init_zero(129), std::invalid_argument);
    EXPECT_NO_THROW(init_zero(128));
}

TEST(rrsim, t_on_plus_has_two_coefficients) {
    auto st = exact(1);
    apply_clifford(st, CliffordMap::named("H"), {0});
    ChannelOptions opt;
    opt.select_basis = false;
    apply_channel(st, {0}, KrausChannel::unitary(t_gate()), 0.5, opt);
    ASSERT_EQ(st.m(), 2u);
    double pi = std::numbers::pi;
    EXPECT_NEAR(st.terms[0].c.real(), std::cos(pi / 8), 1e-12);
    EXPECT_NEAR(st.terms[1].c.real(), -std::sin(pi / 8), 1e-12);
    EXPECT_NEAR(std::abs(st.terms[0].c.imag()) + std::abs(st.terms[1].c.imag()), 0, 1e-12);
}

TEST(rrsim, clifford_circuits_keep_one_coefficient) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 2 + rng() % 5;
        auto st = exact(n);
        auto d = dense_zero(n);
        random_clifford_layer(st, &d, rng, 30);
        EXPECT_EQ(st.m(), 1u);
        EXPECT_NEAR(overlap2(to_dense(st), d.amps), 1, 1e-10);
        EXPECT_TRUE(st.tab.satisfies_invariants());
    }
}

TEST(rrsim, canonical_moves_preserve_the_state) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 2 + rng() % 4;
        auto st = random_magic_state(n, 3, rng);
        auto before = to_dense(st);
        for (int mv = 0; mv < 20; mv++) {
            size_t i = rng() % n, j = (i + 1 + rng() % (n - 1)) % n;
            auto kind = (MoveKind)(rng() % 4);
            canonical_move(st, {kind, i, j});
            ASSERT_TRUE(st.tab.satisfies_invariants()) << st.tab.invariant_violation();
        }
        EXPECT_NEAR(overlap2(to_dense(st), before), 1, 1e-10);
        EXPECT_NEAR(st.norm2(), 1, 1e-10);
    }
    auto st = init_zero(2);
    EXPECT_THROW(canonical_move(st, {MoveKind::gg, 0, 0}), std::invalid_argument);
    EXPECT_THROW(canonical_move(st, {MoveKind::dg1, 5}), std::invalid_argument);
}

TEST(rrsim, moves_are_involutions_up_to_dg1) {
    std::mt19937_64 rng(8);
    auto st = random_magic_state(4, 3, rng);
    auto start = st;
    canonical_move(st, {MoveKind::gg, 0, 2});
    canonical_move(st, {MoveKind::gg, 0, 2});
    canonical_move(st, {MoveKind::swap, 1, 3});
    canonical_move(st, {MoveKind::swap, 1, 3});
    canonical_move(st, {MoveKind::dg2, 1, 2});
    canonical_move(st, {MoveKind::dg2, 1, 2});
    for (size_t i = 0; i < 4; i++) {
        EXPECT_EQ(st.tab.G[i], start.tab.G[i]);
        EXPECT_EQ(st.tab.D[i], start.tab.D[i]);
    }
    for (size_t t = 0; t < st.m(); t++) {
        EXPECT_EQ(st.terms[t].key, start.terms[t].key);
        EXPECT_NEAR(std::abs(st.terms[t].c - start.terms[t].c), 0, 1e-14);
    }
}

TEST(rrsim, random_circuits_match_dense_oracle) {
    std::mt19937_64 rng(100);
    Matrix ad0 = amplitude_damping_0(), ad1 = amplitude_damping_1();
    auto damping = KrausChannel::from({ad0, ad1});
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 2 + rng() % 5;
        auto st = exact(n);
        auto d = dense_zero(n);
        KeyedRng draws(trial, 0);
        for (int step = 0; step < 25; step++) {
            int op = rng() % 10;
            if (op < 5) {
                random_clifford_layer(st, &d, rng, 1);
            } else if (op < 7) {
                size_t q = rng() % n;
                apply_channel(st, {q}, KrausChannel::unitary(t_gate()), draws.uniform());
                apply_unitary(d, t_gate(), {q});
            } else if (op < 8) {
                size_t q = rng() % n;
                double u = draws.uniform();
                size_t a = apply_channel(st, {q}, damping, u);
                size_t b = apply_kraus(d, {ad0, ad1}, {q}, u);
                ASSERT_EQ(a, b);
            } else {
                PauliString p(n);
                for (size_t q : distinct(n, 1 + rng() % std::min<size_t>(n, 3), rng)) {
                    p.set(q, "XYZ"[rng() % 3]);
                }
                if (rng() & 1) {
                    p.log_i = 2;
                }
                double u = draws.uniform();
                ASSERT_EQ(measure(st, p, u), measure_pauli(d, p, u)) << "trial " << trial;
            }
            ASSERT_TRUE(st.tab.satisfies_invariants());
            ASSERT_NEAR(overlap2(to_dense(st), d.amps), 1, 1e-9) << "trial " << trial << " step " << step;
        }
        for (size_t q = 0; q < n; q++) {
            auto z = PauliString::single(n, q, 'Z');
            EXPECT_NEAR(expectation(st, z).real(), expectation(d, z), 1e-9);
        }
    }
}

TEST(rrsim, pauli_channel_statistics) {
    int flips = 0;
    const int shots = 4000;
    auto x = PauliString::from_str("X");
    auto i = PauliString::from_str("I");
    for (int s = 0; s < shots; s++) {
        auto st = init_zero(1);
        KeyedRng rng(3, s);
        apply_pauli_channel(st, {{0.75, i}, {0.25, x}}, {0}, rng.uniform());
        flips += measure(st, PauliString::from_str("Z"), rng.uniform());
    }
    double sigma = std::sqrt(shots * 0.25 * 0.75);
    EXPECT_LT(std::abs(flips - shots * 0.25), 5 * sigma);
    auto st = init_zero(1);
    EXPECT_THROW(apply_pauli_channel(st, {{0.5, i}}, {0}, 0.1), std::invalid_argument);
    EXPECT_THROW(apply_pauli_channel(st, {{-0.5, i}, {1.5, x}}, {0}, 0.1), std::invalid_argument);
}

TEST(rrsim, measurement_examples) {
    auto st = init_zero(2);
    apply_clifford(st, CliffordMap::named("H"), {0});
    apply_clifford(st, CliffordMap::named("CX"), {0, 1});
    for (double u : {0.0, 0.7}) {
        auto s = st;
        EXPECT_EQ(measure(s, PauliString::from_str("XX"), u), 0);
        EXPECT_EQ(measure(s, PauliString::from_str("-ZZ"), u), 1);
        EXPECT_EQ(measure(s, PauliString::from_str("YY"), u), 1);
    }
    auto a = st, b = st;
    EXPECT_EQ(measure(a, PauliString::from_str("Z_"), 0.1), 0);
    EXPECT_EQ(measure(b, PauliString::from_str("Z_"), 0.9), 1);
    EXPECT_EQ(measure(b, PauliString::from_str("_Z"), 0.1), 1);
    EXPECT_THROW(measure(a, PauliString::from_str("iZ_"), 0.5), std::invalid_argument);
    EXPECT_THROW(measure(a, PauliString::from_str("__"), 0.5), std::invalid_argument);
}

TEST(rrsim, destructive_and_creative_match_dense) {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 3 + rng() % 3;
        auto d = dense_zero(n);
        auto st = random_magic_state(n, 3, rng, &d);
        size_t q = rng() % n;
        char basis = (rng() & 1) ? 'X' : 'Z';
        double u = (rng() % 1000) / 1000.0;
        int a = measure_destructive(st, q, basis, u);
        int b = destructive_measure(d, q, basis, u);
        ASSERT_EQ(a, b);
        ASSERT_EQ(st.n(), n - 1);
        ASSERT_TRUE(st.tab.satisfies_invariants()) << st.tab.invariant_violation();
        ASSERT_NEAR(overlap2(to_dense(st), d.amps), 1, 1e-9);
        char basis2 = (rng() & 1) ? 'X' : 'Z';
        creative_reset(st, basis2);
        creative_reset(d, 100, basis2);
        ASSERT_NEAR(overlap2(to_dense(st), d.amps), 1, 1e-9);
    }
    auto one = init_zero(1);
    EXPECT_THROW(measure_destructive(one, 0, 'Z', 0.5), std::invalid_argument);
    auto two = init_zero(2);
    EXPECT_THROW(measure_destructive(two, 0, 'Y', 0.5), std::invalid_argument);
    EXPECT_THROW(creative_reset(two, 'Y'), std::invalid_argument);
}

TEST(rrsim, trim_drops_small_terms_and_caps_m) {
    auto st = exact(3);
    for (size_t q = 0; q < 3; q++) {
        apply_clifford(st, CliffordMap::named("H"), {q});
    }
    ChannelOptions keep;
    keep.select_basis = false;
    keep.trim = false;
    for (size_t q = 0; q < 3; q++) {
        apply_channel(st, {q}, KrausChannel::unitary(t_gate()), 0.5, keep);
    }
    ASSERT_EQ(st.m(), 8u);
    auto capped = st;
    capped.m_max = 1;
    trim(capped);
    EXPECT_EQ(capped.m(), 1u);
    EXPECT_NEAR(capped.norm2(), 1, 1e-12);
    double c = std::cos(std::numbers::pi / 8);
    EXPECT_NEAR(capped.discarded_weight, 1 - std::pow(c, 6), 1e-12);
    auto cut = st;
    cut.eps = 0.2;  // keeps terms with at most one sin factor
    trim(cut);
    EXPECT_EQ(cut.m(), 4u);
    EXPECT_NEAR(cut.norm2(), 1, 1e-12);
}

TEST(rrsim, cle_form_on_random_states) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; trial++) {
        size_t n = 6;
        auto st = random_magic_state(n, 2, rng);
        auto before = to_dense(st);
        auto A = distinct(n, 1 + rng() % 3, rng);
        auto cle = reduce_cle(st, A);
        ASSERT_EQ(cle_violation(st, cle), "") << "trial " << trial;
        ASSERT_NEAR(overlap2(to_dense(st), before), 1, 1e-10);
        ASSERT_LE(cle.p, cle.k);
        if (cle.k <= 2) {
            EXPECT_TRUE(cle.strict);
        }
    }
}

TEST(rrsim, cle_p_equals_stabilizer_entanglement) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 5;
        auto st = exact(n);
        auto d = dense_zero(n);
        random_clifford_layer(st, &d, rng, 25);
        auto A = distinct(n, 1 + rng() % 2, rng);
        auto cle = reduce_cle(st, A);
        size_t rank = numeric_rank(reduced_density(d.amps, n, A));
        EXPECT_EQ(size_t{1} << cle.p, rank);
    }
}

TEST(rrsim, bell_pair_has_one_ancilla) {
    auto st = init_zero(2);
    apply_clifford(st, CliffordMap::named("H"), {0});
    apply_clifford(st, CliffordMap::named("CX"), {0, 1});
    auto cle = reduce_cle(st, {0});
    EXPECT_EQ(cle.k, 1u);
    EXPECT_EQ(cle.p, 1u);
    EXPECT_EQ(cle_violation(st, cle), "");
    auto ls = build_local(st, cle);
    // Maximally entangled with its ancilla.
    EXPECT_EQ(numeric_rank(ls.rho), 1u);
    EXPECT_LT((trace_ancillas(ls.rho, 1, 1) - Matrix::Identity(2, 2) * 0.5).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(rrsim, code_block_region_needs_relaxed_form) {
    // Four region qubits in a [[4,2,2]] code whose two logical qubits are Bell-paired with qubits 4 and 5.
    // Logical pairs: (XX__, Z_Z_) and (X_X_, ZZ__).
    auto st = init_zero(6);
    for (const char *g : {"XXXX__", "ZZZZ__", "XX__X_", "Z_Z_Z_", "X_X__X", "ZZ___Z"}) {
        measure(st, PauliString::from_str(g), 0.3);
    }
    auto before = to_dense(st);
    std::vector<size_t> A = {0, 1, 2, 3};
    auto cle = reduce_cle(st, A);
    EXPECT_EQ(cle.k, 4u);
    EXPECT_EQ(cle.p, 2u);
    EXPECT_FALSE(cle.strict);
    EXPECT_EQ(cle_violation(st, cle), "");
    EXPECT_NEAR(overlap2(to_dense(st), before), 1, 1e-10);
    auto ls = build_local(st, cle);
    auto rho_a = reduced_density(to_dense(st), 6, A);
    EXPECT_LT((trace_ancillas(ls.rho, 4, 2) - rho_a).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(rrsim, local_density_matches_dense_reduced_state) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 5;
        auto st = random_magic_state(n, 3, rng);
        auto A = distinct(n, 1 + rng() % 3, rng);
        auto cle = reduce_cle(st, A);
        auto ls = build_local(st, cle);
        ASSERT_TRUE(ls.local_tableau.satisfies_invariants()) << ls.local_tableau.invariant_violation();
        EXPECT_NEAR(ls.rho.trace().real(), 1, 1e-10);
        EXPECT_LT((ls.rho - ls.rho.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
        auto rho_a = reduced_density(to_dense(st), n, A);
        EXPECT_LT((trace_ancillas(ls.rho, cle.k, cle.p) - rho_a).cwiseAbs().maxCoeff(), 1e-10) << "trial " << trial;
    }
}

TEST(rrsim, local_tableau_of_unentangled_region) {
    auto st = init_zero(3);
    apply_clifford(st, CliffordMap::named("H"), {1});
    auto cle = reduce_cle(st, {1});
    EXPECT_EQ(cle.p, 0u);
    auto ls = build_local(st, cle);
    EXPECT_EQ(ls.local_tableau.G[0], PauliString::from_str("X"));
    EXPECT_NEAR(std::abs(ls.rho(0, 0) - 0.5), 0, 1e-12);
    EXPECT_NEAR(std::abs(ls.rho(0, 1) - 0.5), 0, 1e-12);
}

TEST(rrsim, direct_and_local_channel_methods_agree) {
    std::mt19937_64 rng(91);
    Matrix ad0 = amplitude_damping_0(), ad1 = amplitude_damping_1();
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 5;
        auto st = random_magic_state(n, 2, rng);
        auto A = distinct(n, 1 + rng() % 2, rng);
        auto ch = A.size() == 1 ? KrausChannel::from({ad0, ad1})
                                : KrausChannel::from({kron(ad0, ad0), kron(ad0, ad1), kron(ad1, ad0), kron(ad1, ad1)});
        for (size_t br = 0; br < ch.kraus.size(); br++) {
            auto a = st, b = st;
            ChannelOptions direct, local;
            direct.trim = local.trim = false;
            local.method = ChannelMethod::local;
            double wa = 0, wb = 0;
            try {
                wa = apply_channel_branch(a, A, ch, br, direct);
            } catch (const std::domain_error &) {
                EXPECT_THROW(apply_channel_branch(b, A, ch, br, local), std::domain_error);
                continue;
            }
            wb = apply_channel_branch(b, A, ch, br, local);
            EXPECT_NEAR(wa, wb, 1e-12);
            EXPECT_NEAR(overlap2(to_dense(a), to_dense(b)), 1, 1e-10);
        }
    }
}

TEST(rrsim, channel_errors) {
    auto st = init_zero(3);
    std::vector<Matrix> incomplete = {Matrix::Identity(2, 2) * 0.5};
    EXPECT_THROW(apply_channel(st, {0}, incomplete, 0.5), std::invalid_argument);
    auto t = KrausChannel::unitary(t_gate());
    EXPECT_THROW(apply_channel(st, {0, 1}, t, 0.5), std::invalid_argument);
    EXPECT_THROW(apply_channel(st, {7}, t, 0.5), std::invalid_argument);
    ChannelOptions tiny;
    tiny.k_max = 0;
    EXPECT_THROW(apply_channel(st, {0}, t, 0.5, tiny), std::invalid_argument);
}

TEST(rrsim, pauli_expansion_reconstructs_matrix) {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    for (size_t k = 1; k <= 3; k++) {
        size_t dim = size_t{1} << k;
        Matrix m(dim, dim);
        for (size_t a = 0; a < dim; a++) {
            for (size_t b = 0; b < dim; b++) {
                m(a, b) = Amp(g(rng), g(rng));
            }
        }
        Matrix back = Matrix::Zero(dim, dim);
        for (const auto &[q, a] : pauli_expand(m)) {
            back += a * pauli_matrix(q);
        }
        EXPECT_LT((back - m).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(rrsim, basis_selection_undoes_a_clifford_rotation) {
    auto st = exact(2);
    ChannelOptions opt;
    opt.select_basis = false;
    // A Hadamard applied as a generic unitary spreads into two terms; selection folds it back.
    apply_channel(st, {0}, KrausChannel::unitary(clifford_matrix("H")), 0.5, opt);
    EXPECT_EQ(st.m(), 2u);
    auto sel = exact(2);
    apply_channel(sel, {0}, KrausChannel::unitary(clifford_matrix("H")), 0.5);
    EXPECT_EQ(sel.m(), 1u);
    EXPECT_NEAR(overlap2(to_dense(st), to_dense(sel)), 1, 1e-12);
}
