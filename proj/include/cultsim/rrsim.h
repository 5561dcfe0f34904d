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

#ifndef CULTSIM_RRSIM_H
#define CULTSIM_RRSIM_H

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "cultsim/densesim.h"
#include "cultsim/pauli.h"

namespace cultsim {

/// Syndrome bit-vector. Bit i selects destabilizer D_i.
using Key = std::array<uint64_t, 2>;
constexpr size_t kMaxRankedQubits = 128;

inline bool key_bit(const Key &k, size_t i) {
    return (k[i >> 6] >> (i & 63)) & 1;
}
inline void key_flip(Key &k, size_t i) {
    k[i >> 6] ^= uint64_t{1} << (i & 63);
}

struct KeyHash {
    size_t operator()(const Key &k) const {
        uint64_t h = k[0] * 0x9E3779B97F4A7C15ULL ^ (k[1] + 0x632BE59BD9B4E019ULL);
        h ^= h >> 29;
        h *= 0xBF58476D1CE4E5B9ULL;
        return (size_t)(h ^ (h >> 32));
    }
};

struct Term {
    Key key;
    Amp c;
};

/// Psi = sum_s C_s D^s |S>, with |S> the joint +1 eigenstate of the G rows.
struct RankedState {
    Tableau tab;
    std::vector<Term> terms;
    size_t m_max = 1000;
    double eps = 1e-4;
    /// Total squared weight removed by trim() so far.
    double discarded_weight = 0;
    /// Largest m seen at a public-operation exit.
    size_t peak_m = 1;

    size_t n() const {
        return tab.n;
    }
    size_t m() const {
        return terms.size();
    }
    double norm2() const;
    /// Line-oriented dump of the tableau and coefficients.
    std::string dump() const;
};

RankedState init_zero(size_t n);

void apply_clifford(RankedState &st, const CliffordMap &u, const std::vector<size_t> &targets);
/// Applies a Hermitian Pauli on all n qubits; only signs of rows change.
void apply_pauli(RankedState &st, const PauliString &p);
/// Samples one (probability, Pauli) branch with draw u and applies it. Paulis act on targets.
size_t apply_pauli_channel(RankedState &st, const std::vector<std::pair<double, PauliString>> &branches,
                           const std::vector<size_t> &targets, double u);

enum class MoveKind { swap, gg, dg1, dg2 };
struct Move {
    MoveKind kind;
    size_t i;
    size_t j = 0;
};
void canonical_move(RankedState &st, const Move &mv);

/// Canonical local entanglement form for region A (A[c] is the qubit of row c).
struct CleForm {
    std::vector<size_t> A;
    size_t k = 0;
    size_t p = 0;
    /// pivots[j] is the row among the first k that extra row k+j pairs with.
    std::vector<size_t> pivots;
    /// False when some extra row also anticommutes with a non-pivot row, which is
    /// unavoidable for some regions (e.g. a [[4,2,2]] code block on A).
    bool strict = true;
};

/// Brings the tableau into CLE form for A using canonical moves only.
CleForm reduce_cle(RankedState &st, const std::vector<size_t> &A);
/// Empty when st satisfies the CLE conditions for cle, otherwise the first violation.
std::string cle_violation(const RankedState &st, const CleForm &cle);

/// Local picture on the k qubits of A plus p ancillas (ancilla j is local qubit k+j).
struct LocalState {
    size_t k = 0;
    size_t p = 0;
    Tableau local_tableau;
    /// Density operator on the k+p local qubits; bit c of an index is local qubit c.
    Matrix rho;
};
LocalState build_local(const RankedState &st, const CleForm &cle, bool with_density = true);

/// Kraus operators with their Pauli expansions cached.
struct KrausChannel {
    size_t k = 0;
    std::vector<Matrix> kraus;
    std::vector<std::vector<std::pair<PauliString, Amp>>> expansions;

    /// Checks completeness within tol; throws std::invalid_argument otherwise.
    static KrausChannel from(std::vector<Matrix> kraus, double tol = 1e-10);
    static KrausChannel unitary(const Matrix &u, double tol = 1e-10);
};

/// Coefficients a_Q of m = sum_Q a_Q Q over Hermitian k-qubit Paulis (phase +1).
std::vector<std::pair<PauliString, Amp>> pauli_expand(const Matrix &m, double tol = 1e-14);

enum class ChannelMethod { direct, local };
struct ChannelOptions {
    ChannelMethod method = ChannelMethod::direct;
    size_t k_max = 6;
    bool select_basis = true;
    bool trim = true;
};
/// Samples a Kraus branch with draw u; returns its index.
size_t apply_channel(RankedState &st, const std::vector<size_t> &A, const KrausChannel &ch, double u,
                     const ChannelOptions &opt = {});
size_t apply_channel(RankedState &st, const std::vector<size_t> &A, const std::vector<Matrix> &kraus, double u,
                     const ChannelOptions &opt = {});
/// Applies the given branch; returns its probability.
double apply_channel_branch(RankedState &st, const std::vector<size_t> &A, const KrausChannel &ch, size_t branch,
                            const ChannelOptions &opt = {});

/// Keep-mode measurement of a Hermitian Pauli on all n qubits. Returns 0 for +1.
int measure(RankedState &st, const PauliString &p, double u);
/// Measures qubit q in basis 'Z' or 'X' and removes it; qubits above q shift down.
int measure_destructive(RankedState &st, size_t q, char basis, double u);
/// Appends a new last qubit in |0> ('Z') or |+> ('X').
void creative_reset(RankedState &st, char basis);

/// Drops |C_s| < eps, then the smallest entries beyond m_max, then renormalizes.
void trim(RankedState &st);
/// Amplitudes over n <= max_qubits qubits, bit j of an index is qubit j. Up to global phase.
std::vector<Amp> to_dense(const RankedState &st, size_t max_qubits = 20);
/// <Psi|P|Psi> for a Pauli on all n qubits.
Amp expectation(const RankedState &st, const PauliString &p);

}  // namespace cultsim

#endif
