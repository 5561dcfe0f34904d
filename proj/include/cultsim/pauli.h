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

#ifndef CULTSIM_PAULI_H
#define CULTSIM_PAULI_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cultsim {

/// An n-qubit Pauli operator i^log_i * (sigma_0 x sigma_1 x ...).
///
/// Qubit q carries X iff x(q), Z iff z(q), and Y iff both. The sigma factors are
/// the literal Pauli matrices, so Y = iXZ is stored as x=z=1 with no extra phase.
struct PauliString {
    size_t n = 0;
    std::vector<uint64_t> xs;
    std::vector<uint64_t> zs;
    uint8_t log_i = 0;

    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    /// Parses a dense form like "+X_ZY", "-iXX" or "ZZ".
    static PauliString from_str(std::string_view text);
    /// Parses a product form like "X11*Z3*Y0" (optionally signed) on n qubits.
    static PauliString from_product(std::string_view text, size_t num_qubits);
    /// Single-qubit Pauli `p` in {'I','X','Y','Z'} at qubit q.
    static PauliString single(size_t num_qubits, size_t q, char p);

    bool x(size_t q) const {
        return (xs[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (zs[q >> 6] >> (q & 63)) & 1;
    }
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);
    char at(size_t q) const;
    void set(size_t q, char p);

    bool is_hermitian() const {
        return (log_i & 1) == 0;
    }
    bool is_identity() const;
    size_t weight() const;
    std::vector<size_t> support() const;
    /// Sign of a Hermitian string: +1 or -1.
    int sign() const;

    /// Dense form, e.g. "+X_Z" or "-iY".
    std::string str() const;
    /// Product form used by MPP targets, e.g. "X11*Z3"; "-" prefix if negative.
    std::string product_str() const;

    PauliString &operator*=(const PauliString &rhs);
    bool operator==(const PauliString &other) const;
    bool operator!=(const PauliString &other) const {
        return !(*this == other);
    }
    /// Equality ignoring phase.
    bool same_up_to_phase(const PauliString &other) const;
};

PauliString multiply(const PauliString &a, const PauliString &b);
bool commutes(const PauliString &a, const PauliString &b);
/// Restriction of p to the qubits in A (in the given order); phase retained.
PauliString puncture(const PauliString &p, const std::vector<size_t> &A);

/// Paired stabilizer generators G and destabilizers D.
struct Tableau {
    size_t n = 0;
    std::vector<PauliString> G;
    std::vector<PauliString> D;

    /// G_i = Z_i, D_i = X_i.
    static Tableau identity(size_t num_qubits);

    /// Empty string when all invariants hold, otherwise a description of the first violation.
    std::string invariant_violation() const;
    bool satisfies_invariants() const {
        return invariant_violation().empty();
    }
    std::string str() const;
};

/// A k-qubit Clifford given by the images of X_q and Z_q under conjugation.
struct CliffordMap {
    size_t k = 0;
    std::vector<PauliString> x_images;
    std::vector<PauliString> z_images;

    /// Validates commutation relations; throws std::invalid_argument otherwise.
    static CliffordMap from_images(std::vector<PauliString> x_images, std::vector<PauliString> z_images);
    /// H, S, S_DAG, SQRT_X, SQRT_X_DAG, SQRT_Y, SQRT_Y_DAG, H_YZ, H_XY, X, Y, Z, I, CZ, CX, CY, SWAP.
    static CliffordMap named(std::string_view name);
    static bool is_named(std::string_view name);

    /// U P U^dagger for a k-qubit Pauli P.
    PauliString apply(const PauliString &p) const;
    CliffordMap inverse() const;
    /// The map P -> second(first(P)).
    static CliffordMap then(const CliffordMap &first, const CliffordMap &second);

    /// Lookup table over local (x bits, z bits) patterns, built for k <= 3.
    struct Entry {
        uint8_t xs;
        uint8_t zs;
        uint8_t log_i;
    };
    std::vector<Entry> table;
    void build_table();
};

/// Conjugates p by u acting on the listed qubits of p.
void conjugate_in_place(PauliString &p, const CliffordMap &u, const std::vector<size_t> &targets);
/// Conjugates every generator and destabilizer; O(k) per row.
Tableau conjugate(Tableau t, const CliffordMap &u, const std::vector<size_t> &targets);
void conjugate_in_place(Tableau &t, const CliffordMap &u, const std::vector<size_t> &targets);

}  // namespace cultsim

#endif
