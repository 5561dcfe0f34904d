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

#ifndef CULTSIM_DENSESIM_H
#define CULTSIM_DENSESIM_H

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "cultsim/pauli.h"

namespace cultsim {

using Amp = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Matrix of a Pauli string; bit j of a basis index is qubit j.
Matrix pauli_matrix(const PauliString &p);
/// Named single-qubit rotations exp(-i angle P / 2).
Matrix rx(double angle);
Matrix ry(double angle);
Matrix rz(double angle);
/// exp(-i pi Y / 8).
Matrix t_gate();
/// Unitary of a named Clifford gate (see CliffordMap::named).
Matrix clifford_matrix(std::string_view name);

/// State vector over a list of live qubit labels. Bit i of an amplitude index is labels[i].
struct DenseState {
    std::vector<size_t> labels;
    std::vector<Amp> amps;
    size_t cap = 26;

    /// All listed labels in |0>.
    static DenseState zero(const std::vector<size_t> &labels, size_t cap = 26);
    size_t position(size_t label) const;
    bool is_live(size_t label) const;
    double norm2() const;
    /// Amplitudes reordered so that bit j is sorted_labels[j], where sorted_labels is ascending.
    std::vector<Amp> canonical_amps() const;
};

/// Applies a 2^k x 2^k matrix to the listed labels without any checks. Bit j of the
/// matrix index is targets[j].
void apply_matrix(DenseState &st, const Matrix &m, const std::vector<size_t> &targets);
/// Applies U; throws if U is not unitary within tol or a label is not live.
void apply_unitary(DenseState &st, const Matrix &u, const std::vector<size_t> &targets, double tol = 1e-10);
/// Applies a Pauli string whose qubit index is the label.
void apply_pauli(DenseState &st, const PauliString &p);
/// Samples a Kraus branch using the uniform draw u; returns the branch index.
size_t apply_kraus(DenseState &st, const std::vector<Matrix> &kraus, const std::vector<size_t> &targets, double u,
                   double tol = 1e-10);
/// Same as apply_kraus but with the branch chosen by the caller.
double apply_kraus_branch(DenseState &st, const std::vector<Matrix> &kraus, const std::vector<size_t> &targets,
                          size_t branch);
/// Projective measurement of a Hermitian Pauli string (labels as qubit indices).
/// Returns 0 for the +1 eigenvalue and 1 for -1. The state is projected and renormalized.
int measure_pauli(DenseState &st, const PauliString &p, double u);
/// Measures and removes one qubit. basis is 'Z' or 'X'.
int destructive_measure(DenseState &st, size_t label, char basis, double u);
/// Adds a new qubit in |0> (basis 'Z') or |+> (basis 'X').
void creative_reset(DenseState &st, size_t label, char basis);
/// <psi|P|psi> for a Pauli string indexed by label.
double expectation(const DenseState &st, const PauliString &p);
/// |<a|b>|^2 for normalized states over the same label set.
double fidelity(const DenseState &a, const DenseState &b);
double fidelity(const std::vector<Amp> &a, const std::vector<Amp> &b);

struct TiltReport {
    double keep_x, keep_y, keep_z;
    double x_kept, y_kept, z_kept;
};

/// Exact post-selected transversal tomography of U^{x7}|T_C>, the distance-3 color code
/// holding (|0> + e^{i pi/4}|1>)/sqrt(2), with U = Rz(a) Rx(a) Rz(a). Logical components are
/// the raw transversal products, so the Y component is the product of the seven Y outcomes.
TiltReport tilted_tomography(double angle_deg = -10.0);
/// Same computation for an arbitrary single-qubit U.
TiltReport tilted_tomography(const Matrix &u);

/// Plaquettes of the seven-qubit color code in the labelling used by tilted_tomography.
const std::vector<std::vector<size_t>> &color_code_plaquettes();
/// U^{x7}|T_C> over labels 0..6.
DenseState tilted_state(const Matrix &u);
/// Probability of each outcome when every qubit is measured in `basis` (X, Y or Z). Bit j of
/// the index is the outcome at position j, with 0 meaning the +1 eigenvalue.
std::vector<double> basis_outcome_probabilities(const DenseState &st, char basis);

}  // namespace cultsim

#endif
