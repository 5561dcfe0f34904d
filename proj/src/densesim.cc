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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cultsim/rng.h"

namespace cultsim {

namespace {

const Amp kI{0, 1};

Amp i_pow(int k) {
    switch (k & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

struct Masks {
    uint64_t x = 0;
    uint64_t z = 0;
    int log_i = 0;
};

Masks masks_for(const DenseState &st, const PauliString &p) {
    Masks m;
    m.log_i = p.log_i;
    for (size_t q = 0; q < p.n; q++) {
        bool px = p.x(q), pz = p.z(q);
        if (!px && !pz) {
            continue;
        }
        uint64_t bit = uint64_t{1} << st.position(q);
        if (px) {
            m.x |= bit;
        }
        if (pz) {
            m.z |= bit;
        }
        if (px && pz) {
            m.log_i += 1;
        }
    }
    return m;
}

// out = P v, with P = i^log_i X^x Z^z in position space.
void pauli_times(const Masks &m, const std::vector<Amp> &v, std::vector<Amp> &out) {
    out.assign(v.size(), Amp{0, 0});
    Amp base = i_pow(m.log_i);
    for (size_t y = 0; y < v.size(); y++) {
        Amp a = v[y] * base;
        if (std::popcount(m.z & y) & 1) {
            a = -a;
        }
        out[y ^ m.x] = a;
    }
}

}  // namespace

Matrix pauli_matrix(const PauliString &p) {
    size_t dim = size_t{1} << p.n;
    Matrix m = Matrix::Zero(dim, dim);
    uint64_t xm = 0, zm = 0;
    int ly = p.log_i;
    for (size_t q = 0; q < p.n; q++) {
        xm |= (uint64_t)p.x(q) << q;
        zm |= (uint64_t)p.z(q) << q;
        ly += p.x(q) && p.z(q);
    }
    Amp base = i_pow(ly);
    for (size_t y = 0; y < dim; y++) {
        m(y ^ xm, y) = (std::popcount(zm & y) & 1) ? -base : base;
    }
    return m;
}

Matrix rx(double angle) {
    Matrix m(2, 2);
    m << std::cos(angle / 2), -kI * std::sin(angle / 2), -kI * std::sin(angle / 2), std::cos(angle / 2);
    return m;
}

Matrix ry(double angle) {
    Matrix m(2, 2);
    m << std::cos(angle / 2), -std::sin(angle / 2), std::sin(angle / 2), std::cos(angle / 2);
    return m;
}

Matrix rz(double angle) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = std::exp(-kI * (angle / 2));
    m(1, 1) = std::exp(kI * (angle / 2));
    return m;
}

Matrix t_gate() {
    return ry(std::numbers::pi / 4);
}

Matrix clifford_matrix(std::string_view name) {
    const double r = 1 / std::sqrt(2.0);
    Matrix m;
    if (name == "I") {
        m = Matrix::Identity(2, 2);
    } else if (name == "X" || name == "Y" || name == "Z") {
        m = pauli_matrix(PauliString::from_str(std::string(name)));
    } else if (name == "H") {
        m.resize(2, 2);
        m << r, r, r, -r;
    } else if (name == "S") {
        m = Matrix::Zero(2, 2);
        m(0, 0) = 1;
        m(1, 1) = kI;
    } else if (name == "S_DAG") {
        m = Matrix::Zero(2, 2);
        m(0, 0) = 1;
        m(1, 1) = -kI;
    } else if (name == "SQRT_X") {
        m.resize(2, 2);
        m << Amp(0.5, 0.5), Amp(0.5, -0.5), Amp(0.5, -0.5), Amp(0.5, 0.5);
    } else if (name == "SQRT_X_DAG") {
        m.resize(2, 2);
        m << Amp(0.5, -0.5), Amp(0.5, 0.5), Amp(0.5, 0.5), Amp(0.5, -0.5);
    } else if (name == "SQRT_Y") {
        m = ry(std::numbers::pi / 2);
    } else if (name == "SQRT_Y_DAG") {
        m = ry(-std::numbers::pi / 2);
    } else if (name == "H_YZ") {
        m = (pauli_matrix(PauliString::from_str("Y")) + pauli_matrix(PauliString::from_str("Z"))) * r;
    } else if (name == "H_XY") {
        m = (pauli_matrix(PauliString::from_str("X")) + pauli_matrix(PauliString::from_str("Y"))) * r;
    } else if (name == "CZ") {
        m = Matrix::Identity(4, 4);
        m(3, 3) = -1;
    } else if (name == "CX") {
        m = Matrix::Zero(4, 4);
        m(0, 0) = 1;
        m(2, 2) = 1;
        m(3, 1) = 1;
        m(1, 3) = 1;
    } else if (name == "CY") {
        m = Matrix::Zero(4, 4);
        m(0, 0) = 1;
        m(2, 2) = 1;
        m(3, 1) = kI;
        m(1, 3) = -kI;
    } else if (name == "SWAP") {
        m = Matrix::Zero(4, 4);
        m(0, 0) = 1;
        m(3, 3) = 1;
        m(1, 2) = 1;
        m(2, 1) = 1;
    } else {
        throw std::invalid_argument("No matrix for gate " + std::string(name));
    }
    return m;
}

DenseState DenseState::zero(const std::vector<size_t> &labels, size_t cap) {
    if (labels.size() > cap) {
        throw std::length_error("dense state exceeds the live-qubit cap");
    }
    DenseState st;
    st.cap = cap;
    st.labels = labels;
    st.amps.assign(size_t{1} << labels.size(), Amp{0, 0});
    st.amps[0] = 1;
    for (size_t a = 0; a < labels.size(); a++) {
        for (size_t b = 0; b < a; b++) {
            if (labels[a] == labels[b]) {
                throw std::invalid_argument("duplicate qubit label");
            }
        }
    }
    return st;
}

size_t DenseState::position(size_t label) const {
    for (size_t k = 0; k < labels.size(); k++) {
        if (labels[k] == label) {
            return k;
        }
    }
    throw std::invalid_argument("qubit " + std::to_string(label) + " is not live");
}

bool DenseState::is_live(size_t label) const {
    return std::find(labels.begin(), labels.end(), label) != labels.end();
}

double DenseState::norm2() const {
    double t = 0;
    for (const auto &a : amps) {
        t += std::norm(a);
    }
    return t;
}

std::vector<Amp> DenseState::canonical_amps() const {
    std::vector<size_t> order(labels.size());
    for (size_t k = 0; k < order.size(); k++) {
        order[k] = k;
    }
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return labels[a] < labels[b]; });
    std::vector<Amp> out(amps.size());
    for (size_t y = 0; y < amps.size(); y++) {
        size_t t = 0;
        for (size_t j = 0; j < order.size(); j++) {
            t |= ((y >> order[j]) & 1) << j;
        }
        out[t] = amps[y];
    }
    return out;
}

void apply_matrix(DenseState &st, const Matrix &m, const std::vector<size_t> &targets) {
    size_t k = targets.size();
    size_t dim = size_t{1} << k;
    if ((size_t)m.rows() != dim || (size_t)m.cols() != dim) {
        throw std::invalid_argument("matrix size does not match target count");
    }
    std::vector<size_t> pos(k);
    size_t tmask = 0;
    for (size_t j = 0; j < k; j++) {
        pos[j] = st.position(targets[j]);
        if (tmask & (size_t{1} << pos[j])) {
            throw std::invalid_argument("repeated target");
        }
        tmask |= size_t{1} << pos[j];
    }
    std::vector<size_t> offs(dim, 0);
    for (size_t local = 0; local < dim; local++) {
        for (size_t j = 0; j < k; j++) {
            if ((local >> j) & 1) {
                offs[local] |= size_t{1} << pos[j];
            }
        }
    }
    std::vector<Amp> in(dim), out(dim);
    size_t total = st.amps.size();
    for (size_t base = 0; base < total; base++) {
        if (base & tmask) {
            continue;
        }
        for (size_t a = 0; a < dim; a++) {
            in[a] = st.amps[base | offs[a]];
        }
        for (size_t a = 0; a < dim; a++) {
            Amp acc{0, 0};
            for (size_t b = 0; b < dim; b++) {
                acc += m(a, b) * in[b];
            }
            out[a] = acc;
        }
        for (size_t a = 0; a < dim; a++) {
            st.amps[base | offs[a]] = out[a];
        }
    }
}

void apply_unitary(DenseState &st, const Matrix &u, const std::vector<size_t> &targets, double tol) {
    Matrix check = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    if (check.cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("apply_unitary: matrix is not unitary");
    }
    apply_matrix(st, u, targets);
}

void apply_pauli(DenseState &st, const PauliString &p) {
    Masks m = masks_for(st, p);
    std::vector<Amp> out;
    pauli_times(m, st.amps, out);
    st.amps.swap(out);
}

double apply_kraus_branch(DenseState &st, const std::vector<Matrix> &kraus, const std::vector<size_t> &targets,
                          size_t branch) {
    DenseState trial = st;
    apply_matrix(trial, kraus.at(branch), targets);
    double w = trial.norm2();
    if (w <= 0) {
        throw std::domain_error("selected Kraus branch has zero weight");
    }
    double s = 1 / std::sqrt(w);
    for (auto &a : trial.amps) {
        a *= s;
    }
    st = std::move(trial);
    return w;
}

size_t apply_kraus(DenseState &st, const std::vector<Matrix> &kraus, const std::vector<size_t> &targets, double u,
                   double tol) {
    if (kraus.empty()) {
        throw std::invalid_argument("empty Kraus set");
    }
    Matrix sum = Matrix::Zero(kraus[0].cols(), kraus[0].cols());
    for (const auto &k : kraus) {
        sum += k.adjoint() * k;
    }
    if ((sum - Matrix::Identity(sum.rows(), sum.cols())).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("Kraus operators are not complete");
    }
    std::vector<DenseState> outs;
    std::vector<double> weights;
    for (const auto &k : kraus) {
        DenseState trial = st;
        apply_matrix(trial, k, targets);
        weights.push_back(trial.norm2());
        outs.push_back(std::move(trial));
    }
    size_t b = pick_branch(weights, u);
    double s = 1 / std::sqrt(weights[b]);
    st = std::move(outs[b]);
    for (auto &a : st.amps) {
        a *= s;
    }
    return b;
}

int measure_pauli(DenseState &st, const PauliString &p, double u) {
    if (!p.is_hermitian()) {
        throw std::invalid_argument("measure_pauli needs a Hermitian Pauli string");
    }
    Masks m = masks_for(st, p);
    std::vector<Amp> pv;
    pauli_times(m, st.amps, pv);
    std::vector<Amp> plus(st.amps.size()), minus(st.amps.size());
    double w0 = 0, w1 = 0;
    for (size_t y = 0; y < pv.size(); y++) {
        plus[y] = (st.amps[y] + pv[y]) * 0.5;
        minus[y] = (st.amps[y] - pv[y]) * 0.5;
        w0 += std::norm(plus[y]);
        w1 += std::norm(minus[y]);
    }
    int bit = (int)pick_branch({w0, w1}, u);
    auto &keep = bit ? minus : plus;
    double s = 1 / std::sqrt(bit ? w1 : w0);
    for (auto &a : keep) {
        a *= s;
    }
    st.amps.swap(keep);
    return bit;
}

int destructive_measure(DenseState &st, size_t label, char basis, double u) {
    size_t pos = st.position(label);
    if (basis == 'X') {
        apply_matrix(st, clifford_matrix("H"), {label});
    } else if (basis != 'Z') {
        throw std::invalid_argument("destructive_measure basis must be Z or X");
    }
    size_t bit = size_t{1} << pos;
    double w0 = 0, w1 = 0;
    for (size_t y = 0; y < st.amps.size(); y++) {
        (y & bit ? w1 : w0) += std::norm(st.amps[y]);
    }
    int outcome = (int)pick_branch({w0, w1}, u);
    double s = 1 / std::sqrt(outcome ? w1 : w0);
    std::vector<Amp> out(st.amps.size() / 2);
    size_t low = bit - 1;
    for (size_t y = 0; y < st.amps.size(); y++) {
        if (((y & bit) != 0) == (outcome != 0)) {
            out[(y & low) | ((y >> 1) & ~low)] = st.amps[y] * s;
        }
    }
    st.amps.swap(out);
    st.labels.erase(st.labels.begin() + pos);
    return outcome;
}

void creative_reset(DenseState &st, size_t label, char basis) {
    if (st.is_live(label)) {
        throw std::invalid_argument("qubit " + std::to_string(label) + " is already live");
    }
    if (st.labels.size() + 1 > st.cap) {
        throw std::length_error("dense state exceeds the live-qubit cap");
    }
    size_t half = st.amps.size();
    st.amps.resize(2 * half, Amp{0, 0});
    if (basis == 'X') {
        double r = 1 / std::sqrt(2.0);
        for (size_t y = 0; y < half; y++) {
            st.amps[y] *= r;
            st.amps[y + half] = st.amps[y];
        }
    } else if (basis != 'Z') {
        throw std::invalid_argument("creative_reset basis must be Z or X");
    }
    st.labels.push_back(label);
}

double expectation(const DenseState &st, const PauliString &p) {
    Masks m = masks_for(st, p);
    std::vector<Amp> pv;
    pauli_times(m, st.amps, pv);
    Amp t{0, 0};
    for (size_t y = 0; y < pv.size(); y++) {
        t += std::conj(st.amps[y]) * pv[y];
    }
    return t.real();
}

double fidelity(const std::vector<Amp> &a, const std::vector<Amp> &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    Amp t{0, 0};
    for (size_t y = 0; y < a.size(); y++) {
        t += std::conj(a[y]) * b[y];
    }
    return std::norm(t);
}

double fidelity(const DenseState &a, const DenseState &b) {
    std::vector<size_t> la = a.labels, lb = b.labels;
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) {
        throw std::invalid_argument("fidelity: label sets differ");
    }
    return fidelity(a.canonical_amps(), b.canonical_amps());
}

namespace {

// The injection patch: data qubits 0,1,3,5,7,8,10 of the listing relabelled 0..6.
const std::vector<std::vector<size_t>> kColorCodePlaquettes = {{1, 5, 6, 3}, {1, 3, 2, 0}, {3, 6, 4, 2}};

PauliString on_qubits(size_t n, const std::vector<size_t> &qs, char p) {
    PauliString r(n);
    for (size_t q : qs) {
        r.set(q, p);
    }
    return r;
}

std::vector<Amp> project_plaquettes(const DenseState &st, char p) {
    std::vector<Amp> v = st.amps, pv;
    for (const auto &plaq : kColorCodePlaquettes) {
        pauli_times(masks_for(st, on_qubits(7, plaq, p)), v, pv);
        for (size_t y = 0; y < v.size(); y++) {
            v[y] = (v[y] + pv[y]) * 0.5;
        }
    }
    return v;
}

}  // namespace

const std::vector<std::vector<size_t>> &color_code_plaquettes() {
    return kColorCodePlaquettes;
}

DenseState tilted_state(const Matrix &u) {
    std::vector<size_t> labels = {0, 1, 2, 3, 4, 5, 6};
    DenseState zero_l = DenseState::zero(labels);
    zero_l.amps = project_plaquettes(zero_l, 'X');
    double z = std::sqrt(zero_l.norm2());
    for (auto &a : zero_l.amps) {
        a /= z;
    }
    PauliString xl = on_qubits(7, labels, 'X');
    DenseState st = zero_l;
    apply_pauli(st, xl);
    Amp w = std::exp(kI * (std::numbers::pi / 4));
    for (size_t y = 0; y < st.amps.size(); y++) {
        st.amps[y] = (zero_l.amps[y] + w * st.amps[y]) / std::sqrt(2.0);
    }
    for (size_t q : labels) {
        apply_matrix(st, u, {q});
    }
    return st;
}

std::vector<double> basis_outcome_probabilities(const DenseState &st, char basis) {
    Matrix to_z;
    if (basis == 'X') {
        to_z = clifford_matrix("H");
    } else if (basis == 'Y') {
        to_z = clifford_matrix("H") * clifford_matrix("S_DAG");
    } else if (basis == 'Z') {
        to_z = Matrix::Identity(2, 2);
    } else {
        throw std::invalid_argument("basis must be X, Y or Z");
    }
    DenseState rotated = st;
    for (size_t q : st.labels) {
        apply_matrix(rotated, to_z, {q});
    }
    std::vector<double> probs(rotated.amps.size());
    for (size_t y = 0; y < probs.size(); y++) {
        probs[y] = std::norm(rotated.amps[y]);
    }
    return probs;
}

TiltReport tilted_tomography(const Matrix &u) {
    std::vector<size_t> labels = {0, 1, 2, 3, 4, 5, 6};
    DenseState st = tilted_state(u);

    double keeps[3], kept[3];
    const char axes[3] = {'X', 'Y', 'Z'};
    for (int a = 0; a < 3; a++) {
        DenseState proj = st;
        proj.amps = project_plaquettes(st, axes[a]);
        double keep = proj.norm2();
        keeps[a] = keep;
        kept[a] = expectation(proj, on_qubits(7, labels, axes[a])) / keep;
    }
    return TiltReport{keeps[0], keeps[1], keeps[2], kept[0], kept[1], kept[2]};
}

TiltReport tilted_tomography(double angle_deg) {
    double a = angle_deg * std::numbers::pi / 180;
    Matrix u = rz(a) * rx(a) * rz(a);
    return tilted_tomography(u);
}

}  // namespace cultsim
