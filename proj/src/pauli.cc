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

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cultsim {

namespace {

size_t num_words(size_t n) {
    return (n + 63) / 64;
}

void require_same_size(const PauliString &a, const PauliString &b) {
    if (a.n != b.n) {
        throw std::invalid_argument(
            "Pauli size mismatch: " + std::to_string(a.n) + " vs " + std::to_string(b.n));
    }
}

}  // namespace

PauliString::PauliString(size_t num_qubits)
    : n(num_qubits), xs(num_words(num_qubits), 0), zs(num_words(num_qubits), 0), log_i(0) {
}

void PauliString::set_x(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    if (v) {
        xs[q >> 6] |= m;
    } else {
        xs[q >> 6] &= ~m;
    }
}

void PauliString::set_z(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    if (v) {
        zs[q >> 6] |= m;
    } else {
        zs[q >> 6] &= ~m;
    }
}

char PauliString::at(size_t q) const {
    return "IXZY"[x(q) + 2 * z(q)];
}

void PauliString::set(size_t q, char p) {
    switch (p) {
        case 'I':
        case '_':
            set_x(q, false);
            set_z(q, false);
            break;
        case 'X':
            set_x(q, true);
            set_z(q, false);
            break;
        case 'Y':
            set_x(q, true);
            set_z(q, true);
            break;
        case 'Z':
            set_x(q, false);
            set_z(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("Not a Pauli: ") + p);
    }
}

PauliString PauliString::single(size_t num_qubits, size_t q, char p) {
    if (q >= num_qubits) {
        throw std::invalid_argument("qubit out of range");
    }
    PauliString r(num_qubits);
    r.set(q, p);
    return r;
}

PauliString PauliString::from_str(std::string_view text) {
    uint8_t log_i = 0;
    size_t k = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        if (text[k] == '-') {
            log_i = 2;
        }
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        log_i = (log_i + 1) & 3;
        k++;
    }
    PauliString r(text.size() - k);
    for (size_t q = 0; k < text.size(); k++, q++) {
        r.set(q, text[k]);
    }
    r.log_i = log_i;
    return r;
}

PauliString PauliString::from_product(std::string_view text, size_t num_qubits) {
    PauliString r(num_qubits);
    size_t k = 0;
    if (k < text.size() && (text[k] == '-' || text[k] == '!')) {
        r.log_i = 2;
        k++;
    } else if (k < text.size() && text[k] == '+') {
        k++;
    }
    while (k < text.size()) {
        char p = text[k++];
        size_t start = k;
        while (k < text.size() && text[k] >= '0' && text[k] <= '9') {
            k++;
        }
        if (start == k) {
            throw std::invalid_argument("Pauli product term without a qubit index: " + std::string(text));
        }
        size_t q = std::stoul(std::string(text.substr(start, k - start)));
        if (q >= num_qubits) {
            throw std::invalid_argument("Pauli product qubit out of range: " + std::string(text));
        }
        PauliString f = single(num_qubits, q, p);
        r *= f;
        if (k < text.size()) {
            if (text[k] != '*') {
                throw std::invalid_argument("Bad Pauli product: " + std::string(text));
            }
            k++;
        }
    }
    return r;
}

bool PauliString::is_identity() const {
    for (size_t w = 0; w < xs.size(); w++) {
        if (xs[w] | zs[w]) {
            return false;
        }
    }
    return true;
}

size_t PauliString::weight() const {
    size_t t = 0;
    for (size_t w = 0; w < xs.size(); w++) {
        t += std::popcount(xs[w] | zs[w]);
    }
    return t;
}

std::vector<size_t> PauliString::support() const {
    std::vector<size_t> r;
    for (size_t q = 0; q < n; q++) {
        if (x(q) || z(q)) {
            r.push_back(q);
        }
    }
    return r;
}

int PauliString::sign() const {
    if (!is_hermitian()) {
        throw std::invalid_argument("sign() of a non-Hermitian Pauli string");
    }
    return log_i == 0 ? +1 : -1;
}

std::string PauliString::str() const {
    std::string r = (log_i & 2) ? "-" : "+";
    if (log_i & 1) {
        r += "i";
    }
    for (size_t q = 0; q < n; q++) {
        char c = at(q);
        r += c == 'I' ? '_' : c;
    }
    return r;
}

std::string PauliString::product_str() const {
    std::string r = (log_i & 2) ? "-" : "";
    if (log_i & 1) {
        r += "i";
    }
    bool first = true;
    for (size_t q = 0; q < n; q++) {
        char c = at(q);
        if (c == 'I') {
            continue;
        }
        if (!first) {
            r += '*';
        }
        first = false;
        r += c;
        r += std::to_string(q);
    }
    return r;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    require_same_size(*this, rhs);
    int plus = 0;
    int minus = 0;
    for (size_t w = 0; w < xs.size(); w++) {
        uint64_t x1 = xs[w], z1 = zs[w], x2 = rhs.xs[w], z2 = rhs.zs[w];
        // sigma(a) sigma(b) = +i sigma(a^b) for XY, YZ, ZX and -i for YX, ZY, XZ.
        uint64_t p = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
        uint64_t m = (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2) | (x1 & ~z1 & ~x2 & z2);
        plus += std::popcount(p);
        minus += std::popcount(m);
        xs[w] = x1 ^ x2;
        zs[w] = z1 ^ z2;
    }
    log_i = (uint8_t)((log_i + rhs.log_i + plus + 3 * minus) & 3);
    return *this;
}

bool PauliString::operator==(const PauliString &other) const {
    return n == other.n && log_i == other.log_i && xs == other.xs && zs == other.zs;
}

bool PauliString::same_up_to_phase(const PauliString &other) const {
    return n == other.n && xs == other.xs && zs == other.zs;
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    PauliString r = a;
    r *= b;
    return r;
}

bool commutes(const PauliString &a, const PauliString &b) {
    require_same_size(a, b);
    uint64_t acc = 0;
    for (size_t w = 0; w < a.xs.size(); w++) {
        acc ^= (a.xs[w] & b.zs[w]) ^ (a.zs[w] & b.xs[w]);
    }
    return (std::popcount(acc) & 1) == 0;
}

PauliString puncture(const PauliString &p, const std::vector<size_t> &A) {
    PauliString r(A.size());
    for (size_t k = 0; k < A.size(); k++) {
        if (A[k] >= p.n) {
            throw std::invalid_argument("puncture: qubit out of range");
        }
        r.set_x(k, p.x(A[k]));
        r.set_z(k, p.z(A[k]));
    }
    r.log_i = p.log_i;
    return r;
}

Tableau Tableau::identity(size_t num_qubits) {
    Tableau t;
    t.n = num_qubits;
    for (size_t q = 0; q < num_qubits; q++) {
        t.G.push_back(PauliString::single(num_qubits, q, 'Z'));
        t.D.push_back(PauliString::single(num_qubits, q, 'X'));
    }
    return t;
}

std::string Tableau::invariant_violation() const {
    if (G.size() != n || D.size() != n) {
        return "row count differs from qubit count";
    }
    for (size_t i = 0; i < n; i++) {
        if (G[i].n != n || D[i].n != n) {
            return "row " + std::to_string(i) + " has the wrong width";
        }
        if (!G[i].is_hermitian()) {
            return "G" + std::to_string(i) + " is not Hermitian";
        }
        if (!D[i].is_hermitian()) {
            return "D" + std::to_string(i) + " is not Hermitian";
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (j > i && !commutes(G[i], G[j])) {
                return "G" + std::to_string(i) + " and G" + std::to_string(j) + " anticommute";
            }
            if (j > i && !commutes(D[i], D[j])) {
                return "D" + std::to_string(i) + " and D" + std::to_string(j) + " anticommute";
            }
            if (commutes(G[i], D[j]) == (i == j)) {
                return "G" + std::to_string(i) + " vs D" + std::to_string(j) + " has the wrong commutation";
            }
        }
    }
    return "";
}

std::string Tableau::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < n; i++) {
        out << "G" << i << " " << G[i].str() << "\n";
    }
    for (size_t i = 0; i < n; i++) {
        out << "D" << i << " " << D[i].str() << "\n";
    }
    return out.str();
}

CliffordMap CliffordMap::from_images(std::vector<PauliString> x_images, std::vector<PauliString> z_images) {
    CliffordMap u;
    u.k = x_images.size();
    if (z_images.size() != u.k) {
        throw std::invalid_argument("CliffordMap needs one X image and one Z image per qubit");
    }
    for (size_t a = 0; a < u.k; a++) {
        if (x_images[a].n != u.k || z_images[a].n != u.k) {
            throw std::invalid_argument("CliffordMap image has the wrong width");
        }
        if (!x_images[a].is_hermitian() || !z_images[a].is_hermitian()) {
            throw std::invalid_argument("CliffordMap image is not Hermitian");
        }
    }
    for (size_t a = 0; a < u.k; a++) {
        for (size_t b = 0; b < u.k; b++) {
            if (b > a && (!commutes(x_images[a], x_images[b]) || !commutes(z_images[a], z_images[b]))) {
                throw std::invalid_argument("CliffordMap images break commutation relations");
            }
            if (commutes(x_images[a], z_images[b]) == (a == b)) {
                throw std::invalid_argument("CliffordMap images break commutation relations");
            }
        }
    }
    u.x_images = std::move(x_images);
    u.z_images = std::move(z_images);
    u.build_table();
    return u;
}

namespace {

struct NamedImages {
    const char *name;
    std::vector<const char *> xs;
    std::vector<const char *> zs;
};

const std::vector<NamedImages> &named_gate_images() {
    static const std::vector<NamedImages> data = {
        {"I", {"+X"}, {"+Z"}},
        {"X", {"+X"}, {"-Z"}},
        {"Y", {"-X"}, {"-Z"}},
        {"Z", {"-X"}, {"+Z"}},
        {"H", {"+Z"}, {"+X"}},
        {"S", {"+Y"}, {"+Z"}},
        {"S_DAG", {"-Y"}, {"+Z"}},
        {"SQRT_X", {"+X"}, {"-Y"}},
        {"SQRT_X_DAG", {"+X"}, {"+Y"}},
        {"SQRT_Y", {"-Z"}, {"+X"}},
        {"SQRT_Y_DAG", {"+Z"}, {"-X"}},
        {"H_YZ", {"-X"}, {"+Y"}},
        {"H_XY", {"+Y"}, {"-Z"}},
        {"CZ", {"+XZ", "+ZX"}, {"+Z_", "+_Z"}},
        {"CX", {"+XX", "+_X"}, {"+Z_", "+ZZ"}},
        {"CY", {"+XY", "+ZX"}, {"+Z_", "+ZZ"}},
        {"SWAP", {"+_X", "+X_"}, {"+_Z", "+Z_"}},
    };
    return data;
}

}  // namespace

bool CliffordMap::is_named(std::string_view name) {
    for (const auto &e : named_gate_images()) {
        if (name == e.name) {
            return true;
        }
    }
    return false;
}

CliffordMap CliffordMap::named(std::string_view name) {
    for (const auto &e : named_gate_images()) {
        if (name == e.name) {
            std::vector<PauliString> xs, zs;
            for (const char *s : e.xs) {
                xs.push_back(PauliString::from_str(s));
            }
            for (const char *s : e.zs) {
                zs.push_back(PauliString::from_str(s));
            }
            return from_images(std::move(xs), std::move(zs));
        }
    }
    throw std::invalid_argument("Unknown Clifford gate: " + std::string(name));
}

PauliString CliffordMap::apply(const PauliString &p) const {
    if (p.n != k) {
        throw std::invalid_argument("CliffordMap::apply size mismatch");
    }
    PauliString r(k);
    r.log_i = p.log_i;
    for (size_t q = 0; q < k; q++) {
        bool px = p.x(q), pz = p.z(q);
        if (px && pz) {
            r.log_i = (r.log_i + 1) & 3;
        }
        if (px) {
            r *= x_images[q];
        }
        if (pz) {
            r *= z_images[q];
        }
    }
    return r;
}

CliffordMap CliffordMap::inverse() const {
    if (k > 8) {
        throw std::invalid_argument("CliffordMap::inverse supports at most 8 qubits");
    }
    std::vector<PauliString> xs(k), zs(k);
    size_t total = size_t{1} << (2 * k);
    for (size_t pat = 1; pat < total; pat++) {
        PauliString q(k);
        for (size_t a = 0; a < k; a++) {
            q.set_x(a, (pat >> a) & 1);
            q.set_z(a, (pat >> (a + k)) & 1);
        }
        PauliString img = apply(q);
        if (img.weight() != 1) {
            continue;
        }
        size_t a = img.support()[0];
        char c = img.at(a);
        if (c == 'Y') {
            continue;
        }
        PauliString pre = q;
        if (img.log_i == 2) {
            pre.log_i = (pre.log_i + 2) & 3;
        }
        (c == 'X' ? xs : zs)[a] = pre;
    }
    return from_images(std::move(xs), std::move(zs));
}

CliffordMap CliffordMap::then(const CliffordMap &first, const CliffordMap &second) {
    if (first.k != second.k) {
        throw std::invalid_argument("CliffordMap::then arity mismatch");
    }
    std::vector<PauliString> xs, zs;
    for (size_t a = 0; a < first.k; a++) {
        xs.push_back(second.apply(first.x_images[a]));
        zs.push_back(second.apply(first.z_images[a]));
    }
    return from_images(std::move(xs), std::move(zs));
}

void CliffordMap::build_table() {
    table.clear();
    if (k > 3) {
        return;
    }
    size_t total = size_t{1} << (2 * k);
    table.resize(total);
    for (size_t pat = 0; pat < total; pat++) {
        PauliString q(k);
        for (size_t a = 0; a < k; a++) {
            q.set_x(a, (pat >> a) & 1);
            q.set_z(a, (pat >> (a + k)) & 1);
        }
        PauliString img = apply(q);
        Entry e{0, 0, img.log_i};
        for (size_t a = 0; a < k; a++) {
            e.xs |= (uint8_t)(img.x(a) << a);
            e.zs |= (uint8_t)(img.z(a) << a);
        }
        table[pat] = e;
    }
}

void conjugate_in_place(PauliString &p, const CliffordMap &u, const std::vector<size_t> &targets) {
    size_t k = u.k;
    if (!u.table.empty()) {
        size_t lx = 0, lz = 0;
        for (size_t a = 0; a < k; a++) {
            lx |= (size_t)p.x(targets[a]) << a;
            lz |= (size_t)p.z(targets[a]) << a;
        }
        if ((lx | lz) == 0) {
            return;
        }
        const auto &e = u.table[lx | (lz << k)];
        for (size_t a = 0; a < k; a++) {
            p.set_x(targets[a], (e.xs >> a) & 1);
            p.set_z(targets[a], (e.zs >> a) & 1);
        }
        p.log_i = (p.log_i + e.log_i) & 3;
        return;
    }
    PauliString local(k);
    for (size_t a = 0; a < k; a++) {
        local.set_x(a, p.x(targets[a]));
        local.set_z(a, p.z(targets[a]));
    }
    PauliString img = u.apply(local);
    for (size_t a = 0; a < k; a++) {
        p.set_x(targets[a], img.x(a));
        p.set_z(targets[a], img.z(a));
    }
    p.log_i = (p.log_i + img.log_i) & 3;
}

void conjugate_in_place(Tableau &t, const CliffordMap &u, const std::vector<size_t> &targets) {
    if (targets.size() != u.k) {
        throw std::invalid_argument("conjugate: target count does not match gate arity");
    }
    for (size_t a = 0; a < targets.size(); a++) {
        if (targets[a] >= t.n) {
            throw std::invalid_argument("conjugate: target out of range");
        }
        for (size_t b = 0; b < a; b++) {
            if (targets[a] == targets[b]) {
                throw std::invalid_argument("conjugate: repeated target");
            }
        }
    }
    for (size_t i = 0; i < t.n; i++) {
        conjugate_in_place(t.G[i], u, targets);
        conjugate_in_place(t.D[i], u, targets);
    }
}

Tableau conjugate(Tableau t, const CliffordMap &u, const std::vector<size_t> &targets) {
    conjugate_in_place(t, u, targets);
    return t;
}

}  // namespace cultsim
