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

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cultsim/rng.h"

namespace cultsim {

namespace {

using CoeffMap = std::unordered_map<Key, Amp, KeyHash>;

// Coefficients this small are numerical zeros and never stored.
constexpr double kZero2 = 1e-26;

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

int key_dot(const Key &a, const Key &b) {
    return (std::popcount(a[0] & b[0]) + std::popcount(a[1] & b[1])) & 1;
}

Key key_xor(const Key &a, const Key &b) {
    return {a[0] ^ b[0], a[1] ^ b[1]};
}

Key key_unit(size_t i) {
    Key k{0, 0};
    key_flip(k, i);
    return k;
}

Key key_erase_bit(const Key &k, size_t p) {
    unsigned __int128 v = ((unsigned __int128)k[1] << 64) | k[0];
    unsigned __int128 one = 1;
    unsigned __int128 low = v & ((one << p) - 1);
    unsigned __int128 high = v >> (p + 1);
    unsigned __int128 r = low | (high << p);
    return {(uint64_t)r, (uint64_t)(r >> 64)};
}

void require_index(const RankedState &st, size_t i) {
    if (i >= st.n()) {
        throw std::invalid_argument("row index " + std::to_string(i) + " out of range");
    }
}

void erase_qubit(PauliString &p, size_t q) {
    PauliString r(p.n - 1);
    for (size_t a = 0, b = 0; a < p.n; a++) {
        if (a == q) {
            continue;
        }
        r.set_x(b, p.x(a));
        r.set_z(b, p.z(a));
        b++;
    }
    r.log_i = p.log_i;
    p = std::move(r);
}

void append_qubit(PauliString &p) {
    p.n += 1;
    p.xs.resize((p.n + 63) / 64, 0);
    p.zs.resize((p.n + 63) / 64, 0);
}

PauliString embed(const PauliString &local, const std::vector<size_t> &targets, size_t n) {
    PauliString r(n);
    for (size_t a = 0; a < targets.size(); a++) {
        r.set_x(targets[a], local.x(a));
        r.set_z(targets[a], local.z(a));
    }
    r.log_i = local.log_i;
    return r;
}

// Q = i^w D^delta G^u, so Q D^s|S> = i^w (-1)^{u.s} D^{s xor delta}|S>.
struct Decomp {
    Key delta{0, 0};
    Key u{0, 0};
    uint8_t w = 0;
};

Decomp decompose(const Tableau &t, const PauliString &q) {
    Decomp d;
    PauliString prod(t.n);
    for (size_t i = 0; i < t.n; i++) {
        if (!commutes(q, t.G[i])) {
            key_flip(d.delta, i);
            prod *= t.D[i];
        }
    }
    for (size_t i = 0; i < t.n; i++) {
        if (!commutes(q, t.D[i])) {
            key_flip(d.u, i);
            prod *= t.G[i];
        }
    }
    if (!prod.same_up_to_phase(q)) {
        throw std::logic_error("tableau does not span the Pauli group");
    }
    d.w = (uint8_t)((q.log_i - prod.log_i) & 3);
    return d;
}

// Composition of decompositions of two operators acting on disjoint qubits.
Decomp compose(const Decomp &a, const Decomp &b) {
    Decomp r;
    r.delta = key_xor(a.delta, b.delta);
    r.u = key_xor(a.u, b.u);
    r.w = (uint8_t)((a.w + b.w + 2 * key_dot(a.u, b.delta)) & 3);
    return r;
}

// Decompositions of X, Y, Z on each qubit of a region, combined on demand.
struct RegionDecomposer {
    std::vector<std::array<Decomp, 3>> singles;

    RegionDecomposer(const Tableau &t, const std::vector<size_t> &A) {
        for (size_t q : A) {
            std::array<Decomp, 3> e;
            e[0] = decompose(t, PauliString::single(t.n, q, 'X'));
            e[1] = decompose(t, PauliString::single(t.n, q, 'Y'));
            e[2] = decompose(t, PauliString::single(t.n, q, 'Z'));
            singles.push_back(e);
        }
    }

    Decomp of(const PauliString &local) const {
        Decomp r;
        r.w = local.log_i & 3;
        for (size_t a = 0; a < singles.size(); a++) {
            bool x = local.x(a), z = local.z(a);
            if (x || z) {
                r = compose(r, singles[a][x && z ? 1 : (x ? 0 : 2)]);
            }
        }
        return r;
    }
};

struct WeightedDecomp {
    Decomp d;
    Amp a;
};

std::vector<WeightedDecomp> decompose_expansion(const RegionDecomposer &rd,
                                                const std::vector<std::pair<PauliString, Amp>> &ex) {
    std::vector<WeightedDecomp> r;
    for (const auto &[q, a] : ex) {
        r.push_back({rd.of(q), a});
    }
    return r;
}

std::vector<Term> act(const std::vector<Term> &terms, const std::vector<WeightedDecomp> &ops) {
    CoeffMap out;
    out.reserve(terms.size() * ops.size() * 2);
    for (const auto &t : terms) {
        for (const auto &op : ops) {
            Amp f = op.a * i_pow(op.d.w);
            if (key_dot(op.d.u, t.key)) {
                f = -f;
            }
            out[key_xor(t.key, op.d.delta)] += f * t.c;
        }
    }
    std::vector<Term> r;
    r.reserve(out.size());
    for (const auto &[k, c] : out) {
        if (std::norm(c) > kZero2) {
            r.push_back({k, c});
        }
    }
    std::sort(r.begin(), r.end(), [](const Term &a, const Term &b) { return a.key < b.key; });
    return r;
}

double weight(const std::vector<Term> &terms) {
    double w = 0;
    for (const auto &t : terms) {
        w += std::norm(t.c);
    }
    return w;
}

void scale(std::vector<Term> &terms, double s) {
    for (auto &t : terms) {
        t.c *= s;
    }
}

CoeffMap to_map(const std::vector<Term> &terms) {
    CoeffMap m;
    m.reserve(terms.size() * 2);
    for (const auto &t : terms) {
        m[t.key] = t.c;
    }
    return m;
}

Amp expectation_with(const CoeffMap &map, const std::vector<Term> &terms, const Decomp &d) {
    Amp total{0, 0};
    Amp w = i_pow(d.w);
    for (const auto &t : terms) {
        auto it = map.find(key_xor(t.key, d.delta));
        if (it == map.end()) {
            continue;
        }
        Amp f = w * t.c * std::conj(it->second);
        total += key_dot(d.u, t.key) ? -f : f;
    }
    return total;
}

void note_m(RankedState &st) {
    st.peak_m = std::max(st.peak_m, st.terms.size());
}

// ---- moves ------------------------------------------------------------

void move_swap(RankedState &st, size_t i, size_t j) {
    if (i == j) {
        return;
    }
    std::swap(st.tab.G[i], st.tab.G[j]);
    std::swap(st.tab.D[i], st.tab.D[j]);
    for (auto &t : st.terms) {
        if (key_bit(t.key, i) != key_bit(t.key, j)) {
            key_flip(t.key, i);
            key_flip(t.key, j);
        }
    }
}

void move_gg(RankedState &st, size_t i, size_t j) {
    st.tab.G[i] *= st.tab.G[j];
    st.tab.D[j] *= st.tab.D[i];
    for (auto &t : st.terms) {
        if (key_bit(t.key, j)) {
            key_flip(t.key, i);
        }
    }
}

void move_dg1(RankedState &st, size_t i) {
    st.tab.D[i] *= st.tab.G[i];
    st.tab.D[i].log_i = (st.tab.D[i].log_i + 3) & 3;
    for (auto &t : st.terms) {
        if (key_bit(t.key, i)) {
            t.c *= kI;
        }
    }
}

void move_dg2(RankedState &st, size_t i, size_t j) {
    st.tab.D[i] *= st.tab.G[j];
    st.tab.D[j] *= st.tab.G[i];
    for (auto &t : st.terms) {
        if (key_bit(t.key, i) && key_bit(t.key, j)) {
            t.c = -t.c;
        }
    }
}

// Replaces D_i by -D_i, compensating in the coefficients.
void flip_destabilizer_sign(RankedState &st, size_t i) {
    st.tab.D[i].log_i ^= 2;
    for (auto &t : st.terms) {
        if (key_bit(t.key, i)) {
            t.c = -t.c;
        }
    }
}

// ---- GF(2) helpers ----------------------------------------------------

using Bits = std::vector<uint64_t>;

bool bits_get(const Bits &b, size_t i) {
    return (b[i >> 6] >> (i & 63)) & 1;
}
void bits_flip(Bits &b, size_t i) {
    b[i >> 6] ^= uint64_t{1} << (i & 63);
}
void bits_xor(Bits &a, const Bits &b) {
    for (size_t w = 0; w < a.size(); w++) {
        a[w] ^= b[w];
    }
}

// Solves rows . x = rhs over GF(2) with free variables set to zero.
std::optional<Bits> solve_gf2(std::vector<Bits> rows, std::vector<uint8_t> rhs, size_t ncols) {
    size_t words = (ncols + 63) / 64;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); c++) {
        size_t piv = r;
        while (piv < rows.size() && !bits_get(rows[piv], c)) {
            piv++;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[piv], rows[r]);
        std::swap(rhs[piv], rhs[r]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != r && bits_get(rows[i], c)) {
                bits_xor(rows[i], rows[r]);
                rhs[i] ^= rhs[r];
            }
        }
        pivot_col.push_back(c);
        r++;
    }
    for (size_t i = r; i < rows.size(); i++) {
        if (rhs[i]) {
            return std::nullopt;
        }
    }
    Bits x(words, 0);
    for (size_t i = 0; i < r; i++) {
        if (rhs[i]) {
            bits_flip(x, pivot_col[i]);
        }
    }
    return x;
}

// Small dense GF(2) vectors as uint64 masks (at most 64 coordinates).
int dot64(uint64_t a, uint64_t b) {
    return std::popcount(a & b) & 1;
}

// Basis of {x : rows[i].x = 0 for all i} over ncols coordinates.
std::vector<uint64_t> nullspace64(std::vector<uint64_t> rows, size_t ncols) {
    std::vector<int> pivot_of_col(ncols, -1);
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); c++) {
        size_t piv = r;
        while (piv < rows.size() && !((rows[piv] >> c) & 1)) {
            piv++;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[piv], rows[r]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != r && ((rows[i] >> c) & 1)) {
                rows[i] ^= rows[r];
            }
        }
        pivot_of_col[c] = (int)r;
        r++;
    }
    std::vector<uint64_t> basis;
    for (size_t f = 0; f < ncols; f++) {
        if (pivot_of_col[f] >= 0) {
            continue;
        }
        uint64_t v = uint64_t{1} << f;
        for (size_t c = 0; c < ncols; c++) {
            if (pivot_of_col[c] >= 0 && ((rows[pivot_of_col[c]] >> f) & 1)) {
                v |= uint64_t{1} << c;
            }
        }
        basis.push_back(v);
    }
    return basis;
}

// Reduced row echelon form of a set of vectors; drops zero rows.
std::vector<uint64_t> rref64(std::vector<uint64_t> v, size_t ncols) {
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < v.size(); c++) {
        size_t piv = r;
        while (piv < v.size() && !((v[piv] >> c) & 1)) {
            piv++;
        }
        if (piv == v.size()) {
            continue;
        }
        std::swap(v[piv], v[r]);
        for (size_t i = 0; i < v.size(); i++) {
            if (i != r && ((v[i] >> c) & 1)) {
                v[i] ^= v[r];
            }
        }
        r++;
    }
    v.resize(r);
    return v;
}

size_t rank64(const std::vector<uint64_t> &v, size_t ncols) {
    return rref64(v, ncols).size();
}

bool in_span64(const std::vector<uint64_t> &basis, uint64_t x, size_t ncols) {
    auto b = basis;
    size_t before = rank64(b, ncols);
    b.push_back(x);
    return rank64(b, ncols) == before;
}

// Vectors over the region A: bit 2c is X on A[c], bit 2c+1 is Z on A[c].
uint64_t region_part(const PauliString &p, const std::vector<size_t> &A) {
    uint64_t v = 0;
    for (size_t c = 0; c < A.size(); c++) {
        v |= (uint64_t)p.x(A[c]) << (2 * c);
        v |= (uint64_t)p.z(A[c]) << (2 * c + 1);
    }
    return v;
}

int symp64(uint64_t a, uint64_t b) {
    const uint64_t even = 0x5555555555555555ULL;
    uint64_t ax = a & even, az = (a >> 1) & even, bx = b & even, bz = (b >> 1) & even;
    return std::popcount((ax & bz) ^ (az & bx)) & 1;
}

bool has_support_on(const PauliString &p, const std::vector<size_t> &A) {
    for (size_t q : A) {
        if (p.x(q) || p.z(q)) {
            return true;
        }
    }
    return false;
}

// Symplectic form on combinations of rows with region parts w.
struct ComboSpace {
    std::vector<uint64_t> w;

    uint64_t part(uint64_t combo) const {
        uint64_t v = 0;
        for (size_t i = 0; i < w.size(); i++) {
            if ((combo >> i) & 1) {
                v ^= w[i];
            }
        }
        return v;
    }
    int form(uint64_t a, uint64_t b) const {
        return symp64(part(a), part(b));
    }
};

// Extends isotropic `cur` (containing the radical) by `need` vectors to an isotropic
// complement of K. Depth-first with a budget.
bool extend_isotropic(const ComboSpace &cs, std::vector<uint64_t> &cur, const std::vector<uint64_t> &K, size_t need,
                      size_t r, size_t &budget) {
    if (need == 0) {
        return true;
    }
    std::vector<uint64_t> span = cur;
    span.insert(span.end(), K.begin(), K.end());
    size_t base_rank = rank64(span, r);
    for (uint64_t v = 1; v < (uint64_t{1} << r); v++) {
        if (budget-- == 0) {
            return false;
        }
        bool ok = true;
        for (uint64_t l : cur) {
            if (cs.form(v, l)) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        auto s2 = span;
        s2.push_back(v);
        if (rank64(s2, r) == base_rank) {
            continue;
        }
        cur.push_back(v);
        if (extend_isotropic(cs, cur, K, need - 1, r, budget)) {
            return true;
        }
        cur.pop_back();
    }
    return false;
}

// Inverse of a p x p GF(2) matrix given by rows; nullopt if singular.
std::optional<std::vector<uint64_t>> invert64(const std::vector<uint64_t> &m, size_t p) {
    std::vector<uint64_t> a = m, inv(p);
    for (size_t i = 0; i < p; i++) {
        inv[i] = uint64_t{1} << i;
    }
    for (size_t c = 0; c < p; c++) {
        size_t piv = c;
        while (piv < p && !((a[piv] >> c) & 1)) {
            piv++;
        }
        if (piv == p) {
            return std::nullopt;
        }
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        for (size_t i = 0; i < p; i++) {
            if (i != c && ((a[i] >> c) & 1)) {
                a[i] ^= a[c];
                inv[i] ^= inv[c];
            }
        }
    }
    return inv;
}

std::vector<uint64_t> transpose64(const std::vector<uint64_t> &m, size_t rows, size_t cols) {
    std::vector<uint64_t> t(cols, 0);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            if ((m[i] >> j) & 1) {
                t[j] |= uint64_t{1} << i;
            }
        }
    }
    return t;
}

std::vector<uint64_t> matmul64(const std::vector<uint64_t> &a, const std::vector<uint64_t> &b) {
    // (a b)[i] = xor over j in a[i] of b[j]
    std::vector<uint64_t> r(a.size(), 0);
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < b.size(); j++) {
            if ((a[i] >> j) & 1) {
                r[i] ^= b[j];
            }
        }
    }
    return r;
}

// Single-qubit frames tried after a channel: the six axis permutations.
struct Frame {
    std::vector<std::pair<PauliString, Amp>> expansion;
    CliffordMap inverse;
};

const std::vector<Frame> &frames() {
    static const std::vector<Frame> data = [] {
        std::vector<Frame> r;
        auto add = [&](const Matrix &m, const CliffordMap &map) {
            CliffordMap inv = map.inverse();
            inv.build_table();
            r.push_back({pauli_expand(m), inv});
        };
        Matrix h = clifford_matrix("H"), s = clifford_matrix("S");
        add(Matrix::Identity(2, 2), CliffordMap::named("I"));
        add(h, CliffordMap::named("H"));
        add(s, CliffordMap::named("S"));
        add(clifford_matrix("SQRT_X"), CliffordMap::named("SQRT_X"));
        add(h * s, CliffordMap::then(CliffordMap::named("S"), CliffordMap::named("H")));
        add(s * h, CliffordMap::then(CliffordMap::named("H"), CliffordMap::named("S")));
        return r;
    }();
    return data;
}

void select_basis(RankedState &st, const std::vector<size_t> &A) {
    const auto &fs = frames();
    for (size_t q : A) {
        if (st.terms.size() <= 1) {
            return;
        }
        RegionDecomposer rd(st.tab, {q});
        size_t best = 0;
        std::vector<Term> best_terms;
        for (size_t f = 1; f < fs.size(); f++) {
            auto trial = act(st.terms, decompose_expansion(rd, fs[f].expansion));
            size_t cur = best == 0 ? st.terms.size() : best_terms.size();
            if (trial.size() < cur) {
                best = f;
                best_terms = std::move(trial);
            }
        }
        if (best != 0) {
            st.terms = std::move(best_terms);
            conjugate_in_place(st.tab, fs[best].inverse, {q});
        }
    }
}

void validate_region(const RankedState &st, const std::vector<size_t> &A) {
    if (A.empty()) {
        throw std::invalid_argument("empty qubit region");
    }
    for (size_t a = 0; a < A.size(); a++) {
        if (A[a] >= st.n()) {
            throw std::invalid_argument("qubit " + std::to_string(A[a]) + " out of range");
        }
        for (size_t b = 0; b < a; b++) {
            if (A[a] == A[b]) {
                throw std::invalid_argument("repeated qubit in region");
            }
        }
    }
}

}  // namespace

// ---- state basics ---------------------------------------------------------

double RankedState::norm2() const {
    return weight(terms);
}

std::string RankedState::dump() const {
    std::ostringstream out;
    out << "n " << n() << " m " << m() << "\n";
    for (size_t i = 0; i < n(); i++) {
        out << "G" << i << " " << tab.G[i].str() << "\n";
    }
    for (size_t i = 0; i < n(); i++) {
        out << "D" << i << " " << tab.D[i].str() << "\n";
    }
    for (const auto &t : terms) {
        out << "C ";
        for (size_t i = 0; i < n(); i++) {
            out << (key_bit(t.key, i) ? '1' : '0');
        }
        out << " " << t.c.real() << " " << t.c.imag() << "\n";
    }
    return out.str();
}

RankedState init_zero(size_t n) {
    if (n == 0 || n > kMaxRankedQubits) {
        throw std::invalid_argument("init_zero: qubit count must be in [1, 128]");
    }
    RankedState st;
    st.tab = Tableau::identity(n);
    st.terms = {{Key{0, 0}, Amp{1, 0}}};
    return st;
}

void apply_clifford(RankedState &st, const CliffordMap &u, const std::vector<size_t> &targets) {
    conjugate_in_place(st.tab, u, targets);
}

void apply_pauli(RankedState &st, const PauliString &p) {
    if (p.n != st.n()) {
        throw std::invalid_argument("apply_pauli: size mismatch");
    }
    for (size_t i = 0; i < st.n(); i++) {
        if (!commutes(p, st.tab.G[i])) {
            st.tab.G[i].log_i ^= 2;
        }
        if (!commutes(p, st.tab.D[i])) {
            st.tab.D[i].log_i ^= 2;
        }
    }
}

size_t apply_pauli_channel(RankedState &st, const std::vector<std::pair<double, PauliString>> &branches,
                           const std::vector<size_t> &targets, double u) {
    std::vector<double> w;
    double total = 0;
    for (const auto &[prob, p] : branches) {
        if (prob < 0) {
            throw std::invalid_argument("negative probability in Pauli channel");
        }
        if (p.n != targets.size()) {
            throw std::invalid_argument("Pauli channel term does not match target count");
        }
        w.push_back(prob);
        total += prob;
    }
    if (std::abs(total - 1) > 1e-9) {
        throw std::invalid_argument("Pauli channel probabilities do not sum to 1");
    }
    size_t b = pick_branch(w, u);
    if (!branches[b].second.is_identity()) {
        apply_pauli(st, embed(branches[b].second, targets, st.n()));
    }
    return b;
}

void canonical_move(RankedState &st, const Move &mv) {
    require_index(st, mv.i);
    if (mv.kind != MoveKind::dg1) {
        require_index(st, mv.j);
        if (mv.i == mv.j) {
            throw std::invalid_argument("two-index move needs distinct indices");
        }
    }
    switch (mv.kind) {
        case MoveKind::swap:
            move_swap(st, mv.i, mv.j);
            break;
        case MoveKind::gg:
            move_gg(st, mv.i, mv.j);
            break;
        case MoveKind::dg1:
            move_dg1(st, mv.i);
            break;
        case MoveKind::dg2:
            move_dg2(st, mv.i, mv.j);
            break;
    }
}

// ---- CLE ------------------------------------------------------------------

CleForm reduce_cle(RankedState &st, const std::vector<size_t> &A) {
    validate_region(st, A);
    const size_t n = st.n(), k = A.size();
    if (k > 8) {
        throw std::invalid_argument("reduce_cle supports regions of at most 8 qubits");
    }

    // Echelon form on the region columns; rows past r end up with no support on A.
    size_t r = 0;
    for (size_t c = 0; c < 2 * k; c++) {
        size_t q = A[c / 2];
        auto has = [&](size_t i) { return c % 2 == 0 ? st.tab.G[i].x(q) : st.tab.G[i].z(q); };
        size_t piv = r;
        while (piv < n && !has(piv)) {
            piv++;
        }
        if (piv == n) {
            continue;
        }
        move_swap(st, r, piv);
        for (size_t j = 0; j < n; j++) {
            if (j != r && has(j)) {
                move_gg(st, j, r);
            }
        }
        r++;
    }

    ComboSpace cs;
    for (size_t i = 0; i < r; i++) {
        cs.w.push_back(region_part(st.tab.G[i], A));
    }
    std::vector<uint64_t> gram(r, 0);
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < r; j++) {
            if (symp64(cs.w[i], cs.w[j])) {
                gram[i] |= uint64_t{1} << j;
            }
        }
    }
    std::vector<uint64_t> rad = nullspace64(gram, r);
    size_t two_p = r - rad.size();
    size_t p = two_p / 2;
    if (two_p % 2 != 0 || r != k + p) {
        throw std::logic_error("reduce_cle: inconsistent stabilizer rank on region");
    }

    // Pick a destabilizer frame P_c in {X, Z, Y} per region qubit.
    struct Choice {
        int score = 99;
        std::vector<uint64_t> pvec;
        std::vector<uint64_t> phi;  // phi[c]: combos pairing with P_c
        std::vector<uint64_t> K;
    };
    Choice best;
    size_t total = 1;
    for (size_t c = 0; c < k; c++) {
        total *= 3;
    }
    for (size_t f = 0; f < total && best.score > 0; f++) {
        Choice ch;
        size_t code = f;
        for (size_t c = 0; c < k; c++) {
            int d = (int)(code % 3);
            code /= 3;
            uint64_t bx = uint64_t{1} << (2 * c), bz = uint64_t{1} << (2 * c + 1);
            ch.pvec.push_back(d == 0 ? bx : d == 1 ? bz : (bx | bz));
        }
        for (size_t c = 0; c < k; c++) {
            uint64_t row = 0;
            for (size_t i = 0; i < r; i++) {
                if (symp64(cs.w[i], ch.pvec[c])) {
                    row |= uint64_t{1} << i;
                }
            }
            ch.phi.push_back(row);
        }
        if (rank64(ch.phi, r) != k) {
            continue;
        }
        ch.K = nullspace64(ch.phi, r);
        std::vector<uint64_t> rad_img;
        for (uint64_t v : rad) {
            uint64_t img = 0;
            for (size_t c = 0; c < k; c++) {
                img |= (uint64_t)dot64(ch.phi[c], v) << c;
            }
            rad_img.push_back(img);
        }
        bool coordinate = true;
        for (uint64_t v : rref64(rad_img, k)) {
            coordinate &= std::popcount(v) == 1;
        }
        bool k_iso = true;
        for (uint64_t a : ch.K) {
            for (uint64_t b : ch.K) {
                k_iso &= cs.form(a, b) == 0;
            }
        }
        ch.score = (coordinate ? 0 : 2) + (k_iso ? 0 : 1);
        if (ch.score < best.score) {
            best = std::move(ch);
        }
    }
    if (best.score == 99) {
        throw std::logic_error("reduce_cle: no single-qubit destabilizer frame fits the region");
    }
    auto phi_of = [&](uint64_t combo) {
        uint64_t img = 0;
        for (size_t c = 0; c < k; c++) {
            img |= (uint64_t)dot64(best.phi[c], combo) << c;
        }
        return img;
    };

    // Isotropic complement L of K containing the radical.
    std::vector<uint64_t> L = rad;
    bool found = false;
    if (best.score % 2 == 0 && p > 0) {
        std::vector<uint64_t> span = rad;
        span.insert(span.end(), best.K.begin(), best.K.end());
        std::vector<uint64_t> comp;
        for (size_t i = 0; i < r && comp.size() < p; i++) {
            uint64_t e = uint64_t{1} << i;
            if (!in_span64(span, e, r)) {
                span.push_back(e);
                comp.push_back(e);
            }
        }
        std::vector<uint64_t> B(p, 0), G(p, 0), N(p, 0);
        for (size_t a = 0; a < p; a++) {
            for (size_t b = 0; b < p; b++) {
                if (cs.form(comp[a], best.K[b])) {
                    B[a] |= uint64_t{1} << b;
                }
                if (cs.form(comp[a], comp[b])) {
                    G[a] |= uint64_t{1} << b;
                    if (a < b) {
                        N[a] |= uint64_t{1} << b;
                    }
                }
            }
        }
        auto bt_inv = invert64(transpose64(B, p, p), p);
        if (bt_inv) {
            auto T = matmul64(N, *bt_inv);
            std::vector<uint64_t> cand = rad;
            for (size_t a = 0; a < p; a++) {
                uint64_t l = comp[a];
                for (size_t b = 0; b < p; b++) {
                    if ((T[a] >> b) & 1) {
                        l ^= best.K[b];
                    }
                }
                cand.push_back(l);
            }
            bool iso = true;
            for (uint64_t a : cand) {
                for (uint64_t b : cand) {
                    iso &= cs.form(a, b) == 0;
                }
            }
            if (iso) {
                L = cand;
                found = true;
            }
        }
    } else if (p == 0) {
        found = true;
    }
    if (!found) {
        size_t budget = 2000000;
        L = rad;
        if (!extend_isotropic(cs, L, best.K, p, r, budget)) {
            throw std::logic_error("reduce_cle: no isotropic complement found");
        }
    }

    // Dual basis l_c with phi(l_c) = e_c.
    std::vector<uint64_t> img;
    for (uint64_t v : L) {
        img.push_back(phi_of(v));
    }
    auto img_inv = invert64(transpose64(img, k, k), k);
    if (!img_inv) {
        throw std::logic_error("reduce_cle: frame does not separate the local stabilizers");
    }
    std::vector<uint64_t> l(k, 0);
    for (size_t c = 0; c < k; c++) {
        // Columns of transpose(img) are the images; solve img^T a = e_c.
        uint64_t a = 0;
        for (size_t t = 0; t < k; t++) {
            if (((*img_inv)[t] >> c) & 1) {
                a |= uint64_t{1} << t;
            }
        }
        for (size_t t = 0; t < k; t++) {
            if ((a >> t) & 1) {
                l[c] ^= L[t];
            }
        }
        if (phi_of(l[c]) != (uint64_t{1} << c)) {
            throw std::logic_error("reduce_cle: dual basis construction failed");
        }
    }

    // Extras in column echelon form against the first k rows.
    std::vector<uint64_t> K = best.K;
    std::vector<size_t> pivots;
    size_t col = 0;
    for (size_t c = 0; c < k && col < p; c++) {
        size_t j = col;
        while (j < p && !cs.form(l[c], K[j])) {
            j++;
        }
        if (j == p) {
            continue;
        }
        std::swap(K[j], K[col]);
        for (size_t j2 = 0; j2 < p; j2++) {
            if (j2 != col && cs.form(l[c], K[j2])) {
                K[j2] ^= K[col];
            }
        }
        pivots.push_back(c);
        col++;
    }
    if (pivots.size() != p) {
        throw std::logic_error("reduce_cle: extras do not pair with the local rows");
    }
    bool strict = true;
    for (size_t c = 0; c < k; c++) {
        if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) {
            continue;
        }
        for (size_t j = 0; j < p; j++) {
            strict &= !cs.form(l[c], K[j]);
        }
    }

    // Target rows as combinations of current rows.
    std::vector<Key> target(n, Key{0, 0});
    auto combo_key = [&](uint64_t combo) {
        Key kk{0, 0};
        for (size_t i = 0; i < r; i++) {
            if ((combo >> i) & 1) {
                key_flip(kk, i);
            }
        }
        return kk;
    };
    for (size_t c = 0; c < k; c++) {
        target[c] = combo_key(l[c]);
    }
    for (size_t j = 0; j < p; j++) {
        target[k + j] = combo_key(K[j]);
    }
    for (size_t m = r; m < n; m++) {
        target[m] = key_unit(m);
    }
    // Make each radical element a product of rows that is trivial outside A.
    std::vector<uint64_t> rad_img;
    for (uint64_t v : rad) {
        rad_img.push_back(phi_of(v));
    }
    for (uint64_t ri : rref64(rad_img, k)) {
        size_t cstar = (size_t)std::countr_zero(ri);
        uint64_t combo = 0;
        for (size_t c = 0; c < k; c++) {
            if ((ri >> c) & 1) {
                combo ^= l[c];
            }
        }
        PauliString x(n);
        for (size_t i = 0; i < r; i++) {
            if ((combo >> i) & 1) {
                x *= st.tab.G[i];
            }
        }
        for (size_t q : A) {
            x.set(q, 'I');
        }
        for (size_t m = 0; m < n; m++) {
            if (!commutes(x, st.tab.D[m])) {
                if (m < r) {
                    throw std::logic_error("reduce_cle: radical element leaks into region rows");
                }
                key_flip(target[cstar], m);
            }
        }
    }

    // Realize G' = M G: reduce M to the identity and replay the row operations backwards.
    struct Op {
        bool is_swap;
        size_t i, j;
    };
    std::vector<Op> ops;
    std::vector<Key> M = target;
    for (size_t c = 0; c < n; c++) {
        size_t piv = c;
        while (piv < n && !key_bit(M[piv], c)) {
            piv++;
        }
        if (piv == n) {
            throw std::logic_error("reduce_cle: target rows are dependent");
        }
        if (piv != c) {
            std::swap(M[piv], M[c]);
            ops.push_back({true, piv, c});
        }
        for (size_t j = 0; j < n; j++) {
            if (j != c && key_bit(M[j], c)) {
                M[j] = key_xor(M[j], M[c]);
                ops.push_back({false, j, c});
            }
        }
    }
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (it->is_swap) {
            move_swap(st, it->i, it->j);
        } else {
            move_gg(st, it->i, it->j);
        }
    }

    // Destabilizer targets: P_c on the region, the rest solved on the complement.
    std::vector<PauliString> Dt(n);
    const char names[3] = {'X', 'Z', 'Y'};
    for (size_t c = 0; c < k; c++) {
        uint64_t v = best.pvec[c] >> (2 * c);
        Dt[c] = PauliString::single(n, A[c], names[v == 1 ? 0 : v == 2 ? 1 : 2]);
    }
    std::vector<size_t> Bq;
    for (size_t q = 0; q < n; q++) {
        if (std::find(A.begin(), A.end(), q) == A.end()) {
            Bq.push_back(q);
        }
    }
    size_t nb = Bq.size();
    size_t words = (2 * nb + 63) / 64 + 1;
    auto constraint = [&](const PauliString &o) {
        Bits row(words, 0);
        for (size_t t = 0; t < nb; t++) {
            if (o.z(Bq[t])) {
                bits_flip(row, 2 * t);
            }
            if (o.x(Bq[t])) {
                bits_flip(row, 2 * t + 1);
            }
        }
        return row;
    };
    std::vector<Bits> grows;
    for (size_t m = 0; m < n; m++) {
        grows.push_back(constraint(st.tab.G[m]));
    }
    std::vector<Bits> dsol(n);
    for (size_t li = k; li < n; li++) {
        std::vector<uint8_t> rhs(n, 0);
        rhs[li] = 1;
        auto sol = solve_gf2(grows, rhs, 2 * nb);
        if (!sol) {
            throw std::logic_error("reduce_cle: no destabilizer outside the region");
        }
        dsol[li] = *sol;
    }
    // Rows past k+p live entirely outside A, so adding one to a destabilizer only changes
    // its commutation with that row's own destabilizer.
    auto pairing = [&](const Bits &a, const Bits &b) {
        int s = 0;
        for (size_t t = 0; t < nb; t++) {
            s ^= (bits_get(a, 2 * t) & bits_get(b, 2 * t + 1)) ^ (bits_get(a, 2 * t + 1) & bits_get(b, 2 * t));
        }
        return s;
    };
    auto as_vector = [&](const PauliString &o) {
        Bits v(words, 0);
        for (size_t t = 0; t < nb; t++) {
            if (o.x(Bq[t])) {
                bits_flip(v, 2 * t);
            }
            if (o.z(Bq[t])) {
                bits_flip(v, 2 * t + 1);
            }
        }
        return v;
    };
    for (size_t l1 = k; l1 < n; l1++) {
        for (size_t l2 = l1 + 1; l2 < n; l2++) {
            if (!pairing(dsol[l1], dsol[l2])) {
                continue;
            }
            if (l2 >= r) {
                bits_xor(dsol[l1], as_vector(st.tab.G[l2]));
            } else {
                throw std::logic_error("reduce_cle: ancilla destabilizers cannot be made to commute");
            }
        }
    }
    for (size_t li = k; li < n; li++) {
        PauliString d(n);
        for (size_t t = 0; t < nb; t++) {
            d.set_x(Bq[t], bits_get(dsol[li], 2 * t));
            d.set_z(Bq[t], bits_get(dsol[li], 2 * t + 1));
        }
        Dt[li] = d;
    }
    std::vector<std::vector<uint8_t>> S(n, std::vector<uint8_t>(n, 0));
    for (size_t i = 0; i < n; i++) {
        PauliString x = multiply(Dt[i], st.tab.D[i]);
        for (size_t m = 0; m < n; m++) {
            S[i][m] = !commutes(x, st.tab.D[m]);
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t m = i + 1; m < n; m++) {
            if (S[i][m] != S[m][i]) {
                throw std::logic_error("reduce_cle: destabilizer update is not symmetric");
            }
            if (S[i][m]) {
                move_dg2(st, i, m);
            }
        }
    }
    for (size_t i = 0; i < n; i++) {
        if (S[i][i]) {
            move_dg1(st, i);
        }
    }
    for (size_t i = 0; i < n; i++) {
        if (!st.tab.D[i].same_up_to_phase(Dt[i])) {
            throw std::logic_error("reduce_cle: destabilizer realization failed");
        }
        if (st.tab.D[i].log_i != Dt[i].log_i) {
            flip_destabilizer_sign(st, i);
        }
    }

    CleForm cle;
    cle.A = A;
    cle.k = k;
    cle.p = p;
    cle.pivots = pivots;
    cle.strict = strict;
    return cle;
}

std::string cle_violation(const RankedState &st, const CleForm &cle) {
    std::string tv = st.tab.invariant_violation();
    if (!tv.empty()) {
        return tv;
    }
    const auto &A = cle.A;
    size_t n = st.n(), k = cle.k, p = cle.p;
    if (k != A.size() || cle.pivots.size() != p || k + p > n) {
        return "CLE sizes are inconsistent";
    }
    for (size_t c = 0; c < k; c++) {
        const auto &d = st.tab.D[c];
        if (d.weight() != 1 || !(d.x(A[c]) || d.z(A[c]))) {
            return "D" + std::to_string(c) + " is not a single-qubit Pauli on its region qubit";
        }
    }
    for (size_t l = k; l < n; l++) {
        if (has_support_on(st.tab.D[l], A)) {
            return "D" + std::to_string(l) + " has support on the region";
        }
    }
    for (size_t i = 0; i < n; i++) {
        bool has = has_support_on(st.tab.G[i], A);
        if (has != (i < k + p)) {
            return "G" + std::to_string(i) + (has ? " should not touch" : " should touch") + " the region";
        }
    }
    std::vector<uint64_t> w(k + p);
    for (size_t i = 0; i < k + p; i++) {
        w[i] = region_part(st.tab.G[i], A);
    }
    for (size_t a = 0; a < k; a++) {
        for (size_t b = 0; b < a; b++) {
            if (symp64(w[a], w[b])) {
                return "punctured G" + std::to_string(a) + " and G" + std::to_string(b) + " anticommute";
            }
        }
    }
    for (size_t j = 0; j < p; j++) {
        std::vector<size_t> hits;
        for (size_t c = 0; c < k; c++) {
            if (symp64(w[c], w[k + j])) {
                hits.push_back(c);
            }
        }
        if (hits.empty() || hits[0] != cle.pivots[j]) {
            return "extra row " + std::to_string(k + j) + " does not pair with its pivot";
        }
        if (cle.strict && hits.size() != 1) {
            return "extra row " + std::to_string(k + j) + " anticommutes with more than one local row";
        }
        if (j > 0 && cle.pivots[j] <= cle.pivots[j - 1]) {
            return "pivots are not strictly increasing";
        }
    }
    return "";
}

LocalState build_local(const RankedState &st, const CleForm &cle, bool with_density) {
    std::string v = cle_violation(st, cle);
    if (!v.empty()) {
        throw std::invalid_argument("build_local: not in CLE form: " + v);
    }
    const auto &A = cle.A;
    size_t n = st.n(), k = cle.k, p = cle.p;
    auto clear_region = [&](PauliString o) {
        for (size_t q : A) {
            o.set(q, 'I');
        }
        o.log_i = 0;
        return o;
    };
    // Ancilla j: Z-bar maps to D_{k+j}, X-bar to the extra's outside part made to commute.
    std::vector<PauliString> zbar, xbar;
    std::vector<uint64_t> w(k + p);
    for (size_t i = 0; i < k + p; i++) {
        w[i] = region_part(st.tab.G[i], A);
    }
    for (size_t j = 0; j < p; j++) {
        zbar.push_back(st.tab.D[k + j]);
        PauliString x = clear_region(st.tab.G[k + j]);
        for (size_t j2 = 0; j2 < j; j2++) {
            if (symp64(w[k + j], w[k + j2])) {
                x *= st.tab.D[k + j2];
            }
        }
        xbar.push_back(x);
    }
    auto localize = [&](const PauliString &o) {
        PauliString r(k + p);
        for (size_t c = 0; c < k; c++) {
            r.set_x(c, o.x(A[c]));
            r.set_z(c, o.z(A[c]));
        }
        PauliString outside = clear_region(o);
        for (size_t j = 0; j < p; j++) {
            r.set_x(k + j, !commutes(outside, zbar[j]));
            r.set_z(k + j, !commutes(outside, xbar[j]));
        }
        r.log_i = o.log_i;
        return r;
    };
    LocalState ls;
    ls.k = k;
    ls.p = p;
    ls.local_tableau.n = k + p;
    for (size_t i = 0; i < k + p; i++) {
        ls.local_tableau.G.push_back(localize(st.tab.G[i]));
        ls.local_tableau.D.push_back(localize(st.tab.D[i]));
    }
    if (!with_density) {
        return ls;
    }
    size_t nl = k + p;
    if (nl > 8) {
        throw std::invalid_argument("build_local: density operator limited to 8 local qubits");
    }
    size_t dim = size_t{1} << nl;
    ls.rho = Matrix::Zero(dim, dim);
    CoeffMap map = to_map(st.terms);
    for (size_t pat = 0; pat < dim * dim; pat++) {
        PauliString q(nl);
        for (size_t a = 0; a < nl; a++) {
            q.set_x(a, (pat >> a) & 1);
            q.set_z(a, (pat >> (a + nl)) & 1);
        }
        PauliString g(n);
        for (size_t c = 0; c < k; c++) {
            g.set_x(A[c], q.x(c));
            g.set_z(A[c], q.z(c));
        }
        for (size_t j = 0; j < p; j++) {
            bool x = q.x(k + j), z = q.z(k + j);
            if (x) {
                g *= xbar[j];
            }
            if (z) {
                g *= zbar[j];
            }
            if (x && z) {
                g.log_i = (g.log_i + 1) & 3;
            }
        }
        Amp e = expectation_with(map, st.terms, decompose(st.tab, g));
        if (std::abs(e) < 1e-15) {
            continue;
        }
        ls.rho += (e / (double)dim) * pauli_matrix(q);
    }
    return ls;
}

// ---- channels ---------------------------------------------------------------

std::vector<std::pair<PauliString, Amp>> pauli_expand(const Matrix &m, double tol) {
    size_t dim = m.rows();
    size_t k = (size_t)std::countr_zero(dim);
    if ((size_t{1} << k) != dim || (size_t)m.cols() != dim) {
        throw std::invalid_argument("pauli_expand needs a 2^k square matrix");
    }
    std::vector<std::pair<PauliString, Amp>> out;
    for (size_t pat = 0; pat < dim * dim; pat++) {
        uint64_t xm = pat & (dim - 1), zm = pat >> k;
        int ny = std::popcount(xm & zm);
        // Tr(Q^dagger m) with Q(y ^ x, y) = i^ny (-1)^{z.y}.
        Amp acc{0, 0};
        for (size_t y = 0; y < dim; y++) {
            Amp qv = i_pow(ny);
            if (std::popcount(zm & y) & 1) {
                qv = -qv;
            }
            acc += std::conj(qv) * m(y ^ xm, y);
        }
        acc /= (double)dim;
        if (std::abs(acc) > tol) {
            PauliString q(k);
            for (size_t a = 0; a < k; a++) {
                q.set_x(a, (xm >> a) & 1);
                q.set_z(a, (zm >> a) & 1);
            }
            out.emplace_back(q, acc);
        }
    }
    return out;
}

KrausChannel KrausChannel::from(std::vector<Matrix> kraus, double tol) {
    if (kraus.empty()) {
        throw std::invalid_argument("empty Kraus set");
    }
    size_t dim = kraus[0].rows();
    Matrix sum = Matrix::Zero(dim, dim);
    for (const auto &m : kraus) {
        if ((size_t)m.rows() != dim || (size_t)m.cols() != dim) {
            throw std::invalid_argument("Kraus operators differ in size");
        }
        sum += m.adjoint() * m;
    }
    if ((sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("Kraus operators are not complete");
    }
    KrausChannel ch;
    ch.k = (size_t)std::countr_zero(dim);
    for (const auto &m : kraus) {
        ch.expansions.push_back(pauli_expand(m));
    }
    ch.kraus = std::move(kraus);
    return ch;
}

KrausChannel KrausChannel::unitary(const Matrix &u, double tol) {
    return from({u}, tol);
}

namespace {

std::vector<std::vector<Term>> branch_terms_direct(const RankedState &st, const std::vector<size_t> &A,
                                                   const KrausChannel &ch) {
    RegionDecomposer rd(st.tab, A);
    std::vector<std::vector<Term>> out;
    for (const auto &ex : ch.expansions) {
        out.push_back(act(st.terms, decompose_expansion(rd, ex)));
    }
    return out;
}

// Same update through the CLE local coordinates: only the first k+p syndrome bits change.
std::vector<std::vector<Term>> branch_terms_local(RankedState &st, const std::vector<size_t> &A,
                                                  const KrausChannel &ch) {
    CleForm cle = reduce_cle(st, A);
    size_t r = cle.k + cle.p;
    Key low{0, 0};
    for (size_t i = 0; i < r; i++) {
        key_flip(low, i);
    }
    auto inside = [&](const Key &x) { return (x[0] & ~low[0]) == 0 && (x[1] & ~low[1]) == 0; };
    std::unordered_map<Key, std::vector<std::pair<size_t, Amp>>, KeyHash> groups;
    for (const auto &t : st.terms) {
        Key rest{t.key[0] & ~low[0], t.key[1] & ~low[1]};
        groups[rest].push_back({(size_t)(t.key[0] & low[0]), t.c});
    }
    RegionDecomposer rd(st.tab, A);
    std::vector<std::vector<Term>> out;
    for (const auto &ex : ch.expansions) {
        auto ops = decompose_expansion(rd, ex);
        for (const auto &op : ops) {
            if (!inside(op.d.delta) || !inside(op.d.u)) {
                throw std::logic_error("local channel reaches outside the CLE rows");
            }
        }
        std::vector<Term> terms;
        for (const auto &[rest, vec] : groups) {
            std::unordered_map<size_t, Amp> loc;
            for (const auto &[s, c] : vec) {
                for (const auto &op : ops) {
                    Amp f = op.a * i_pow(op.d.w);
                    if (std::popcount(op.d.u[0] & s) & 1) {
                        f = -f;
                    }
                    loc[s ^ op.d.delta[0]] += f * c;
                }
            }
            for (const auto &[s, c] : loc) {
                if (std::norm(c) > kZero2) {
                    terms.push_back({Key{rest[0] | s, rest[1]}, c});
                }
            }
        }
        std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.key < b.key; });
        out.push_back(std::move(terms));
    }
    return out;
}

void check_channel(const RankedState &st, const std::vector<size_t> &A, const KrausChannel &ch,
                   const ChannelOptions &opt) {
    validate_region(st, A);
    if (A.size() > opt.k_max) {
        throw std::invalid_argument("channel acts on more than k_max qubits");
    }
    if (ch.k != A.size()) {
        throw std::invalid_argument("channel arity does not match region size");
    }
    if (opt.method == ChannelMethod::local && A.size() > 6) {
        throw std::invalid_argument("local channel method supports at most 6 qubits");
    }
}

void finish_channel(RankedState &st, std::vector<Term> terms, double w, const std::vector<size_t> &A,
                    const ChannelOptions &opt) {
    if (w <= 0) {
        throw std::domain_error("selected Kraus branch has zero weight");
    }
    scale(terms, 1 / std::sqrt(w));
    st.terms = std::move(terms);
    note_m(st);
    if (opt.select_basis) {
        select_basis(st, A);
    }
    if (opt.trim) {
        trim(st);
    }
    note_m(st);
}

}  // namespace

size_t apply_channel(RankedState &st, const std::vector<size_t> &A, const KrausChannel &ch, double u,
                     const ChannelOptions &opt) {
    check_channel(st, A, ch, opt);
    auto branches = opt.method == ChannelMethod::direct ? branch_terms_direct(st, A, ch) : branch_terms_local(st, A, ch);
    std::vector<double> w;
    for (const auto &b : branches) {
        w.push_back(weight(b));
    }
    size_t b = pick_branch(w, u);
    finish_channel(st, std::move(branches[b]), w[b], A, opt);
    return b;
}

size_t apply_channel(RankedState &st, const std::vector<size_t> &A, const std::vector<Matrix> &kraus, double u,
                     const ChannelOptions &opt) {
    return apply_channel(st, A, KrausChannel::from(kraus), u, opt);
}

double apply_channel_branch(RankedState &st, const std::vector<size_t> &A, const KrausChannel &ch, size_t branch,
                            const ChannelOptions &opt) {
    check_channel(st, A, ch, opt);
    if (branch >= ch.kraus.size()) {
        throw std::invalid_argument("branch index out of range");
    }
    auto branches = opt.method == ChannelMethod::direct ? branch_terms_direct(st, A, ch) : branch_terms_local(st, A, ch);
    double w = weight(branches[branch]);
    finish_channel(st, std::move(branches[branch]), w, A, opt);
    return w;
}

// ---- measurement and reset --------------------------------------------------

int measure(RankedState &st, const PauliString &p, double u) {
    if (p.n != st.n()) {
        throw std::invalid_argument("measure: size mismatch");
    }
    if (!p.is_hermitian() || p.is_identity()) {
        throw std::invalid_argument("measure needs a non-identity Hermitian Pauli");
    }
    size_t n = st.n();
    std::vector<size_t> anti;
    for (size_t i = 0; i < n; i++) {
        if (!commutes(p, st.tab.G[i])) {
            anti.push_back(i);
        }
    }
    if (anti.empty()) {
        Decomp d = decompose(st.tab, p);
        double sign = d.w == 0 ? 1.0 : -1.0;
        double w0 = 0, w1 = 0;
        for (const auto &t : st.terms) {
            double ev = key_dot(d.u, t.key) ? -sign : sign;
            (ev > 0 ? w0 : w1) += std::norm(t.c);
        }
        int b = (int)pick_branch({w0, w1}, u);
        std::vector<Term> kept;
        for (const auto &t : st.terms) {
            double ev = key_dot(d.u, t.key) ? -sign : sign;
            if ((ev > 0) == (b == 0)) {
                kept.push_back(t);
            }
        }
        scale(kept, 1 / std::sqrt(b ? w1 : w0));
        st.terms = std::move(kept);
        return b;
    }
    size_t piv = anti[0];
    for (size_t a = 1; a < anti.size(); a++) {
        move_gg(st, anti[a], piv);
    }
    for (size_t j = 0; j < n; j++) {
        if (j != piv && !commutes(p, st.tab.D[j])) {
            move_dg2(st, piv, j);
        }
    }
    if (!commutes(p, st.tab.D[piv])) {
        move_dg1(st, piv);
    }
    if (!st.tab.D[piv].same_up_to_phase(p)) {
        throw std::logic_error("measure: destabilizer alignment failed");
    }
    double omega = ((st.tab.D[piv].log_i - p.log_i) & 3) == 0 ? 1.0 : -1.0;
    CoeffMap pairs;
    for (const auto &t : st.terms) {
        Key s0 = t.key;
        if (key_bit(s0, piv)) {
            key_flip(s0, piv);
        }
        pairs.try_emplace(s0, Amp{0, 0});
    }
    CoeffMap map = to_map(st.terms);
    auto coeff = [&](const Key &x) {
        auto it = map.find(x);
        return it == map.end() ? Amp{0, 0} : it->second;
    };
    std::vector<Term> plus, minus;
    double wp = 0, wm = 0;
    for (const auto &[s0, unused] : pairs) {
        Key s1 = s0;
        key_flip(s1, piv);
        Amp c0 = coeff(s0), c1 = coeff(s1);
        Amp ap = (c0 + omega * c1) / std::sqrt(2.0);
        Amp am = (c0 - omega * c1) / std::sqrt(2.0);
        if (std::norm(ap) > kZero2) {
            plus.push_back({s0, ap});
            wp += std::norm(ap);
        }
        if (std::norm(am) > kZero2) {
            minus.push_back({s0, am});
            wm += std::norm(am);
        }
    }
    int b = (int)pick_branch({wp, wm}, u);
    auto &kept = b ? minus : plus;
    scale(kept, 1 / std::sqrt(b ? wm : wp));
    std::sort(kept.begin(), kept.end(), [](const Term &x, const Term &y) { return x.key < y.key; });
    st.terms = std::move(kept);
    PauliString old_g = st.tab.G[piv];
    st.tab.G[piv] = p;
    if (b) {
        st.tab.G[piv].log_i ^= 2;
    }
    st.tab.D[piv] = old_g;
    return b;
}

int measure_destructive(RankedState &st, size_t q, char basis, double u) {
    require_index(st, q);
    if (st.n() == 1) {
        throw std::invalid_argument("cannot remove the last qubit of a ranked state");
    }
    if (basis == 'X') {
        apply_clifford(st, CliffordMap::named("H"), {q});
    } else if (basis != 'Z') {
        throw std::invalid_argument("measure_destructive basis must be Z or X");
    }
    size_t n = st.n();
    PauliString zq = PauliString::single(n, q, 'Z');
    int b = measure(st, zq, u);
    Decomp d = decompose(st.tab, zq);
    size_t piv = n;
    for (size_t i = 0; i < n; i++) {
        if (key_bit(d.u, i)) {
            if (piv == n) {
                piv = i;
            } else {
                move_gg(st, piv, i);
            }
        }
    }
    if (!st.terms.empty() && key_bit(st.terms[0].key, piv)) {
        st.tab.G[piv].log_i ^= 2;
        for (auto &t : st.terms) {
            key_flip(t.key, piv);
        }
    }
    for (size_t j = 0; j < n; j++) {
        if (j != piv && st.tab.G[j].z(q)) {
            move_gg(st, j, piv);
        }
    }
    for (size_t j = 0; j < n; j++) {
        if (j != piv && st.tab.D[j].z(q)) {
            move_dg2(st, j, piv);
        }
    }
    st.tab.G.erase(st.tab.G.begin() + piv);
    st.tab.D.erase(st.tab.D.begin() + piv);
    st.tab.n -= 1;
    for (size_t i = 0; i < st.tab.n; i++) {
        erase_qubit(st.tab.G[i], q);
        erase_qubit(st.tab.D[i], q);
    }
    for (auto &t : st.terms) {
        t.key = key_erase_bit(t.key, piv);
    }
    return b;
}

void creative_reset(RankedState &st, char basis) {
    if (basis != 'Z' && basis != 'X') {
        throw std::invalid_argument("creative_reset basis must be Z or X");
    }
    if (st.n() + 1 > kMaxRankedQubits) {
        throw std::length_error("ranked state exceeds 128 qubits");
    }
    size_t n = st.n();
    for (size_t i = 0; i < n; i++) {
        append_qubit(st.tab.G[i]);
        append_qubit(st.tab.D[i]);
    }
    st.tab.n = n + 1;
    st.tab.G.push_back(PauliString::single(n + 1, n, basis == 'Z' ? 'Z' : 'X'));
    st.tab.D.push_back(PauliString::single(n + 1, n, basis == 'Z' ? 'X' : 'Z'));
}

void trim(RankedState &st) {
    double before = weight(st.terms);
    std::vector<Term> kept;
    kept.reserve(st.terms.size());
    double eps2 = st.eps * st.eps * before;
    for (const auto &t : st.terms) {
        if (std::norm(t.c) >= eps2 && std::norm(t.c) > kZero2) {
            kept.push_back(t);
        }
    }
    if (kept.size() > st.m_max) {
        std::nth_element(kept.begin(), kept.begin() + st.m_max, kept.end(),
                         [](const Term &a, const Term &b) { return std::norm(a.c) > std::norm(b.c); });
        kept.resize(st.m_max);
        std::sort(kept.begin(), kept.end(), [](const Term &a, const Term &b) { return a.key < b.key; });
    }
    double after = weight(kept);
    if (kept.empty() || after <= 0) {
        throw std::runtime_error("trim removed every coefficient; state cannot be normalized");
    }
    if (kept.size() != st.terms.size()) {
        st.discarded_weight += (before - after) / before;
        st.terms = std::move(kept);
    }
    scale(st.terms, 1 / std::sqrt(after));
}

std::vector<Amp> to_dense(const RankedState &st, size_t max_qubits) {
    size_t n = st.n();
    if (n > max_qubits) {
        throw std::length_error("to_dense: too many qubits");
    }
    std::vector<size_t> labels(n);
    for (size_t q = 0; q < n; q++) {
        labels[q] = q;
    }
    DenseState base = DenseState::zero(labels, std::max<size_t>(n, 1));
    KeyedRng rng(0x5eed, n);
    for (auto &a : base.amps) {
        a = std::polar(0.5 + rng.uniform(), 6.283185307179586 * rng.uniform());
    }
    for (size_t i = 0; i < n; i++) {
        DenseState g = base;
        apply_pauli(g, st.tab.G[i]);
        for (size_t y = 0; y < base.amps.size(); y++) {
            base.amps[y] = (base.amps[y] + g.amps[y]) * 0.5;
        }
    }
    double nb = std::sqrt(base.norm2());
    for (auto &a : base.amps) {
        a /= nb;
    }
    std::vector<Amp> out(base.amps.size(), Amp{0, 0});
    for (const auto &t : st.terms) {
        DenseState v = base;
        for (size_t i = 0; i < n; i++) {
            if (key_bit(t.key, i)) {
                apply_pauli(v, st.tab.D[i]);
            }
        }
        for (size_t y = 0; y < out.size(); y++) {
            out[y] += t.c * v.amps[y];
        }
    }
    return out;
}

Amp expectation(const RankedState &st, const PauliString &p) {
    if (p.n != st.n()) {
        throw std::invalid_argument("expectation: size mismatch");
    }
    return expectation_with(to_map(st.terms), st.terms, decompose(st.tab, p));
}

}  // namespace cultsim
