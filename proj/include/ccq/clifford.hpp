#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "ccq/bitmatrix.hpp"

namespace ccq {

// Pauli on m <= 64 qubits as (x|z) masks with a tracked +-1 sign.
struct PauliVec {
    std::size_t m = 0;
    uint64_t x = 0, z = 0;
    int sign = +1;   // +1 or -1

    static PauliVec identity(std::size_t m) { return {m, 0, 0, +1}; }
    static PauliVec single_x(std::size_t m, std::size_t q) { return {m, uint64_t(1) << q, 0, +1}; }
    static PauliVec single_z(std::size_t m, std::size_t q) { return {m, 0, uint64_t(1) << q, +1}; }

    bool commutes_with(const PauliVec& o) const {
        return (std::popcount(x & o.z) + std::popcount(z & o.x)) % 2 == 0;
    }
};

enum class GateKind { CNOT, S, Sdg, H, Hall, SWAP, CZ, X, Z };

struct Gate {
    GateKind kind;
    std::size_t i = 0, j = 0;
};

using GateWord = std::vector<Gate>;   // circuit order: front() acts first

// Phase-free symplectic action on column vectors (x|z) over F2, with the
// form Omega = [[0,I],[I,0]].
struct SymplecticOp {
    std::size_t m = 0;
    BitMatrix mat;   // 2m x 2m

    static SymplecticOp identity(std::size_t m) { return {m, BitMatrix::identity(2 * m)}; }

    bool is_symplectic() const {
        BitMatrix omega(2 * m, 2 * m);
        for (std::size_t i = 0; i < m; ++i) {
            omega.set(i, m + i, true);
            omega.set(m + i, i, true);
        }
        return mat.transpose().multiply(omega).multiply(mat) == omega;
    }

    // composition as operators: (*this) after o
    SymplecticOp then_after(const SymplecticOp& o) const {
        return {m, mat.multiply(o.mat)};
    }

    bool operator==(const SymplecticOp& o) const { return m == o.m && mat == o.mat; }

    // action on a Pauli's (x|z) bits, phase-free
    PauliVec apply(const PauliVec& p) const {
        BitVec v(2 * m);
        for (std::size_t q = 0; q < m; ++q) {
            if ((p.x >> q) & 1) v.set(q, true);
            if ((p.z >> q) & 1) v.set(m + q, true);
        }
        BitVec w = mat.apply_right(v);
        PauliVec out{p.m, 0, 0, +1};
        for (std::size_t q = 0; q < m; ++q) {
            if (w.get(q)) out.x |= uint64_t(1) << q;
            if (w.get(m + q)) out.z |= uint64_t(1) << q;
        }
        return out;
    }
};

// Lambda(C) = [[I,0],[C,I]] for symmetric C (z += C x).
inline SymplecticOp lambda_of(const BitMatrix& c) {
    std::size_t m = c.rows();
    if (c.cols() != m) throw std::invalid_argument("lambda_of: square matrix required");
    if (!(c == c.transpose())) throw std::invalid_argument("lambda_of: C must be symmetric");
    SymplecticOp s{m, BitMatrix::identity(2 * m)};
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t cc = 0; cc < m; ++cc)
            if (c.get(r, cc)) s.mat.set(m + r, cc, true);
    return s;
}

// L(A) = [[A,0],[0,(A^-1)^T]] for invertible A (the CNOT-generated subgroup).
inline BitMatrix invert_gl(const BitMatrix& a) {
    std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("invert_gl: square matrix required");
    BitMatrix work = BitMatrix::hstack(a, BitMatrix::identity(n));
    std::vector<std::size_t> piv;
    BitMatrix r = work.rref(&piv);
    for (std::size_t i = 0; i < piv.size(); ++i)
        if (piv[i] != i) throw std::invalid_argument("invert_gl: singular matrix");
    if (piv.size() != n) throw std::invalid_argument("invert_gl: singular matrix");
    BitMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, r.get(i, n + j));
    return inv;
}

inline SymplecticOp l_of(const BitMatrix& a) {
    std::size_t m = a.rows();
    BitMatrix ainv_t = invert_gl(a).transpose();
    SymplecticOp s{m, BitMatrix(2 * m, 2 * m)};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (a.get(i, j)) s.mat.set(i, j, true);
            if (ainv_t.get(i, j)) s.mat.set(m + i, m + j, true);
        }
    return s;
}

inline SymplecticOp gate_symplectic(const Gate& g, std::size_t m) {
    auto check = [&](std::size_t q) {
        if (q >= m) throw std::out_of_range("gate index out of range");
    };
    SymplecticOp s = SymplecticOp::identity(m);
    switch (g.kind) {
        case GateKind::CNOT: {   // i -> j: X_i -> X_i X_j, Z_j -> Z_i Z_j
            check(g.i); check(g.j);
            if (g.i == g.j) throw std::out_of_range("CNOT needs distinct qubits");
            s.mat.set(g.j, g.i, true);
            s.mat.set(m + g.i, m + g.j, true);
            break;
        }
        case GateKind::S:
        case GateKind::Sdg: {    // same symplectic action; signs differ
            check(g.i);
            s.mat.set(m + g.i, g.i, true);
            break;
        }
        case GateKind::H: {
            check(g.i);
            s.mat.set(g.i, g.i, false);
            s.mat.set(m + g.i, m + g.i, false);
            s.mat.set(g.i, m + g.i, true);
            s.mat.set(m + g.i, g.i, true);
            break;
        }
        case GateKind::Hall: {   // J = [[0,I],[I,0]]
            s.mat = BitMatrix(2 * m, 2 * m);
            for (std::size_t q = 0; q < m; ++q) {
                s.mat.set(q, m + q, true);
                s.mat.set(m + q, q, true);
            }
            break;
        }
        case GateKind::SWAP: {
            check(g.i); check(g.j);
            s.mat.set(g.i, g.i, false); s.mat.set(g.j, g.j, false);
            s.mat.set(m + g.i, m + g.i, false); s.mat.set(m + g.j, m + g.j, false);
            s.mat.set(g.i, g.j, true); s.mat.set(g.j, g.i, true);
            s.mat.set(m + g.i, m + g.j, true); s.mat.set(m + g.j, m + g.i, true);
            break;
        }
        case GateKind::CZ: {
            check(g.i); check(g.j);
            if (g.i == g.j) throw std::out_of_range("CZ needs distinct qubits");
            s.mat.set(m + g.i, g.j, true);
            s.mat.set(m + g.j, g.i, true);
            break;
        }
        case GateKind::X:
        case GateKind::Z:
            check(g.i);   // Paulis act trivially at the symplectic level
            break;
    }
    return s;
}

// Symplectic action of a circuit-ordered word (front gate first).
inline SymplecticOp word_symplectic(const GateWord& w, std::size_t m) {
    SymplecticOp s = SymplecticOp::identity(m);
    for (const Gate& g : w) s = gate_symplectic(g, m).then_after(s);
    return s;
}

inline GateWord inverse_word(const GateWord& w) {
    GateWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::S) g.kind = GateKind::Sdg;
        else if (g.kind == GateKind::Sdg) g.kind = GateKind::S;
        // CNOT, H, Hall, SWAP, CZ, X, Z are involutions
        out.push_back(g);
    }
    return out;
}

// The paired-phase conjugation construction that assembles a bare S_1 from
// CNOTs and S_i S_j^dagger, for m >= 3. Returns the gate word; its symplectic
// action is asserted to be Lambda(E_{1,1}).
inline GateWord synthesize_s1(std::size_t m) {
    if (m < 3) throw std::invalid_argument("synthesize_s1: needs m >= 3");
    auto cnot = [](std::size_t i, std::size_t j) { return Gate{GateKind::CNOT, i, j}; };
    // CNOT realizations of the three invertible 3x3 matrices
    GateWord u1 = {cnot(0, 2), cnot(2, 0), cnot(0, 2)};
    GateWord u2 = {cnot(1, 2), cnot(2, 1), cnot(1, 0), cnot(0, 2)};
    GateWord u3 = {cnot(0, 1), cnot(1, 0), cnot(2, 0), cnot(0, 1)};

    // check C_1 + C_2 + C_3 = E_{1,1} on the lower-left blocks
    BitMatrix csum(m, m);
    GateWord word;
    for (const GateWord* u : {&u1, &u2, &u3}) {
        // G_k = U_k (S_1 S_2^dagger) U_k^{-1}: circuit order U^-1, phase, U
        GateWord g = inverse_word(*u);
        g.push_back({GateKind::S, 0, 0});
        g.push_back({GateKind::Sdg, 1, 0});
        g.insert(g.end(), u->begin(), u->end());
        SymplecticOp s = word_symplectic(g, m);
        // the conjugate of Lambda(D) by L(A) stays lower-triangular
        BitMatrix c(m, m);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t cc = 0; cc < m; ++cc) c.set(r, cc, s.mat.get(m + r, cc));
        if (!(lambda_of(c) == s)) throw std::logic_error("synthesize_s1: conjugate is not Lambda(C)");
        csum = csum + c;
        word.insert(word.end(), g.begin(), g.end());
    }
    BitMatrix e11(m, m);
    e11.set(0, 0, true);
    if (!(csum == e11)) throw std::logic_error("synthesize_s1: C1+C2+C3 != E_{1,1}");
    if (!(word_symplectic(word, m) == lambda_of(e11)))
        throw std::logic_error("synthesize_s1: word action != Lambda(E_{1,1})");
    return word;
}

// S_i via SWAP conjugation of the synthesized S_1.
inline GateWord synthesize_si(std::size_t m, std::size_t i) {
    GateWord w = synthesize_s1(m);
    if (i == 0) return w;
    GateWord out = {{GateKind::SWAP, 0, i}};
    out.insert(out.end(), w.begin(), w.end());
    out.push_back({GateKind::SWAP, 0, i});
    return out;
}

// H_i = S_i (H^m S_i H^m) S_i at the symplectic level.
inline GateWord synthesize_hi(std::size_t m, std::size_t i) {
    GateWord si = synthesize_si(m, i);
    GateWord out = si;
    out.push_back({GateKind::Hall, 0, 0});
    out.insert(out.end(), si.begin(), si.end());
    out.push_back({GateKind::Hall, 0, 0});
    out.insert(out.end(), si.begin(), si.end());
    SymplecticOp hi = gate_symplectic({GateKind::H, i, 0}, m);
    if (!(word_symplectic(out, m) == hi))
        throw std::logic_error("synthesize_hi: word action != H_i");
    return out;
}

inline uint64_t sp_order(std::size_t m) {
    uint64_t o = uint64_t(1) << (m * m);
    for (std::size_t i = 1; i <= m; ++i) o *= ((uint64_t(1) << (2 * i)) - 1);
    return o;
}

struct GenerationResult {
    uint64_t generated_order = 0;
    uint64_t group_order = 0;
    bool full = false;
    bool constructive = false;
};

// BFS closure of the generated subgroup of Sp(2m,2), with matrices packed
// into 64-bit keys (needs 2m <= 8). Memory budget in bytes.
inline GenerationResult generation_check_exhaustive(std::size_t m,
                                                    const std::vector<SymplecticOp>& gens,
                                                    std::size_t memory_budget = std::size_t(2) << 30) {
    if (2 * m > 8) throw std::invalid_argument("generation_check_exhaustive: needs m <= 4");
    const std::size_t n = 2 * m;
    auto pack = [&](const BitMatrix& mm) {
        uint64_t key = 0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (mm.get(r, c)) key |= uint64_t(1) << (r * n + c);
        return key;
    };
    const uint64_t rowmask = (uint64_t(1) << n) - 1;
    std::vector<uint64_t> packed_gens;
    for (const auto& g : gens) {
        if (g.m != m) throw std::invalid_argument("generator qubit count mismatch");
        if (!g.is_symplectic()) throw std::invalid_argument("generator is not symplectic");
        packed_gens.push_back(pack(g.mat));
    }
    auto mul = [&](uint64_t a, uint64_t b) {
        // c[r] = sum_k a[r][k] b[k]
        uint64_t c = 0;
        for (std::size_t r = 0; r < n; ++r) {
            uint64_t arow = (a >> (r * n)) & rowmask;
            uint64_t crow = 0;
            while (arow) {
                std::size_t k = std::countr_zero(arow);
                arow &= arow - 1;
                crow ^= (b >> (k * n)) & rowmask;
            }
            c |= crow << (r * n);
        }
        return c;
    };

    std::unordered_set<uint64_t> seen;
    seen.reserve(1u << 21);
    std::vector<uint64_t> frontier{pack(BitMatrix::identity(n))};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        if (seen.size() * 16 > memory_budget)
            throw std::runtime_error("generation_check: memory budget exceeded");
        std::vector<uint64_t> next;
        for (uint64_t e : frontier)
            for (uint64_t g : packed_gens) {
                uint64_t q = mul(g, e);
                if (seen.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    GenerationResult res;
    res.generated_order = seen.size();
    res.group_order = sp_order(m);
    res.full = res.generated_order == res.group_order;
    return res;
}

// Constructive certificate for larger m: the available set must contain all
// CNOTs plus elements whose products synthesize S_i and H_i; with those, the
// standard generating set of the Clifford group is reached.
inline GenerationResult generation_check_constructive(std::size_t m) {
    GenerationResult res;
    res.constructive = true;
    res.group_order = m <= 4 ? sp_order(m) : 0;
    for (std::size_t i = 0; i < m; ++i) {
        synthesize_si(m, i);   // throws on failure
        synthesize_hi(m, i);
    }
    res.full = true;
    return res;
}

// The generating set of the main theorem: all CNOTs, all paired phases, and
// the global Hadamard.
inline std::vector<SymplecticOp> theorem_generators(std::size_t m) {
    std::vector<SymplecticOp> gens;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) gens.push_back(gate_symplectic({GateKind::CNOT, i, j}, m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            BitMatrix d(m, m);
            d.set(i, i, true);
            d.set(j, j, true);
            gens.push_back(lambda_of(d));   // pi(S_i S_j^dagger)
        }
    gens.push_back(gate_symplectic({GateKind::Hall, 0, 0}, m));
    return gens;
}

}  // namespace ccq
