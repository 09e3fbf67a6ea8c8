#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ccq/clifford.hpp"
#include "ccq/rng.hpp"

namespace ccq {

// Sign-tracked stabilizer tableau (destabilizer/stabilizer rows) on up to 64
// qubits. Initial state |0...0>. Phases are +-1; row products accumulate
// i-powers internally and must come out even, which holds for the commuting
// products a tableau performs.
class StabTableau {
public:
    explicit StabTableau(std::size_t n) : n_(n), x_(2 * n, 0), z_(2 * n, 0), r_(2 * n, 0) {
        if (n > 64) throw std::invalid_argument("StabTableau: at most 64 qubits");
        for (std::size_t i = 0; i < n; ++i) {
            x_[i] = uint64_t(1) << i;          // destabilizer X_i
            z_[n + i] = uint64_t(1) << i;      // stabilizer Z_i
        }
    }

    std::size_t num_qubits() const { return n_; }

    void cnot(std::size_t a, std::size_t b) {
        check2_(a, b);
        for (std::size_t i = 0; i < 2 * n_; ++i) {
            bool xa = bit_(x_[i], a), zb = bit_(z_[i], b);
            bool xb = bit_(x_[i], b), za = bit_(z_[i], a);
            if (xa && zb && (xb == za)) r_[i] ^= 1;
            if (xa) x_[i] ^= uint64_t(1) << b;
            if (zb) z_[i] ^= uint64_t(1) << a;
        }
    }
    void h(std::size_t a) {
        check_(a);
        for (std::size_t i = 0; i < 2 * n_; ++i) {
            bool xa = bit_(x_[i], a), za = bit_(z_[i], a);
            if (xa && za) r_[i] ^= 1;
            if (xa != za) {
                x_[i] ^= uint64_t(1) << a;
                z_[i] ^= uint64_t(1) << a;
            }
        }
    }
    void s(std::size_t a) {
        check_(a);
        for (std::size_t i = 0; i < 2 * n_; ++i) {
            bool xa = bit_(x_[i], a), za = bit_(z_[i], a);
            if (xa && za) r_[i] ^= 1;
            if (xa) z_[i] ^= uint64_t(1) << a;
        }
    }
    void sdg(std::size_t a) { s(a); s(a); s(a); }
    void cz(std::size_t a, std::size_t b) { h(b); cnot(a, b); h(b); }
    void swap(std::size_t a, std::size_t b) { cnot(a, b); cnot(b, a); cnot(a, b); }
    void x(std::size_t a) {
        check_(a);
        for (std::size_t i = 0; i < 2 * n_; ++i)
            if (bit_(z_[i], a)) r_[i] ^= 1;
    }
    void z(std::size_t a) {
        check_(a);
        for (std::size_t i = 0; i < 2 * n_; ++i)
            if (bit_(x_[i], a)) r_[i] ^= 1;
    }

    void apply(const Gate& g) {
        switch (g.kind) {
            case GateKind::CNOT: cnot(g.i, g.j); break;
            case GateKind::S: s(g.i); break;
            case GateKind::Sdg: sdg(g.i); break;
            case GateKind::H: h(g.i); break;
            case GateKind::Hall:
                for (std::size_t q = 0; q < n_; ++q) h(q);
                break;
            case GateKind::SWAP: swap(g.i, g.j); break;
            case GateKind::CZ: cz(g.i, g.j); break;
            case GateKind::X: x(g.i); break;
            case GateKind::Z: z(g.i); break;
        }
    }
    void apply(const GateWord& w) {
        for (const Gate& g : w) apply(g);
    }

    // Applies a permutation of qubit contents: the state at position q moves
    // to position perm[q].
    void permute(const std::vector<std::size_t>& perm) {
        std::vector<char> seen(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            if (seen[i]) continue;
            std::vector<std::size_t> cyc{i};
            seen[i] = 1;
            for (std::size_t j = perm[i]; j != i; j = perm[j]) {
                seen[j] = 1;
                cyc.push_back(j);
            }
            for (std::size_t k = cyc.size(); k-- > 1;) swap(cyc[k - 1], cyc[k]);
        }
    }

    struct Outcome {
        int value = 0;          // 0 => +1 eigenvalue, 1 => -1
        bool deterministic = false;
        std::size_t pivot = 0;  // stabilizer row replaced on a random outcome
    };

    // Measures the Pauli observable p (sign +1 assumed). Random outcomes take
    // the forced value when given, else a seeded coin; deterministic outcomes
    // ignore the forcing. Corrections are the caller's job.
    Outcome measure(const PauliVec& p, std::optional<int> forced = {}, Rng* rng = nullptr) {
        if (p.m != n_) throw std::invalid_argument("measure: qubit count mismatch");
        std::size_t piv = 2 * n_;
        for (std::size_t i = n_; i < 2 * n_; ++i)
            if (anticommutes_(i, p)) { piv = i; break; }
        if (piv < 2 * n_) {
            for (std::size_t i = 0; i < 2 * n_; ++i)
                if (i != piv && anticommutes_(i, p)) rowsum_(i, piv);
            x_[piv - n_] = x_[piv];
            z_[piv - n_] = z_[piv];
            r_[piv - n_] = r_[piv];
            int out = forced ? *forced : (rng ? int(rng->bit()) : 0);
            x_[piv] = p.x;
            z_[piv] = p.z;
            r_[piv] = out ^ (p.sign < 0 ? 1 : 0);
            return {out, false, piv};
        }
        // deterministic: accumulate the stabilizer product matching p
        uint64_t ax = 0, az = 0;
        int phase = 0;   // i-power / 2
        int ipow = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (anticommutes_(i, p)) {
                ipow = 2 * phase + 2 * r_[n_ + i];
                for (std::size_t q = 0; q < n_; ++q)
                    ipow += g_(bit_(x_[n_ + i], q), bit_(z_[n_ + i], q), bit_(ax, q), bit_(az, q));
                ipow = ((ipow % 4) + 4) % 4;
                if (ipow & 1) throw std::logic_error("measure: odd phase in stabilizer product");
                phase = ipow >> 1;
                ax ^= x_[n_ + i];
                az ^= z_[n_ + i];
            }
        if (ax != p.x || az != p.z)
            throw std::logic_error("measure: commuting Pauli outside the stabilizer group");
        int out = phase ^ (p.sign < 0 ? 1 : 0);
        return {out, true, 0};
    }

    // Conjugation by the Hermitian Pauli with the given masks: rows that
    // anticommute flip sign.
    void apply_pauli(uint64_t px, uint64_t pz) {
        for (std::size_t i = 0; i < 2 * n_; ++i)
            if ((std::popcount(x_[i] & pz) + std::popcount(z_[i] & px)) % 2 == 1) r_[i] ^= 1;
    }

    // Destabilizer paired with a stabilizer row index (as returned in
    // Outcome::pivot); anticommutes with that stabilizer only.
    std::pair<uint64_t, uint64_t> destabilizer_masks(std::size_t stab_row) const {
        return {x_[stab_row - n_], z_[stab_row - n_]};
    }

    // Stabilizer rows restricted to a qubit subset: eliminates support outside
    // the subset, keeps the rows that end up fully inside, and canonicalizes
    // them (sign-tracked RREF). Two states agree on the subset iff the results
    // are identical and of full rank there.
    struct CanonicalRow {
        uint64_t x = 0, z = 0;
        int r = 0;
        bool operator==(const CanonicalRow& o) const = default;
        bool operator<(const CanonicalRow& o) const {
            return std::tie(x, z, r) < std::tie(o.x, o.z, o.r);
        }
    };
    std::vector<CanonicalRow> restricted_stabilizers(uint64_t subset_mask) const {
        StabTableau t = *this;
        uint64_t outside = ~subset_mask;
        std::vector<char> used(2 * n_, 0);
        for (std::size_t q = 0; q < n_; ++q) {
            if (!((outside >> q) & 1)) continue;
            for (int which = 0; which < 2; ++which) {
                std::size_t piv = 0;
                bool found = false;
                for (std::size_t i = n_; i < 2 * n_; ++i) {
                    if (used[i]) continue;
                    bool b = which == 0 ? bit_(t.x_[i], q) : bit_(t.z_[i], q);
                    if (b) { piv = i; found = true; break; }
                }
                if (!found) continue;
                for (std::size_t i = n_; i < 2 * n_; ++i) {
                    if (i == piv || used[i]) continue;
                    bool b = which == 0 ? bit_(t.x_[i], q) : bit_(t.z_[i], q);
                    if (b) t.rowsum_(i, piv);
                }
                used[piv] = 1;
            }
        }
        std::vector<CanonicalRow> rows;
        for (std::size_t i = n_; i < 2 * n_; ++i) {
            if (used[i]) continue;
            if ((t.x_[i] & outside) || (t.z_[i] & outside)) continue;
            rows.push_back({t.x_[i], t.z_[i], t.r_[i]});
        }
        // sign-tracked RREF over the (x|z) bits of the subset
        std::vector<std::size_t> qubits;
        for (std::size_t q = 0; q < n_; ++q)
            if ((subset_mask >> q) & 1) qubits.push_back(q);
        std::size_t rank = 0;
        for (int which = 0; which < 2 && rank < rows.size(); ++which)
            for (std::size_t q : qubits) {
                std::size_t piv = rows.size();
                for (std::size_t i = rank; i < rows.size(); ++i) {
                    bool b = which == 0 ? bit_(rows[i].x, q) : bit_(rows[i].z, q);
                    if (b) { piv = i; break; }
                }
                if (piv == rows.size()) continue;
                std::swap(rows[rank], rows[piv]);
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (i == rank) continue;
                    bool b = which == 0 ? bit_(rows[i].x, q) : bit_(rows[i].z, q);
                    if (b) mul_rows_(rows[i], rows[rank]);
                }
                if (++rank == rows.size()) break;
            }
        std::sort(rows.begin(), rows.end());
        return rows;
    }

    // +1-signed stabilizer group elements supported on the subset, as raw
    // rows for frame solving.
    std::vector<CanonicalRow> stabilizer_rows() const {
        std::vector<CanonicalRow> rows;
        for (std::size_t i = n_; i < 2 * n_; ++i) rows.push_back({x_[i], z_[i], r_[i]});
        return rows;
    }

private:
    static bool bit_(uint64_t w, std::size_t q) { return (w >> q) & 1; }
    void check_(std::size_t a) const {
        if (a >= n_) throw std::out_of_range("qubit index");
    }
    void check2_(std::size_t a, std::size_t b) const {
        check_(a); check_(b);
        if (a == b) throw std::out_of_range("two-qubit gate needs distinct qubits");
    }
    bool anticommutes_(std::size_t row, const PauliVec& p) const {
        return (std::popcount(x_[row] & p.z) + std::popcount(z_[row] & p.x)) % 2 == 1;
    }
    static int g_(bool x1, bool z1, bool x2, bool z2) {
        if (!x1 && !z1) return 0;
        if (x1 && z1) return int(z2) - int(x2);
        if (x1) return int(z2) * (2 * int(x2) - 1);
        return int(x2) * (1 - 2 * int(z2));
    }
    void rowsum_(std::size_t h, std::size_t i) {
        int tot = 2 * r_[h] + 2 * r_[i];
        for (std::size_t q = 0; q < n_; ++q)
            tot += g_(bit_(x_[i], q), bit_(z_[i], q), bit_(x_[h], q), bit_(z_[h], q));
        tot = ((tot % 4) + 4) % 4;
        if (tot & 1) throw std::logic_error("rowsum: odd phase");
        r_[h] = tot >> 1;
        x_[h] ^= x_[i];
        z_[h] ^= z_[i];
    }
    void mul_rows_(CanonicalRow& a, const CanonicalRow& b) const {
        int tot = 2 * a.r + 2 * b.r;
        for (std::size_t q = 0; q < n_; ++q)
            tot += g_(bit_(b.x, q), bit_(b.z, q), bit_(a.x, q), bit_(a.z, q));
        tot = ((tot % 4) + 4) % 4;
        if (tot & 1) throw std::logic_error("row product: odd phase");
        a.r = tot >> 1;
        a.x ^= b.x;
        a.z ^= b.z;
    }

    std::size_t n_;
    std::vector<uint64_t> x_, z_;
    std::vector<int> r_;
};

// The tableau action of a gate word on Pauli conjugation, for comparing with
// the word's symplectic matrix.
inline PauliVec conjugate_through(const GateWord& w, const PauliVec& p) {
    PauliVec cur = p;
    std::function<void(const Gate&)> apply_gate = [&](const Gate& g) {
        auto bit = [&](uint64_t v, std::size_t q) { return bool((v >> q) & 1); };
        switch (g.kind) {
            case GateKind::CNOT: {
                bool xa = bit(cur.x, g.i), zb = bit(cur.z, g.j);
                bool xb = bit(cur.x, g.j), za = bit(cur.z, g.i);
                if (xa && zb && (xb == za)) cur.sign = -cur.sign;
                if (xa) cur.x ^= uint64_t(1) << g.j;
                if (zb) cur.z ^= uint64_t(1) << g.i;
                break;
            }
            case GateKind::S: {
                bool xa = bit(cur.x, g.i), za = bit(cur.z, g.i);
                if (xa && za) cur.sign = -cur.sign;
                if (xa) cur.z ^= uint64_t(1) << g.i;
                break;
            }
            case GateKind::Sdg: {
                bool xa = bit(cur.x, g.i), za = bit(cur.z, g.i);
                if (xa && !za) cur.sign = -cur.sign;
                if (xa) cur.z ^= uint64_t(1) << g.i;
                break;
            }
            case GateKind::H: {
                bool xa = bit(cur.x, g.i), za = bit(cur.z, g.i);
                if (xa && za) cur.sign = -cur.sign;
                if (xa != za) {
                    cur.x ^= uint64_t(1) << g.i;
                    cur.z ^= uint64_t(1) << g.i;
                }
                break;
            }
            case GateKind::Hall:
                for (std::size_t q = 0; q < cur.m; ++q) apply_gate({GateKind::H, q, 0});
                break;
            case GateKind::SWAP:
                apply_gate({GateKind::CNOT, g.i, g.j});
                apply_gate({GateKind::CNOT, g.j, g.i});
                apply_gate({GateKind::CNOT, g.i, g.j});
                break;
            case GateKind::CZ:
                apply_gate({GateKind::H, g.j, 0});
                apply_gate({GateKind::CNOT, g.i, g.j});
                apply_gate({GateKind::H, g.j, 0});
                break;
            case GateKind::X:
                if (bit(cur.z, g.i)) cur.sign = -cur.sign;
                break;
            case GateKind::Z:
                if (bit(cur.x, g.i)) cur.sign = -cur.sign;
                break;
        }
    };
    for (const Gate& g : w) apply_gate(g);
    return cur;
}

}  // namespace ccq
