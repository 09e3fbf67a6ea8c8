#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccq/clifford.hpp"
#include "ccq/logical.hpp"
#include "ccq/seed_io.hpp"
#include "ccq/surgery.hpp"
#include "ccq/tableau.hpp"

namespace ccq {
namespace gadget {

// ------------------------------------------------------------------
// Case-study data for the 24-qubit code. Physical swap tables index the
// qubits of each cluster in decreasing-exponent order, so paper qubit
// (cluster c, offset o) is lift column c*p + ((p - o) mod p). Swap lists
// apply left to right; logical operator words compose rightmost first.
// ------------------------------------------------------------------

using Swaps = std::vector<std::pair<int, int>>;   // 1-based paper indices

inline const Swaps& aut1_phys() {
    static const Swaps s = {{1, 17}, {1, 10}, {1, 20}, {2, 16}, {2, 11}, {2, 19},
                            {3, 18}, {3, 12}, {3, 21}, {4, 22}, {4, 7},  {4, 15},
                            {5, 24}, {5, 8},  {5, 14}, {6, 23}, {6, 9},  {6, 13}};
    return s;
}
inline const Swaps& aut2_phys() {
    static const Swaps s = {{2, 3},   {4, 7},   {5, 9},   {6, 8},   {11, 12},
                            {13, 14}, {16, 21}, {17, 20}, {18, 19}, {23, 24}};
    return s;
}
inline const Swaps& aut3_phys() {
    static const Swaps s = {{4, 22}, {5, 23}, {6, 24}, {7, 15}, {8, 13}, {9, 14}};
    return s;
}
inline const Swaps& hswap_phys() {
    static const Swaps s = {{18, 21}, {17, 20}, {16, 19}, {15, 22}, {14, 24}, {13, 23},
                            {12, 19}, {11, 21}, {10, 20}, {3, 16},  {2, 18},  {1, 17}};
    return s;
}
inline const Swaps& global_h_phys_tabulated() {
    static const Swaps s = {{2, 3},   {4, 7},   {5, 9},   {6, 8},   {11, 12},
                            {13, 24}, {14, 23}, {15, 22}, {16, 18}, {19, 21}};
    return s;
}

// tabulated logical words (1-based logical indices)
inline const Swaps& aut1_logical() {
    static const Swaps s = {{1, 6}, {3, 5}, {2, 8}, {4, 7}, {5, 8}, {6, 7}};
    return s;
}
inline const Swaps& aut2_logical() {
    static const Swaps s = {{2, 3}, {6, 7}};
    return s;
}
inline const Swaps& aut3_logical() {
    static const Swaps s = {{5, 3}, {8, 2}};
    return s;
}
inline const Swaps& hswap_logical_swaps() {
    static const Swaps s = {{1, 6}, {4, 7}, {5, 8}, {6, 7}};
    return s;
}

struct Code243 {
    CcCode cc;
    LogicalBasis basis;

    static const Code243& instance() {
        static const Code243 c = [] {
            Code243 x{builtin_code("cc_24_8_3"), {}};
            x.basis = clustered_basis(x.cc);
            return x;
        }();
        return c;
    }
};

// paper qubit index (1-based) -> lift column (0-based)
inline std::size_t paper_qubit_column(int q) {
    int c = (q - 1) / 3, o = (q - 1) % 3;
    return std::size_t(3 * c + ((3 - o) % 3));
}

// column-level permutation of a physical swap list, applied left to right
inline std::vector<std::size_t> physical_permutation(const Swaps& swaps) {
    std::vector<std::size_t> perm(24);
    for (std::size_t i = 0; i < 24; ++i) perm[i] = i;
    for (auto [a, b] : swaps) {
        std::size_t ca = paper_qubit_column(a), cb = paper_qubit_column(b);
        for (auto& v : perm) {
            if (v == ca) v = cb;
            else if (v == cb) v = ca;
        }
    }
    return perm;
}

// content permutation of a logical SWAP word (operator product, rightmost first)
inline std::vector<std::size_t> logical_word_permutation(const Swaps& word) {
    std::vector<std::size_t> perm(8);
    for (std::size_t i = 0; i < 8; ++i) perm[i] = i;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::size_t a = std::size_t(it->first - 1), b = std::size_t(it->second - 1);
        for (auto& v : perm) {
            if (v == a) v = b;
            else if (v == b) v = a;
        }
    }
    return perm;
}

inline std::vector<std::size_t> compose_perm(const std::vector<std::size_t>& second,
                                             const std::vector<std::size_t>& first) {
    std::vector<std::size_t> out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
    return out;
}
inline std::vector<std::size_t> invert_perm(const std::vector<std::size_t>& p) {
    std::vector<std::size_t> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
    return inv;
}

// ------------------------------------------------------------------
// Physical-to-logical action extraction
// ------------------------------------------------------------------

// Decomposes a physical Pauli (xv|zv) in the normalizer: logical coordinates
// via the symplectic pairing with the clustered representatives, residuals
// must be stabilizers.
struct LogicalCoords {
    BitVec x_log, z_log;   // length 8
};

inline LogicalCoords logical_coordinates(const Code243& code, const BitVec& xv, const BitVec& zv) {
    const LogicalBasis& b = code.basis;
    LogicalCoords out{BitVec(8), BitVec(8)};
    for (std::size_t i = 0; i < 8; ++i) {
        if (xv.dot(b.z_reps[i])) out.x_log.set(i, true);
        if (zv.dot(b.x_reps[i])) out.z_log.set(i, true);
    }
    BitVec xres = xv, zres = zv;
    for (std::size_t i = 0; i < 8; ++i) {
        if (out.x_log.get(i)) xres.xor_in(b.x_reps[i]);
        if (out.z_log.get(i)) zres.xor_in(b.z_reps[i]);
    }
    if (!row_space_contains(code.cc.code.bhx, xres))
        throw std::logic_error("logical_coordinates: X residual is not a stabilizer");
    if (!row_space_contains(code.cc.code.bhz, zres))
        throw std::logic_error("logical_coordinates: Z residual is not a stabilizer");
    return out;
}

// Logical symplectic action (m = 8) of a physical operation given as the
// images of the X and Z representatives.
template <typename ImageFn>
SymplecticOp extract_logical_action(const Code243& code, ImageFn&& image_of) {
    SymplecticOp op{8, BitMatrix(16, 16)};
    const LogicalBasis& b = code.basis;
    for (std::size_t j = 0; j < 8; ++j) {
        auto [xx, xz] = image_of(b.x_reps[j], true);
        LogicalCoords cx = logical_coordinates(code, xx, xz);
        for (std::size_t i = 0; i < 8; ++i) {
            op.mat.set(i, j, cx.x_log.get(i));
            op.mat.set(8 + i, j, cx.z_log.get(i));
        }
        auto [zx, zz] = image_of(b.z_reps[j], false);
        LogicalCoords cz = logical_coordinates(code, zx, zz);
        for (std::size_t i = 0; i < 8; ++i) {
            op.mat.set(i, 8 + j, cz.x_log.get(i));
            op.mat.set(8 + i, 8 + j, cz.z_log.get(i));
        }
    }
    if (!op.is_symplectic()) throw std::logic_error("extracted logical action is not symplectic");
    return op;
}

inline BitVec permute_support(const BitVec& v, const std::vector<std::size_t>& perm) {
    BitVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) out.set(perm[i], true);
    return out;
}

// ------------------------------------------------------------------
// Fold-transversal CZ-S gate
// ------------------------------------------------------------------

struct CzSReport {
    bool identity_zero = false;       // B(H_X) B(A) B(H_X)^T = 0
    bool group_preserved = false;     // X checks map into the stabilizer group
    bool logical_matches = false;     // symplectic action = S1 S4 S5+ S8+ CZ23 CZ67
    bool squares_to_z_pattern = false;
    bool zero_state_fixed = false;    // encoded |0..0> invariant, sign level
    bool phase_labels_verified = false;   // S vs S-dagger distinguished on |+>
    // With the encoded dictionary Ybar = i Xbar Zbar, transversal S on a
    // weight-3 cluster conjugates Xbar to -Ybar, so the physical word realizes
    // Sdg on clusters 1,4 and S on 5,8: the tabulated label times Z1 Z4 Z5 Z8.
    std::string phase_note;
    bool ok() const {
        return identity_zero && group_preserved && logical_matches && squares_to_z_pattern &&
               zero_state_fixed && phase_labels_verified;
    }
};

inline RingMatrix cz_s_a_s() {
    RingMatrix a = RingMatrix::zero(3, 8, 8);
    for (std::size_t i : {0, 3, 4, 7}) a.at(i, i) = RingElem::one(3);
    return a;
}
inline RingMatrix cz_s_a_cz() {
    RingMatrix a = RingMatrix::zero(3, 8, 8);
    for (auto [i, j] : {std::pair<int, int>{1, 2}, {5, 6}}) {
        a.at(i, j) = RingElem::one(3);
        a.at(j, i) = RingElem::one(3);
    }
    return a;
}

// the labeled logical action: Lambda(C) with C = diag(1,0,0,1,1,0,0,1) plus
// the CZ couplings (2,3) and (6,7)
inline SymplecticOp cz_s_logical_expected() {
    BitMatrix c(8, 8);
    for (std::size_t i : {0, 3, 4, 7}) c.set(i, i, true);
    for (auto [i, j] : {std::pair<int, int>{1, 2}, {5, 6}}) {
        c.set(i, j, true);
        c.set(j, i, true);
    }
    return lambda_of(c);
}

// S on clusters 1 and 4, S-dagger on 5 and 8, CZ across (2,3) and (6,7)
inline GateWord cz_s_physical_word() {
    GateWord w;
    BitMatrix bs = cz_s_a_s().binary_lift();
    BitMatrix bcz = cz_s_a_cz().binary_lift();
    for (std::size_t q = 0; q < 24; ++q)
        if (bs.get(q, q)) w.push_back({q < 12 ? GateKind::S : GateKind::Sdg, q, 0});
    for (std::size_t i = 0; i < 24; ++i)
        for (std::size_t j = i + 1; j < 24; ++j)
            if (bcz.get(i, j)) w.push_back({GateKind::CZ, i, j});
    return w;
}

// Encoded |0...0>: measure the X checks on |0>^24 and repair signs with the
// matched destabilizers.
inline StabTableau encoded_zero_state(const Code243& code) {
    StabTableau t(24);
    for (std::size_t r = 0; r < code.cc.code.bhx.rows(); ++r) {
        BitVec row = code.cc.code.bhx.row(r);
        PauliVec p{24, 0, 0, +1};
        for (std::size_t q = 0; q < 24; ++q)
            if (row.get(q)) p.x |= uint64_t(1) << q;
        auto out = t.measure(p, 0);
        if (!out.deterministic && out.value == 1) {
            auto [dx, dz] = t.destabilizer_masks(out.pivot);
            t.apply_pauli(dx, dz);
        }
    }
    return t;
}

inline PauliVec cluster_pauli(std::size_t cluster, bool x_part, bool z_part) {
    PauliVec p{24, 0, 0, +1};
    uint64_t mask = uint64_t(7) << (3 * cluster);
    if (x_part) p.x = mask;
    if (z_part) p.z = mask;
    return p;
}

inline CzSReport verify_cz_s() {
    const Code243& code = Code243::instance();
    CzSReport rep;
    RingMatrix a = cz_s_a_s() + cz_s_a_cz();
    BitMatrix ba = a.binary_lift();
    const BitMatrix& bhx = code.cc.code.bhx;

    rep.identity_zero = bhx.multiply(ba).multiply(bhx.transpose()).is_zero();

    rep.group_preserved = true;
    RowBasis span_z(code.cc.code.bhz);
    for (std::size_t r = 0; r < bhx.rows(); ++r)
        if (!span_z.contains(ba.apply_right(bhx.row(r)))) rep.group_preserved = false;

    // diagonal gate: X(v) -> X(v) Z(v B(A)), Z untouched
    SymplecticOp action = extract_logical_action(code, [&](const BitVec& v, bool is_x) {
        if (is_x) return std::pair<BitVec, BitVec>{v, ba.apply_right(v)};
        return std::pair<BitVec, BitVec>{BitVec(24), v};
    });
    rep.logical_matches = action == cz_s_logical_expected();
    rep.squares_to_z_pattern = action.then_after(action) == SymplecticOp::identity(8);

    // sign level: encoded |0...0> is fixed pointwise
    GateWord word = cz_s_physical_word();
    StabTableau t = encoded_zero_state(code);
    t.apply(word);
    rep.zero_state_fixed = true;
    for (std::size_t i = 0; i < 8; ++i) {
        auto out = t.measure(cluster_pauli(i, false, true), {});
        if (!out.deterministic || out.value != 0) rep.zero_state_fixed = false;
    }

    // sign level: S vs S-dagger on the diagonal clusters. The encoded logical
    // Y is -(Y Y Y) for p = 3, while transversal S conjugates the XXX
    // representative to +(Y Y Y): the physical-S clusters realize logical
    // S-dagger and vice versa.
    rep.phase_labels_verified = true;
    for (std::size_t i : {0, 3, 4, 7}) {
        StabTableau s = encoded_zero_state(code);
        auto mx = s.measure(cluster_pauli(i, true, false), 0);   // prepare |+bar> on i
        if (!mx.deterministic && mx.value == 1) {
            auto [dx, dz] = s.destabilizer_masks(mx.pivot);
            s.apply_pauli(dx, dz);
        }
        s.apply(word);
        auto my = s.measure(cluster_pauli(i, true, true), {});
        bool physical_s = (i == 0 || i == 3);
        // physical S: Xbar -> +(YYY) = -Ybar (logical Sdg); physical Sdg: +Ybar
        int expect = physical_s ? 0 : 1;
        if (!my.deterministic || my.value != expect) rep.phase_labels_verified = false;
    }
    rep.phase_note =
        "tracked phases: realizes Sdg(1) Sdg(4) S(5) S(8) CZ(2,3) CZ(6,7) in the "
        "encoded Y = i XZ dictionary, i.e. the tabulated label times the logical "
        "Pauli Z1 Z4 Z5 Z8";
    return rep;
}

// logical-level gate word of the fold gate, matching the tracked phases
inline GateWord cz_s_logical_word() {
    return {{GateKind::Sdg, 0, 0}, {GateKind::Sdg, 3, 0}, {GateKind::S, 4, 0},
            {GateKind::S, 7, 0},   {GateKind::CZ, 1, 2},  {GateKind::CZ, 5, 6}};
}

// ------------------------------------------------------------------
// Automorphism and H-SWAP gates
// ------------------------------------------------------------------

struct PermGateReport {
    std::string name;
    bool spans_preserved = false;   // row spans preserved (exchanged for H-SWAP)
    bool logical_matches = false;   // extracted action equals the tabulated word
    bool involution_ok = true;
    std::vector<std::size_t> logical_perm;   // content permutation, 0-based
    bool ok() const { return spans_preserved && logical_matches && involution_ok; }
};

inline SymplecticOp perm_symplectic(const std::vector<std::size_t>& perm, bool with_global_h) {
    std::size_t m = perm.size();
    BitMatrix p(m, m);
    for (std::size_t i = 0; i < m; ++i) p.set(perm[i], i, true);
    SymplecticOp s = l_of(p);
    if (with_global_h) s = s.then_after(gate_symplectic({GateKind::Hall, 0, 0}, m));
    return s;
}

inline PermGateReport verify_automorphism(const std::string& name, const Swaps& phys,
                                          const Swaps& logical_word) {
    const Code243& code = Code243::instance();
    PermGateReport rep;
    rep.name = name;
    std::vector<std::size_t> perm = physical_permutation(phys);
    BitMatrix px = code.cc.code.bhx.permute_columns(perm);
    BitMatrix pz = code.cc.code.bhz.permute_columns(perm);
    rep.spans_preserved = row_spans_equal(px, code.cc.code.bhx) &&
                          row_spans_equal(pz, code.cc.code.bhz);

    SymplecticOp action = extract_logical_action(code, [&](const BitVec& v, bool is_x) {
        BitVec w = permute_support(v, perm);
        return is_x ? std::pair<BitVec, BitVec>{w, BitVec(24)}
                    : std::pair<BitVec, BitVec>{BitVec(24), w};
    });
    std::vector<std::size_t> lperm = logical_word_permutation(logical_word);
    rep.logical_perm = lperm;
    rep.logical_matches = action == perm_symplectic(lperm, false);
    // squaring must track the squared permutation (the identity for the
    // involutions Aut(2) and Aut(3); Aut(1) has order four)
    rep.involution_ok =
        action.then_after(action) == perm_symplectic(compose_perm(lperm, lperm), false);
    return rep;
}

inline PermGateReport verify_h_swap() {
    const Code243& code = Code243::instance();
    PermGateReport rep;
    rep.name = "H-SWAP";
    std::vector<std::size_t> perm = physical_permutation(hswap_phys());
    BitMatrix px = code.cc.code.bhx.permute_columns(perm);
    BitMatrix pz = code.cc.code.bhz.permute_columns(perm);
    rep.spans_preserved = row_spans_equal(px, code.cc.code.bhz) &&
                          row_spans_equal(pz, code.cc.code.bhx);

    // global H exchanges the Pauli type, then qubits are permuted
    SymplecticOp action = extract_logical_action(code, [&](const BitVec& v, bool is_x) {
        BitVec w = permute_support(v, perm);
        return is_x ? std::pair<BitVec, BitVec>{BitVec(24), w}
                    : std::pair<BitVec, BitVec>{w, BitVec(24)};
    });
    std::vector<std::size_t> lperm = logical_word_permutation(hswap_logical_swaps());
    rep.logical_perm = lperm;
    rep.logical_matches = action == perm_symplectic(lperm, true);
    rep.involution_ok = true;
    return rep;
}

inline std::vector<PermGateReport> verify_automorphisms() {
    return {verify_automorphism("Aut(1)", aut1_phys(), aut1_logical()),
            verify_automorphism("Aut(2)", aut2_phys(), aut2_logical()),
            verify_automorphism("Aut(3)", aut3_phys(), aut3_logical())};
}

struct GlobalHReport {
    bool word_composition_is_global_h = false;   // H-SWAP . Aut1 Aut3 Aut1 Aut1
    bool tabulated_word_matches_reverse_order = false;
    std::vector<std::size_t> tabulated_word_logical_perm;
    bool tabulated_word_is_pure_global_h = false;  // false: the tabulated word is reverse-composed
    Swaps corrected_physical_word;
    bool encoded_state_check = false;            // maps encoded |0..0> to |+..+>
    bool ok() const { return word_composition_is_global_h && encoded_state_check; }
};

inline GlobalHReport simplified_global_hadamard() {
    const Code243& code = Code243::instance();
    GlobalHReport rep;

    // compose at the physical level, time order Aut1, Aut1, Aut3, Aut1, H-SWAP
    std::vector<std::size_t> p = physical_permutation(aut1_phys());
    p = compose_perm(physical_permutation(aut1_phys()), p);
    p = compose_perm(physical_permutation(aut3_phys()), p);
    p = compose_perm(physical_permutation(aut1_phys()), p);
    p = compose_perm(physical_permutation(hswap_phys()), p);

    SymplecticOp action = extract_logical_action(code, [&](const BitVec& v, bool is_x) {
        BitVec w = permute_support(v, p);
        return is_x ? std::pair<BitVec, BitVec>{BitVec(24), w}
                    : std::pair<BitVec, BitVec>{w, BitVec(24)};
    });
    rep.word_composition_is_global_h = action == gate_symplectic({GateKind::Hall, 0, 0}, 8);

    // the tabulated simplified physical word equals the reverse-order composite;
    // and its own action carries an extra SWAP pair
    std::vector<std::size_t> q = physical_permutation(hswap_phys());
    q = compose_perm(physical_permutation(aut1_phys()), q);
    q = compose_perm(physical_permutation(aut3_phys()), q);
    q = compose_perm(physical_permutation(aut1_phys()), q);
    q = compose_perm(physical_permutation(aut1_phys()), q);
    rep.tabulated_word_matches_reverse_order = q == physical_permutation(global_h_phys_tabulated());

    SymplecticOp tabulated_action = extract_logical_action(code, [&](const BitVec& v, bool is_x) {
        BitVec w = permute_support(v, physical_permutation(global_h_phys_tabulated()));
        return is_x ? std::pair<BitVec, BitVec>{BitVec(24), w}
                    : std::pair<BitVec, BitVec>{w, BitVec(24)};
    });
    rep.tabulated_word_is_pure_global_h =
        tabulated_action == gate_symplectic({GateKind::Hall, 0, 0}, 8);
    for (std::size_t i = 0; i < 8; ++i) {
        BitVec img = permute_support(code.basis.x_reps[i], physical_permutation(global_h_phys_tabulated()));
        for (std::size_t j = 0; j < 8; ++j)
            if (img == code.basis.x_reps[j]) rep.tabulated_word_logical_perm.push_back(j);
    }

    // corrected physical word: the forward-order composite, reported in paper
    // qubit indexing
    auto col_to_q = [](std::size_t c) {
        int cl = int(c) / 3, o = int(c) % 3;
        return 3 * cl + ((3 - o) % 3) + 1;
    };
    std::set<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < 24; ++i)
        if (p[i] != i) {
            int a = col_to_q(i), b = col_to_q(p[i]);
            pairs.insert({std::min(a, b), std::max(a, b)});
        }
    rep.corrected_physical_word.assign(pairs.begin(), pairs.end());

    // sign level: encoded |0..0> -> |+..+> under global H + permutation
    StabTableau t = encoded_zero_state(code);
    for (std::size_t qb = 0; qb < 24; ++qb) t.h(qb);
    t.permute(p);
    rep.encoded_state_check = true;
    for (std::size_t r = 0; r < code.cc.code.bhx.rows(); ++r) {
        PauliVec px{24, 0, 0, +1};
        for (std::size_t qb = 0; qb < 24; ++qb)
            if (code.cc.code.bhx.get(r, qb)) px.x |= uint64_t(1) << qb;
        auto out = t.measure(px, {});
        if (!out.deterministic || out.value != 0) rep.encoded_state_check = false;
    }
    for (std::size_t i = 0; i < 8; ++i) {
        auto out = t.measure(cluster_pauli(i, true, false), {});
        if (!out.deterministic || out.value != 0) rep.encoded_state_check = false;
    }
    return rep;
}

// ------------------------------------------------------------------
// Parallel-CNOT schedules
// ------------------------------------------------------------------

// content-movement permutations of the three automorphism gates (0-based)
inline const std::vector<std::size_t>& aut_perm(int k) {
    static const std::vector<std::vector<std::size_t>> perms = {
        logical_word_permutation(aut1_logical()),
        logical_word_permutation(aut2_logical()),
        logical_word_permutation(aut3_logical()),
    };
    return perms[k];
}

// closure of <Aut(1), Aut(2), Aut(3)> with shortest generator words
struct AutGroup {
    std::vector<std::vector<std::size_t>> elems;   // BFS order; elems[0] = identity
    std::vector<std::vector<int>> words;           // generator indices per element

    static const AutGroup& instance() {
        static const AutGroup g = [] {
            AutGroup out;
            std::map<std::vector<std::size_t>, std::size_t> index;
            std::vector<std::size_t> id(8);
            for (std::size_t i = 0; i < 8; ++i) id[i] = i;
            out.elems.push_back(id);
            out.words.push_back({});
            index[id] = 0;
            for (std::size_t head = 0; head < out.elems.size(); ++head) {
                for (int k = 0; k < 3; ++k) {
                    std::vector<std::size_t> q = compose_perm(aut_perm(k), out.elems[head]);
                    if (!index.count(q)) {
                        index[q] = out.elems.size();
                        std::vector<int> w = out.words[head];
                        w.push_back(k);
                        out.elems.push_back(q);
                        out.words.push_back(std::move(w));
                    }
                }
            }
            return out;
        }();
        return g;
    }

    const std::vector<int>* word_for(const std::vector<std::size_t>& perm) const {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == perm) return &words[i];
        return nullptr;
    }
};

inline std::string aut_word_string(const std::vector<int>& word) {
    if (word.empty()) return "(none)";
    std::string s;
    for (int k : word) {
        if (!s.empty()) s += ", ";
        s += "Aut(" + std::to_string(k + 1) + ")";
    }
    return s;
}

// tabulated connection matrix of one schedule step: Pauli type plus the global
// logical positions (0-based bit masks over the eight positions) of each ring
// row
struct StepConn {
    char type;                      // 'X' or 'Z'
    std::array<uint8_t, 4> rows;    // one mask per ring row; 0 = zero row
};

struct ScheduleFamily {
    std::string name;
    StepConn ini, z1, x2, fin;
};

// validates a tabulated step matrix: it must factor as an LP connection whose
// merge rows reproduce exactly the tabulated position sets
inline void validate_step_conn(const StepConn& sc) {
    const Code243& code = Code243::instance();
    MergeBasis basis = sc.type == 'Z' ? MergeBasis::Z : MergeBasis::X;
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = 0; b < 16; ++b) {
            ConnectionCode conn = connection_from_bits(code.cc, a, b);
            std::vector<MergeTarget> tg = merge_targets(code.cc, conn, basis);
            std::array<uint8_t, 4> rows{0, 0, 0, 0};
            for (const auto& t : tg) {
                uint8_t m = 0;
                for (std::size_t idx : t.logicals) m |= uint8_t(1) << (idx - 1);
                rows[t.row] = m;
            }
            if (rows == sc.rows) {
                merge_complex(code.cc.code, conn, basis);   // commuting square + CSS
                return;
            }
        }
    throw std::logic_error("tabulated connection matrix has no product factorization");
}

inline const ScheduleFamily& family_ex1() {
    static const ScheduleFamily f = {
        "parallel-ex1",
        {'X', {0b00010000, 0, 0b01000000, 0}},
        {'Z', {0b01010000, 0b10100000, 0, 0}},
        {'X', {0b00010100, 0b00101000, 0b01000000, 0b10000000}},
        {'Z', {0b00000010, 0, 0b00001000, 0}},
    };
    return f;
}
inline const ScheduleFamily& family_ex1_variant() {
    static const ScheduleFamily f = {
        "parallel-ex1-variant",
        family_ex1().ini,
        family_ex1().z1,
        {'X', {0b00100100, 0b00011000, 0b10000000, 0b01000000}},
        family_ex1().fin,
    };
    return f;
}
inline const ScheduleFamily& family_ex3() {
    static const ScheduleFamily f = {
        "parallel-ex3",
        family_ex1().ini,
        {'Z', {0b00000010, 0b00000001, 0b00011000, 0b00100100}},
        {'X', {0b00000101, 0b00001010, 0, 0}},
        family_ex1().fin,
    };
    return f;
}
inline const ScheduleFamily& family_single_24() {
    static const ScheduleFamily f = {
        "single-2to4",
        family_ex1().ini,
        {'Z', {0b00000001, 0, 0b00010100, 0b00100000}},
        {'X', {0b00100100, 0b00001000, 0b10000000, 0}},
        family_ex1().fin,
    };
    return f;
}
inline const ScheduleFamily& family_single_26() {
    static const ScheduleFamily f = {
        "single-2to6",
        family_ex1().ini,
        family_single_24().z1,
        {'X', {0b00000001, 0b00100010, 0, 0b10000000}},
        {'Z', {0b00000001, 0, 0b00000100, 0}},
    };
    return f;
}
inline const ScheduleFamily& family_single_28() {
    static const ScheduleFamily f = {
        "single-2to8",
        family_ex1().ini,
        {'Z', {0, 0b00000001, 0b01010000, 0b10100100}},
        family_single_26().x2,
        {'Z', {0, 0, 0b01000000, 0b10000000}},
    };
    return f;
}

struct CnotGadget {
    std::size_t control = 0, target = 0;   // contents, 0-based
};

struct ScheduleDef {
    std::string id;
    std::vector<const ScheduleFamily*> families;    // tried in order
    std::vector<CnotGadget> gadgets;
    // fixed cumulative permutations (ini, z, x, fin) when the words are tabulated
    std::optional<std::array<std::vector<std::size_t>, 4>> fixed_perms;
    std::vector<std::size_t> prefix;                // constraint on the ini perm
    std::string note;
};

inline std::vector<std::size_t> identity_perm8() {
    std::vector<std::size_t> p(8);
    for (std::size_t i = 0; i < 8; ++i) p[i] = i;
    return p;
}

inline const std::vector<ScheduleDef>& schedule_catalog() {
    static const std::vector<ScheduleDef> defs = [] {
        std::vector<ScheduleDef> v;
        const auto& a1 = aut_perm(0);
        const auto& a2 = aut_perm(1);
        const auto& a3 = aut_perm(2);
        std::vector<std::size_t> id = identity_perm8();

        std::array<std::vector<std::size_t>, 4> ex1_perms = {
            id,
            a2,
            compose_perm(a2, compose_perm(a1, a2)),
            compose_perm(a2, compose_perm(a2, compose_perm(a1, a2))),
        };
        std::vector<std::size_t> prefix_d = compose_perm(a3, compose_perm(a2, a1));

        v.push_back({"62x84", {&family_ex1()}, {{5, 1}, {7, 3}}, ex1_perms, {}, ""});
        v.push_back({"64x82", {&family_ex1_variant()}, {{5, 3}, {7, 1}}, ex1_perms, {}, ""});
        v.push_back({"26x48", {&family_ex1()}, {{1, 5}, {3, 7}}, {}, {}, ""});
        v.push_back({"28x46", {&family_ex3()}, {{1, 7}, {3, 5}}, {}, {}, ""});
        v.push_back({"86x24", {&family_ex1(), &family_ex1_variant(), &family_ex3()},
                     {{7, 5}, {3, 1}}, {}, prefix_d,
                     "tabulated pairing CNOT(8->6) // CNOT(2->4) is not realizable with the "
                     "tabulated connection matrices; the realizable partner of CNOT(8->6) is "
                     "CNOT(4->2)"});
        v.push_back({"68x42", {&family_ex1(), &family_ex1_variant(), &family_ex3()},
                     {{5, 7}, {1, 3}}, {}, prefix_d,
                     "tabulated pairing CNOT(6->8) // CNOT(4->2) is not realizable with the "
                     "tabulated connection matrices; the realizable partner of CNOT(6->8) is "
                     "CNOT(2->4)"});
        v.push_back({"2to4", {&family_single_24()}, {{1, 3}}, {}, {}, ""});
        v.push_back({"2to6", {&family_single_26()}, {{1, 5}}, {}, {}, ""});
        v.push_back({"2to8", {&family_single_28()}, {{1, 7}}, {}, {}, ""});
        v.push_back({"8to4", {&family_single_24()}, {{7, 3}}, {}, a3, ""});
        v.push_back({"8to6", {&family_single_26()}, {{7, 5}}, {}, a3, ""});
        v.push_back({"8to2", {&family_single_28()}, {{7, 1}}, {}, a3, ""});
        return v;
    }();
    return defs;
}

struct ScheduleReport {
    std::string id;
    bool connections_valid = false;
    bool verified = false;
    std::size_t branches = 0;
    std::string family;
    std::vector<std::string> gadget_labels;    // e.g. "CNOT(6->2) via aux 5"
    std::vector<std::string> step_words;
    bool frame_rule_affine = false;
    std::string note;
    std::size_t aux_data_qubits = 24;
    std::size_t aux_check_qubits = 24;
};

namespace detail {

constexpr uint64_t kAuxContents = 0b01010101;   // contents 1,3,5,7 (1-based)

struct ReplayAction {
    enum Kind { Perm, Meas } kind;
    std::vector<std::size_t> perm;
    char pauli = 'Z';
    uint64_t mask = 0;       // position mask
};

struct BranchOutcome {
    std::vector<int> values;
    std::vector<char> deterministic;
};

// one frame-solve: match restricted rows against the reference and find the
// data-supported Pauli fixing the signs
inline std::optional<std::pair<uint64_t, uint64_t>> solve_frame(
    const std::vector<StabTableau::CanonicalRow>& fin,
    const std::vector<StabTableau::CanonicalRow>& ref,
    const std::vector<std::size_t>& data_positions) {
    if (fin.size() != ref.size()) return std::nullopt;
    // binary parts must agree
    for (std::size_t i = 0; i < fin.size(); ++i) {
        bool found = false;
        for (const auto& r : ref)
            if (r.x == fin[i].x && r.z == fin[i].z) { found = true; break; }
        if (!found) return std::nullopt;
    }
    std::size_t k = data_positions.size();
    std::vector<uint16_t> rows;   // k X-coeffs, k Z-coeffs, 1 rhs
    for (const auto& f : fin) {
        int rdiff = -1;
        for (const auto& r : ref)
            if (r.x == f.x && r.z == f.z) { rdiff = f.r ^ r.r; break; }
        uint16_t eq = 0;
        for (std::size_t c = 0; c < k; ++c) {
            if ((f.z >> data_positions[c]) & 1) eq |= uint16_t(1) << c;         // X_c pairs with z
            if ((f.x >> data_positions[c]) & 1) eq |= uint16_t(1) << (k + c);   // Z_c pairs with x
        }
        if (rdiff) eq |= uint16_t(1) << (2 * k);
        rows.push_back(eq);
    }
    // gaussian elimination over 2k unknowns
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * k && rank < rows.size(); ++col) {
        std::size_t piv = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i)
            if ((rows[i] >> col) & 1) { piv = i; break; }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && ((rows[i] >> col) & 1)) rows[i] ^= rows[rank];
        ++rank;
    }
    uint16_t sol = 0;
    for (std::size_t i = rank; i < rows.size(); ++i)
        if (rows[i] == (uint16_t(1) << (2 * k))) return std::nullopt;   // inconsistent
    for (std::size_t i = 0; i < rank; ++i) {
        if (!(rows[i] >> (2 * k) & 1)) continue;
        uint16_t lead = rows[i] & ((uint16_t(1) << (2 * k)) - 1);
        sol |= lead & (~(lead - 1));   // leading bit
    }
    uint64_t px = 0, pz = 0;
    for (std::size_t c = 0; c < k; ++c) {
        if ((sol >> c) & 1) px |= uint64_t(1) << data_positions[c];
        if ((sol >> (k + c)) & 1) pz |= uint64_t(1) << data_positions[c];
    }
    return std::make_pair(px, pz);
}

struct ReplayResult {
    bool all_ok = true;
    std::size_t branches = 0;
    bool frame_affine = false;
};

// runs every branch of a compiled schedule and frame-solves each against the
// reference; also fits an affine correction rule over the random outcomes
inline ReplayResult replay_all_branches(const std::vector<ReplayAction>& actions,
                                        const std::vector<StabTableau::CanonicalRow>& ref_rows,
                                        const std::vector<std::size_t>& data_positions,
                                        uint64_t subset_mask) {
    ReplayResult res;
    std::map<std::vector<int>, std::pair<uint64_t, uint64_t>> frames;
    std::optional<std::vector<char>> det_pattern;

    StabTableau init(12);
    for (std::size_t d : {1, 3, 5, 7}) {
        init.h(d);
        init.cnot(d, 8 + d / 2);
    }

    std::function<void(StabTableau, std::size_t, std::vector<int>&, std::vector<char>&)> walk =
        [&](StabTableau t, std::size_t ai, std::vector<int>& vals, std::vector<char>& dets) {
            if (!res.all_ok) return;
            if (ai == actions.size()) {
                ++res.branches;
                if (det_pattern && *det_pattern != dets) { res.all_ok = false; return; }
                if (!det_pattern) det_pattern = dets;
                auto fin = t.restricted_stabilizers(subset_mask);
                if (fin.size() != 8) { res.all_ok = false; return; }
                auto frame = solve_frame(fin, ref_rows, data_positions);
                if (!frame) { res.all_ok = false; return; }
                std::vector<int> rnd;
                for (std::size_t i = 0; i < vals.size(); ++i)
                    if (!dets[i]) rnd.push_back(vals[i]);
                frames[rnd] = *frame;
                return;
            }
            const ReplayAction& a = actions[ai];
            if (a.kind == ReplayAction::Perm) {
                std::vector<std::size_t> full = a.perm;
                for (std::size_t q = 8; q < 12; ++q) full.push_back(q);
                t.permute(full);
                walk(std::move(t), ai + 1, vals, dets);
                return;
            }
            PauliVec p{12, 0, 0, +1};
            if (a.pauli == 'Z') p.z = a.mask;
            else p.x = a.mask;
            StabTableau probe = t;
            auto o = probe.measure(p, 0);
            if (o.deterministic) {
                vals.push_back(o.value);
                dets.push_back(1);
                walk(std::move(probe), ai + 1, vals, dets);
                vals.pop_back();
                dets.pop_back();
                return;
            }
            for (int v : {0, 1}) {
                StabTableau branch = t;
                branch.measure(p, v);
                vals.push_back(v);
                dets.push_back(0);
                walk(std::move(branch), ai + 1, vals, dets);
                vals.pop_back();
                dets.pop_back();
            }
        };
    std::vector<int> vals;
    std::vector<char> dets;
    walk(init, 0, vals, dets);
    if (!res.all_ok || frames.empty()) {
        res.all_ok = false;
        return res;
    }

    // affine fit over the random outcome bits
    std::size_t nbits = frames.begin()->first.size();
    std::vector<int> zero(nbits, 0);
    if (frames.count(zero)) {
        auto p0 = frames[zero];
        std::vector<std::pair<uint64_t, uint64_t>> delta(nbits, {0, 0});
        bool have = true;
        for (std::size_t b = 0; b < nbits && have; ++b) {
            std::vector<int> e = zero;
            e[b] = 1;
            if (!frames.count(e)) { have = false; break; }
            delta[b] = {frames[e].first ^ p0.first, frames[e].second ^ p0.second};
        }
        if (have) {
            res.frame_affine = true;
            for (const auto& [m, f] : frames) {
                uint64_t px = p0.first, pz = p0.second;
                for (std::size_t b = 0; b < nbits; ++b)
                    if (m[b]) { px ^= delta[b].first; pz ^= delta[b].second; }
                if (px != f.first || pz != f.second) { res.frame_affine = false; break; }
            }
        }
    }
    return res;
}

}  // namespace detail

inline ScheduleReport run_cnot_schedule(const std::string& id) {
    const ScheduleDef* def = nullptr;
    for (const auto& d : schedule_catalog())
        if (d.id == id) def = &d;
    if (!def) throw std::invalid_argument("unknown schedule id: " + id);

    ScheduleReport rep;
    rep.id = id;
    rep.note = def->note;

    const AutGroup& g = AutGroup::instance();
    std::vector<std::size_t> idp = identity_perm8();

    auto contents_at = [](const std::vector<std::size_t>& perm, uint64_t pos_mask) {
        std::vector<std::size_t> inv = invert_perm(perm);
        uint64_t out = 0;
        for (std::size_t p = 0; p < 8; ++p)
            if ((pos_mask >> p) & 1) out |= uint64_t(1) << inv[p];
        return out;
    };
    uint64_t data_contents = 0;
    for (const auto& gd : def->gadgets) {
        data_contents |= uint64_t(1) << gd.control;
        data_contents |= uint64_t(1) << gd.target;
    }
    uint64_t all_data = 0b10101010;   // contents 2,4,6,8 (1-based)

    for (const ScheduleFamily* fam : def->families) {
        for (const StepConn* sc : {&fam->ini, &fam->z1, &fam->x2, &fam->fin})
            validate_step_conn(*sc);
        rep.connections_valid = true;

        // candidate cumulative permutations per step; loose necessity filters,
        // the branch replay is the arbiter
        auto ini_ok = [&](const std::vector<std::size_t>& p) {
            for (uint8_t row : fam->ini.rows)
                if (row && (contents_at(p, row) & ~detail::kAuxContents)) return false;
            return true;
        };
        auto step_ok = [&](const std::vector<std::size_t>& p, const StepConn& sc, bool z_step,
                           const std::map<std::size_t, std::size_t>& aux_of) {
            std::map<std::size_t, std::size_t> need;   // control/target -> aux
            for (const auto& gd : def->gadgets)
                need[z_step ? gd.control : gd.target] = aux_of.at(gd.control);
            std::set<std::size_t> covered;
            for (uint8_t row : sc.rows) {
                if (!row) continue;
                uint64_t cs = contents_at(p, row);
                uint64_t data = cs & all_data;
                // a lone data content in a measured row is never recoverable
                if (std::popcount(cs) < 2 && data) return false;
                for (const auto& [role, aux] : need)
                    if ((data >> role) & 1) {
                        if (!((cs >> aux) & 1)) return false;
                        covered.insert(role);
                    }
            }
            return covered.size() == need.size();
        };
        auto fin_ok = [&](const std::vector<std::size_t>& p,
                          const std::set<std::size_t>& engaged) {
            uint64_t u = 0;
            for (uint8_t row : fam->fin.rows) {
                if (!row) continue;
                uint64_t cs = contents_at(p, row);
                if (cs & ~detail::kAuxContents) return false;
                u |= cs;
            }
            for (std::size_t a : engaged)
                if (!((u >> a) & 1)) return false;
            return true;
        };

        std::vector<std::vector<std::size_t>> cand0;
        if (def->fixed_perms) cand0 = {(*def->fixed_perms)[0]};
        else {
            // the tabulated prefix first, then the rest of the group
            if (!def->prefix.empty() && ini_ok(def->prefix)) cand0.push_back(def->prefix);
            for (const auto& p : g.elems)
                if (ini_ok(p) && (def->prefix.empty() || p != def->prefix)) cand0.push_back(p);
        }

        for (const auto& p0 : cand0) {
            // prepped auxiliaries
            uint64_t prepped = 0;
            for (uint8_t row : fam->ini.rows)
                if (row) prepped |= contents_at(p0, row);
            std::vector<std::size_t> prep_list;
            for (std::size_t a = 0; a < 8; ++a)
                if ((prepped >> a) & 1) prep_list.push_back(a);
            if (prep_list.size() < def->gadgets.size()) continue;

            std::vector<std::vector<std::size_t>> assignments;
            {
                std::vector<std::size_t> sel(prep_list.size());
                for (std::size_t i = 0; i < sel.size(); ++i) sel[i] = i;
                // all injective choices of an aux per gadget
                std::function<void(std::size_t, std::vector<std::size_t>&, uint64_t)> go =
                    [&](std::size_t gi, std::vector<std::size_t>& cur, uint64_t used) {
                        if (gi == def->gadgets.size()) { assignments.push_back(cur); return; }
                        for (std::size_t a : prep_list) {
                            if ((used >> a) & 1) continue;
                            cur.push_back(a);
                            go(gi + 1, cur, used | (uint64_t(1) << a));
                            cur.pop_back();
                        }
                    };
                std::vector<std::size_t> cur;
                go(0, cur, 0);
            }

            for (const auto& assign : assignments) {
                std::map<std::size_t, std::size_t> aux_of;
                std::set<std::size_t> engaged;
                for (std::size_t i = 0; i < def->gadgets.size(); ++i) {
                    aux_of[def->gadgets[i].control] = assign[i];
                    engaged.insert(assign[i]);
                }
                std::vector<std::vector<std::size_t>> c1, c2, c3;
                if (def->fixed_perms) {
                    c1 = {(*def->fixed_perms)[1]};
                    c2 = {(*def->fixed_perms)[2]};
                    c3 = {(*def->fixed_perms)[3]};
                } else {
                    for (const auto& p : g.elems) {
                        if (step_ok(p, fam->z1, true, aux_of)) c1.push_back(p);
                        if (step_ok(p, fam->x2, false, aux_of)) c2.push_back(p);
                        if (fin_ok(p, engaged)) c3.push_back(p);
                    }
                }
                for (const auto& p1 : c1) {
                    if (def->fixed_perms && !step_ok(p1, fam->z1, true, aux_of)) continue;
                    for (const auto& p2 : c2) {
                        for (const auto& p3 : c3) {
                            // compile actions
                            std::vector<detail::ReplayAction> acts;
                            auto add_perm = [&](const std::vector<std::size_t>& from,
                                                const std::vector<std::size_t>& to) {
                                std::vector<std::size_t> w = compose_perm(to, invert_perm(from));
                                if (w != idp) acts.push_back({detail::ReplayAction::Perm, w, 'Z', 0});
                            };
                            auto add_meas = [&](const StepConn& sc,
                                                const std::vector<std::size_t>& perm) {
                                (void)perm;
                                for (uint8_t row : sc.rows)
                                    if (row)
                                        acts.push_back({detail::ReplayAction::Meas, {}, sc.type,
                                                        uint64_t(row)});
                            };
                            add_perm(idp, p0);
                            add_meas(fam->ini, p0);
                            add_perm(p0, p1);
                            add_meas(fam->z1, p1);
                            add_perm(p1, p2);
                            add_meas(fam->x2, p2);
                            add_perm(p2, p3);
                            add_meas(fam->fin, p3);

                            // reference: CNOTs at home, then the final layout
                            StabTableau ref(12);
                            for (std::size_t d : {1, 3, 5, 7}) {
                                ref.h(d);
                                ref.cnot(d, 8 + d / 2);
                            }
                            for (const auto& gd : def->gadgets) ref.cnot(gd.control, gd.target);
                            std::vector<std::size_t> full = p3;
                            for (std::size_t q = 8; q < 12; ++q) full.push_back(q);
                            ref.permute(full);
                            uint64_t subset = 0;
                            std::vector<std::size_t> data_pos;
                            for (std::size_t d : {1, 3, 5, 7}) {
                                subset |= uint64_t(1) << p3[d];
                                data_pos.push_back(p3[d]);
                            }
                            subset |= uint64_t(0b1111) << 8;
                            auto ref_rows = ref.restricted_stabilizers(subset);

                            detail::ReplayResult rr =
                                detail::replay_all_branches(acts, ref_rows, data_pos, subset);
                            if (!rr.all_ok) continue;

                            rep.verified = true;
                            rep.branches = rr.branches;
                            rep.frame_rule_affine = rr.frame_affine;
                            rep.family = fam->name;
                            for (const auto& gd : def->gadgets)
                                rep.gadget_labels.push_back(
                                    "CNOT(" + std::to_string(gd.control + 1) + "->" +
                                    std::to_string(gd.target + 1) + ") via aux " +
                                    std::to_string(aux_of[gd.control] + 1));
                            auto word_str = [&](const std::vector<std::size_t>& from,
                                                const std::vector<std::size_t>& to) {
                                const auto* w = g.word_for(compose_perm(to, invert_perm(from)));
                                return w ? aut_word_string(*w) : std::string("(outside group)");
                            };
                            rep.step_words = {word_str(idp, p0), word_str(p0, p1),
                                              word_str(p1, p2), word_str(p2, p3)};
                            return rep;
                        }
                    }
                }
            }
        }
    }
    return rep;
}

// ------------------------------------------------------------------
// Paired phase gates from the fold gate
// ------------------------------------------------------------------

struct SisjReport {
    std::size_t i = 0, j = 0;        // 1-based logical indices
    bool verified = false;
    std::size_t branches = 0;
    std::vector<std::string> rounds;   // human-readable realization
    bool used_pauli_fixup = false;
    bool used_composition = false;
};

namespace detail {

// routing for one fold-gate round: content a goes to an S slot, content b to
// an S-dagger slot, the other diagonal slots hold |0bar> auxiliaries and each
// CZ pair couples one data content to a |0bar> auxiliary
inline std::optional<std::vector<std::size_t>> route_fold(std::size_t a, std::size_t b) {
    const AutGroup& g = AutGroup::instance();
    // logical S slots are the physical S-dagger clusters and vice versa
    const std::size_t s_slots[2] = {4, 7}, sdg_slots[2] = {0, 3};
    for (std::size_t si : s_slots)
        for (std::size_t sj : sdg_slots)
            for (const auto& p : g.elems) {
                if (p[a] != si || p[b] != sj) continue;
                std::vector<std::size_t> inv = invert_perm(p);
                std::size_t osi = si == 4 ? 7 : 4, osj = sj == 0 ? 3 : 0;
                if ((uint64_t(1) << inv[osi]) & 0b10101010) continue;
                if ((uint64_t(1) << inv[osj]) & 0b10101010) continue;
                auto cz_ok = [&](std::size_t q1, std::size_t q2) {
                    bool d1 = (uint64_t(1) << inv[q1]) & 0b10101010;
                    bool d2 = (uint64_t(1) << inv[q2]) & 0b10101010;
                    return d1 != d2;   // one data, one |0bar> auxiliary
                };
                if (cz_ok(1, 2) && cz_ok(5, 6)) return p;
            }
    return std::nullopt;
}

// one realization plan: route, fold gate, route back, optional Pauli fixup
struct FoldRound {
    std::vector<std::size_t> perm;
    bool pauli_fixup = false;      // apply Z_a Z_b afterwards (a,b contents)
    std::size_t a = 0, b = 0;      // contents placed on S / S-dagger slots
};

inline std::optional<std::vector<FoldRound>> plan_sisj(std::size_t i0, std::size_t j0) {
    if (auto p = route_fold(i0, j0)) return std::vector<FoldRound>{{*p, false, i0, j0}};
    if (auto p = route_fold(j0, i0)) return std::vector<FoldRound>{{*p, true, j0, i0}};
    // compose through a third data content: S_i S_j+ = (S_i S_k+)(S_k S_j+)
    for (std::size_t k : {1, 3, 5, 7}) {
        if (k == i0 || k == j0) continue;
        auto first = plan_sisj(i0, k);
        auto second = plan_sisj(k, j0);
        if (first && second && first->size() == 1 && second->size() == 1) {
            std::vector<FoldRound> out = *first;
            out.push_back((*second)[0]);
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Fault-tolerant S_i S_j^dagger on two data logicals: |0bar> initialization of
// the auxiliaries by Z-basis measurement rounds, automorphism routing, the
// fold gate, and exact sign-level channel verification against reference
// pairs.
inline SisjReport verify_sisj_gadget(std::size_t i, std::size_t j) {
    if (i == j || i % 2 || j % 2 || i < 2 || j < 2 || i > 8 || j > 8)
        throw std::invalid_argument("verify_sisj_gadget: i, j must be distinct data logicals");
    SisjReport rep;
    rep.i = i;
    rep.j = j;
    std::size_t i0 = i - 1, j0 = j - 1;

    auto plan = detail::plan_sisj(i0, j0);
    if (!plan) return rep;
    rep.used_composition = plan->size() > 1;
    for (const auto& r : *plan) {
        std::string s = "fold gate with S on logical " + std::to_string(r.a + 1) +
                        ", S-dagger on logical " + std::to_string(r.b + 1);
        if (r.pauli_fixup) s += ", then Z(" + std::to_string(r.a + 1) + ") Z(" + std::to_string(r.b + 1) + ")";
        rep.rounds.push_back(s);
        if (r.pauli_fixup) rep.used_pauli_fixup = true;
    }

    // reference: S_i S_j^dagger on the data contents at home positions
    StabTableau ref(12);
    for (std::size_t d : {1, 3, 5, 7}) {
        ref.h(d);
        ref.cnot(d, 8 + d / 2);
    }
    ref.s(i0);
    ref.sdg(j0);
    uint64_t subset = uint64_t(0b1111) << 8;
    for (std::size_t d : {1, 3, 5, 7}) subset |= uint64_t(1) << d;
    auto ref_rows = ref.restricted_stabilizers(subset);

    // |0bar> init: Z rounds on positions {1,3}, contents 1,3 then (after the
    // sector swap) 7,5; outcomes repaired with X
    const auto& a1 = aut_perm(0);
    const auto& a2 = aut_perm(1);
    std::vector<std::size_t> swap_half = compose_perm(a2, a1);

    std::function<void(StabTableau, std::size_t, std::size_t&, bool&)> run =
        [&](StabTableau t, std::size_t branch_bits, std::size_t& branches, bool& all_ok) {
            // init round A at identity layout, round B after the sector swap
            std::vector<int> forced;
            for (int b = 0; b < 4; ++b) forced.push_back(int((branch_bits >> b) & 1));
            int fi = 0;
            auto zfix = [&](StabTableau& tt, std::size_t pos) {
                auto o = tt.measure(PauliVec::single_z(12, pos), forced[fi]);
                if (!o.deterministic) ++fi;
                if (o.value == 1) tt.x(pos);
            };
            zfix(t, 0);
            zfix(t, 2);
            std::vector<std::size_t> full = swap_half;
            for (std::size_t q = 8; q < 12; ++q) full.push_back(q);
            t.permute(full);
            zfix(t, 0);
            zfix(t, 2);
            std::vector<std::size_t> back = invert_perm(swap_half);
            for (std::size_t q = 8; q < 12; ++q) back.push_back(q);
            t.permute(back);

            for (const auto& r : *plan) {
                std::vector<std::size_t> fp = r.perm;
                for (std::size_t q = 8; q < 12; ++q) fp.push_back(q);
                t.permute(fp);
                t.apply(cz_s_logical_word());
                std::vector<std::size_t> bp = invert_perm(r.perm);
                for (std::size_t q = 8; q < 12; ++q) bp.push_back(q);
                t.permute(bp);
                if (r.pauli_fixup) {
                    t.z(r.a);
                    t.z(r.b);
                }
            }
            ++branches;
            if (t.restricted_stabilizers(subset) != ref_rows) all_ok = false;
        };

    bool all_ok = true;
    std::size_t branches = 0;
    for (std::size_t bits = 0; bits < 16; ++bits) {
        StabTableau t(12);
        for (std::size_t d : {1, 3, 5, 7}) {
            t.h(d);
            t.cnot(d, 8 + d / 2);
        }
        for (std::size_t a : {0, 2, 4, 6}) t.h(a);   // auxiliaries start away from |0>
        run(std::move(t), bits, branches, all_ok);
        if (!all_ok) break;
    }
    rep.branches = branches;
    rep.verified = all_ok;
    return rep;
}

// ------------------------------------------------------------------
// Toolbox certificate
// ------------------------------------------------------------------

struct ToolboxCertificate {
    bool cz_s = false;
    bool automorphisms = false;
    bool h_swap = false;
    bool global_h = false;
    bool ppm_cnot_rule = false;
    std::size_t schedules_verified = 0, schedules_total = 0;
    std::size_t sisj_verified = 0, sisj_total = 0;
    GenerationResult m3_closure;
    bool m3_without_paired_phase_proper = false;
    GenerationResult m4_constructive;
    std::vector<std::string> generator_lines;
    std::vector<std::string> notes;

    bool ok() const {
        return cz_s && automorphisms && h_swap && global_h && ppm_cnot_rule &&
               schedules_verified == schedules_total && sisj_verified == sisj_total &&
               m3_closure.full && m3_without_paired_phase_proper && m4_constructive.full;
    }
};

inline ToolboxCertificate clifford_toolbox_certificate();

}  // namespace gadget
}  // namespace ccq
