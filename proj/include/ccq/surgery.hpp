#pragma once

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccq/codes.hpp"
#include "ccq/distance.hpp"
#include "ccq/logical.hpp"
#include "ccq/parallel.hpp"

namespace ccq {

enum class MergeBasis { Z, X };

// Product connection code: an LP code of the same block shape as the data
// code, used as the gluing homomorphisms. 0/1 seed entries are required for
// cluster-level merge accounting; arbitrary ring entries are accepted in
// generic product mode (construction and CSS checks only).
struct ConnectionCode {
    RingMatrix ha_p, hb_p;
    RingMatrix hx_p, hz_p;
    bool zero_one = false;

    static ConnectionCode from_seeds(const RingMatrix& ha_p, const RingMatrix& hb_p) {
        if (ha_p.l() != hb_p.l()) throw std::invalid_argument("ConnectionCode: mixed moduli");
        ConnectionCode c;
        c.ha_p = ha_p;
        c.hb_p = hb_p;
        uint32_t l = ha_p.l();
        RingMatrix ia0 = RingMatrix::identity(l, ha_p.rows());
        RingMatrix ia1 = RingMatrix::identity(l, ha_p.cols());
        RingMatrix ib0 = RingMatrix::identity(l, hb_p.rows());
        RingMatrix ib1 = RingMatrix::identity(l, hb_p.cols());
        c.hx_p = RingMatrix::hstack(ha_p.kron(ib0), ia0.kron(hb_p));
        c.hz_p = RingMatrix::hstack(ia1.kron(hb_p.conj_transpose()),
                                    ha_p.conj_transpose().kron(ib1));
        c.zero_one = true;
        for (std::size_t r = 0; r < ha_p.rows() && c.zero_one; ++r)
            for (std::size_t cc = 0; cc < ha_p.cols(); ++cc) {
                EntryKind k = ha_p.at(r, cc).kind();
                if (k != EntryKind::zero && !(k == EntryKind::monomial && ha_p.at(r, cc).coeff(0)))
                    { c.zero_one = false; break; }
            }
        for (std::size_t r = 0; r < hb_p.rows() && c.zero_one; ++r)
            for (std::size_t cc = 0; cc < hb_p.cols(); ++cc) {
                EntryKind k = hb_p.at(r, cc).kind();
                if (k != EntryKind::zero && !(k == EntryKind::monomial && hb_p.at(r, cc).coeff(0)))
                    { c.zero_one = false; break; }
            }
        return c;
    }

    // All-zero connection of the same shape (two disjoint patches).
    static ConnectionCode zero_like(const CcCode& cc) {
        return from_seeds(RingMatrix::zero(cc.p, cc.na, cc.na),
                          RingMatrix::zero(cc.p, cc.nb, cc.nb));
    }
};

// Merged code of the two-patch complex. Column order is (data | auxiliary).
//   Z-type: H~_X = [[H_X, H_X'], [0, H_X]],  H~_Z = [[H_Z, 0], [H_Z', H_Z]]
//   X-type: the conjugate-transpose diagram with the patch roles swapped.
struct MergedCode {
    MergeBasis basis = MergeBasis::Z;
    RingMatrix hx, hz;
    BitMatrix bhx, bhz;
    std::size_t n_phys = 0;
};

inline void check_commuting_square(const CssCode& code, const ConnectionCode& conn) {
    if (conn.hx_p.rows() != code.hx.rows() || conn.hx_p.cols() != code.hx.cols() ||
        conn.hz_p.rows() != code.hz.rows() || conn.hz_p.cols() != code.hz.cols())
        throw std::invalid_argument("connection code shape mismatch");
    RingMatrix lhs = code.hx * conn.hz_p.conj_transpose();
    RingMatrix rhs = conn.hx_p * code.hz.conj_transpose();
    if (!(lhs == rhs))
        throw std::logic_error("commuting square H_X H_Z'^* = H_X' H_Z^* failed");
}

inline RingMatrix ring_vstack(const RingMatrix& a, const RingMatrix& b) {
    if (a.l() != b.l() || a.cols() != b.cols()) throw std::invalid_argument("ring_vstack");
    RingMatrix m(a.l(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m.at(a.rows() + r, c) = b.at(r, c);
    return m;
}

inline MergedCode merge_complex(const CssCode& code, const ConnectionCode& conn,
                                MergeBasis basis = MergeBasis::Z) {
    check_commuting_square(code, conn);
    uint32_t l = code.hx.l();
    RingMatrix zx = RingMatrix::zero(l, code.hx.rows(), code.hx.cols());
    RingMatrix zz = RingMatrix::zero(l, code.hz.rows(), code.hz.cols());
    MergedCode m;
    m.basis = basis;
    if (basis == MergeBasis::Z) {
        m.hx = ring_vstack(RingMatrix::hstack(code.hx, conn.hx_p),
                           RingMatrix::hstack(zx, code.hx));
        m.hz = ring_vstack(RingMatrix::hstack(code.hz, zz),
                           RingMatrix::hstack(conn.hz_p, code.hz));
    } else {
        // X-type merges: the conjugate-transpose diagram, patch roles swapped
        m.hx = ring_vstack(RingMatrix::hstack(code.hx, zx),
                           RingMatrix::hstack(conn.hx_p, code.hx));
        m.hz = ring_vstack(RingMatrix::hstack(code.hz, conn.hz_p),
                           RingMatrix::hstack(zz, code.hz));
    }
    m.bhx = m.hx.binary_lift();
    m.bhz = m.hz.binary_lift();
    m.n_phys = m.bhx.cols();
    if (!m.bhx.multiply(m.bhz.transpose()).is_zero())
        throw std::logic_error("merged code violates the CSS condition");
    return m;
}

// Number of independent logical PPMs in a surgery round, by the
// image-dimension formula M = dim B(f_1)[ker B(d_1)]. For 0/1 connections the
// cluster-level rank of the 0/1 coefficient matrix must agree.
inline std::size_t count_merges(const CssCode& code, const ConnectionCode& conn,
                                MergeBasis basis = MergeBasis::Z) {
    const RingMatrix& hp = basis == MergeBasis::Z ? conn.hz_p : conn.hx_p;
    const RingMatrix& h = basis == MergeBasis::Z ? code.hz : code.hx;
    // image formula: rows spanning ker B(h^*) (= left kernel of B(h)), pushed
    // through the connection checks
    BitMatrix bh = h.binary_lift();
    BitMatrix left_kernel = bh.transpose().kernel_basis();
    BitMatrix bhp = hp.binary_lift();
    std::size_t m_image = left_kernel.multiply(bhp).rank();

    if (conn.zero_one) {
        BitMatrix coeff(hp.rows(), hp.cols());
        for (std::size_t r = 0; r < hp.rows(); ++r)
            for (std::size_t c = 0; c < hp.cols(); ++c)
                if (!hp.at(r, c).is_zero()) coeff.set(r, c, true);
        if (coeff.rank() != m_image)
            throw std::logic_error("merge count: image formula disagrees with rank formula");
    }
    return m_image;
}

struct MergeTarget {
    std::size_t row = 0;                 // ring-level row of the connection check matrix
    std::set<std::size_t> logicals;      // 1-based logical indices (left sector first)
};

// Per-row merge targets of a 0/1 connection: multiplying a merged-check row
// block by chi annihilates the binomial half and turns each 1 into chi, so
// the merged observable is the product of the clustered logicals it covers.
inline std::vector<MergeTarget> merge_targets(const CcCode& cc, const ConnectionCode& conn,
                                              MergeBasis basis = MergeBasis::Z) {
    if (!conn.zero_one)
        throw std::invalid_argument("merge_targets requires 0/1 connection entries");
    const RingMatrix& hp = basis == MergeBasis::Z ? conn.hz_p : conn.hx_p;
    const RingMatrix& h = basis == MergeBasis::Z ? cc.code.hz : cc.code.hx;
    RingElem chi = RingElem::all_ones(cc.p);
    BitMatrix block = RingMatrix::hstack(hp, h).binary_lift();

    std::vector<MergeTarget> out;
    for (std::size_t r = 0; r < hp.rows(); ++r) {
        MergeTarget t;
        t.row = r;
        bool nonzero = false;
        for (std::size_t c = 0; c < hp.cols(); ++c) {
            RingElem prod = chi * hp.at(r, c);
            if (!prod.is_zero()) {
                if (!(prod == chi)) throw std::logic_error("merge_targets: non-chi product");
                t.logicals.insert(c + 1);
                nonzero = true;
            }
        }
        for (std::size_t c = 0; c < h.cols(); ++c)
            if (!(chi * h.at(r, c)).is_zero())
                throw std::logic_error("merge_targets: data-check half not annihilated by chi");
        if (!nonzero) continue;

        // binary cross-check: the sum of the p lifted rows of this block row
        // equals the joint logical support on the connection half
        BitVec sum(block.cols());
        for (uint32_t q = 0; q < cc.p; ++q) sum.xor_in(block.row(r * cc.p + q));
        BitVec expect(block.cols());
        for (std::size_t idx : t.logicals)
            for (uint32_t q = 0; q < cc.p; ++q) expect.set((idx - 1) * cc.p + q, true);
        if (!(sum == expect))
            throw std::logic_error("merge_targets: lifted row sum != joint logical support");
        out.push_back(std::move(t));
    }
    return out;
}

struct MergeReport {
    std::size_t merges = 0;        // M
    std::size_t k_tilde = 0;       // logical qubits in the merged code
    std::size_t r_tilde = 0;       // gauge qubits in the merged code
    std::vector<MergeTarget> targets;
    bool maximally_parallel = false;
};

// dim ker [[A,B],[0,A]] computed by the reduction to rank [A | B K], where K
// is a kernel basis of A. Cross-checked in tests against the direct kernel.
inline std::size_t block_kernel_dim(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix k = a.kernel_basis();          // rows span right kernel of a
    BitMatrix bk(a.rows(), k.rows());        // B * K^T
    BitMatrix kt = k.transpose();
    bk = b.multiply(kt);
    std::size_t ra = a.rank();
    std::size_t dimker = a.cols() - ra;
    return 2 * dimker + ra - BitMatrix::hstack(a, bk).rank();
}

inline MergeReport merged_counts(const CcCode& cc, const ConnectionCode& conn) {
    MergeReport rep;
    rep.merges = count_merges(cc.code, conn, MergeBasis::Z);
    rep.targets = merge_targets(cc, conn, MergeBasis::Z);
    std::size_t k = cc.code.k_log;
    rep.k_tilde = k - rep.merges;
    std::size_t mx = count_merges(cc.code, conn, MergeBasis::X);
    rep.r_tilde = k - mx;
    rep.maximally_parallel = rep.merges == cc.na * cc.nb;

    // cross-check 1: k~ = k + dim ker B(H~_Z)^T - 2 dim ker B(H_Z)^T via the
    // block-kernel identity
    BitMatrix a = cc.code.bhz.transpose();
    BitMatrix b = conn.hz_p.binary_lift().transpose();
    std::size_t dk_merged = block_kernel_dim(a, b);
    std::size_t dk_data = a.cols() - a.rank();
    std::size_t k_tilde_direct = k + dk_merged - 2 * dk_data;
    if (k_tilde_direct != rep.k_tilde)
        throw std::logic_error("merged_counts: k~ cross-check failed");

    // cross-check 2: k~ + r~ equals the full homology dimension of the merged code
    MergedCode m = merge_complex(cc.code, conn, MergeBasis::Z);
    std::size_t h1 = m.n_phys - m.bhx.rank() - m.bhz.rank();
    if (h1 != rep.k_tilde + rep.r_tilde)
        throw std::logic_error("merged_counts: k~ + r~ != dim H_1 of merged code");
    return rep;
}

inline bool is_compatible(std::size_t alpha, std::size_t beta, std::size_t na, std::size_t nb) {
    std::size_t half = na * nb;
    if (alpha == beta || alpha < 1 || beta < 1 || alpha > 2 * half || beta > 2 * half)
        return false;
    bool la = alpha <= half, lb = beta <= half;
    if (la != lb) return true;    // different sectors
    std::size_t pa = (alpha - 1) % half, pb = (beta - 1) % half;
    std::size_t ra = pa / nb, ca = pa % nb;
    std::size_t rb = pb / nb, cb = pb % nb;
    return ra == rb || ca == cb;  // aligned within the cluster grid
}

struct PairConnection {
    ConnectionCode conn;
    std::vector<std::size_t> designated_rows;   // rows whose product realizes the pair
    std::set<std::size_t> pair;                 // {alpha, beta}
};

struct IncompatiblePair : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Connection realizing the joint Z measurement of two clustered logicals,
// following the sector / alignment case split. The designated row (or row
// pair) multiplies to exactly the requested support; other non-zero rows may
// perform additional merges, which is inherent to the product construction.
inline PairConnection pair_connection(const CcCode& cc, std::size_t alpha, std::size_t beta) {
    if (!is_compatible(alpha, beta, cc.na, cc.nb))
        throw IncompatiblePair("logicals " + std::to_string(alpha) + "," + std::to_string(beta) +
                               " are in the same sector and not aligned");
    std::size_t half = cc.na * cc.nb;
    auto coords = [&](std::size_t idx) {
        std::size_t p0 = (idx - 1) % half;
        return std::pair<std::size_t, std::size_t>{p0 / cc.nb, p0 % cc.nb};   // (a, b), 0-based
    };
    RingMatrix hap = RingMatrix::zero(cc.p, cc.na, cc.na);
    RingMatrix hbp = RingMatrix::zero(cc.p, cc.nb, cc.nb);
    RingElem one = RingElem::one(cc.p);
    std::vector<std::size_t> rows;

    bool la = alpha <= half, lb = beta <= half;
    auto [aa, ab] = coords(alpha);
    auto [ba, bb] = coords(beta);
    if (la != lb) {
        // cross-sector: (H_a'^*)[aL][aR] = 1 and (H_b'^*)[bR][bL] = 1 are the
        // only entries; row (aL, bR) then has left leg alpha and right leg beta
        std::size_t a_l = la ? aa : ba, b_l = la ? ab : bb;
        std::size_t a_r = la ? ba : aa, b_r = la ? bb : ab;
        hap.at(a_r, a_l) = one;          // (H_a'^*)[a_l][a_r] = 1
        hbp.at(b_l, b_r) = one;          // (H_b'^*)[b_r][b_l] = 1
        rows.push_back(a_l * cc.nb + b_r);
    } else if (la) {
        if (aa == ba) {
            // left sector, same a row: one H_b'^* row with two ones
            hbp.at(ab, 0) = one;         // (H_b'^*)[0][ab] = 1
            hbp.at(bb, 0) = one;
            rows.push_back(aa * cc.nb + 0);
        } else {
            // left sector, same b column: two designated rows sharing a right leg
            hap.at(0, aa) = one;
            hap.at(0, ba) = one;
            hbp.at(ab, 0) = one;
            rows.push_back(aa * cc.nb + 0);
            rows.push_back(ba * cc.nb + 0);
        }
    } else {
        if (bb == ab && aa != ba) {
            // right sector, same b column: one H_a'^* row with two ones
            hap.at(aa, 0) = one;         // (H_a'^*)[0][aa] = 1
            hap.at(ba, 0) = one;
            rows.push_back(0 * cc.nb + ab);
        } else {
            // right sector, same a row: two designated rows sharing a left leg
            hap.at(aa, 0) = one;
            hbp.at(0, ab) = one;
            hbp.at(0, bb) = one;
            rows.push_back(0 * cc.nb + ab);
            rows.push_back(0 * cc.nb + bb);
        }
    }

    PairConnection pc;
    pc.conn = ConnectionCode::from_seeds(hap, hbp);
    pc.designated_rows = rows;
    pc.pair = {alpha, beta};

    // verify: the designated rows' targets multiply to exactly {alpha, beta}
    std::vector<MergeTarget> tg = merge_targets(cc, pc.conn, MergeBasis::Z);
    std::set<std::size_t> got;
    for (std::size_t r : rows) {
        bool found = false;
        for (const auto& t : tg)
            if (t.row == r) {
                for (std::size_t idx : t.logicals) {
                    if (got.count(idx)) got.erase(idx);   // symmetric difference
                    else got.insert(idx);
                }
                found = true;
            }
        if (!found) throw std::logic_error("pair_connection: designated row has no merge");
    }
    if (got != pc.pair) throw std::logic_error("pair_connection: realized pair mismatch");
    return pc;
}

struct SurgeryStage {
    std::string label;
    BitMatrix stab_x, stab_z;
};

struct SurgeryTrace {
    std::vector<SurgeryStage> stages;
    std::size_t d_rounds = 0;       // merged-code stabilizer rounds before the split
    char split_basis = 'X';
};

// Stabilizer evolution of the Z-type surgery round: initialization, new-Z
// measurement, new-X measurement. Every stage is checked abelian; stage 2's
// auxiliary X generators span the commutant of the auxiliary Z checks.
inline SurgeryTrace surgery_trace(const CssCode& code, const ConnectionCode& conn,
                                  std::size_t d_rounds = 0) {
    MergedCode m = merge_complex(code, conn, MergeBasis::Z);
    std::size_t n = code.n_phys;
    const BitMatrix& bhx = code.bhx;
    const BitMatrix& bhz = code.bhz;
    BitMatrix bhx_p = conn.hx_p.binary_lift();
    BitMatrix bhz_p = conn.hz_p.binary_lift();

    SurgeryTrace tr;
    tr.d_rounds = d_rounds;

    BitMatrix x1 = BitMatrix::block2x2(bhx, BitMatrix::zero(bhx.rows(), n),
                                       BitMatrix::zero(n, n), BitMatrix::identity(n));
    BitMatrix z1 = BitMatrix::hstack(bhz, BitMatrix::zero(bhz.rows(), n));
    tr.stages.push_back({"initialize auxiliary patch in |+>^N", x1, z1});

    BitMatrix g = cokernel_matrix(bhz);   // rows span ker B(H_Z); right kernel = rowspan B(H_Z)
    BitMatrix x2 = BitMatrix::block2x2(bhx, bhx_p, BitMatrix::zero(g.rows(), n), g);
    tr.stages.push_back({"measure new Z stabilizers", x2, m.bhz});

    tr.stages.push_back({"measure new X stabilizers", m.bhx, m.bhz});

    for (const auto& st : tr.stages)
        if (!st.stab_x.multiply(st.stab_z.transpose()).is_zero())
            throw std::logic_error("surgery_trace: stage '" + st.label + "' is not abelian");
    return tr;
}

struct FtScanOptions {
    bool exhaustive = false;
    uint64_t trials = 10000;
    uint64_t seed = 1;
    unsigned jobs = 1;
};

struct FtScanEntry {
    std::size_t index = 0;          // connection index (H_a' bits * 16 + H_b' bits)
    std::size_t merges = 0;
    bool pass = false;              // no logical below the data distance found
    int found_weight = -1;          // weight of a violating logical, if any
};

struct FtScanReport {
    std::size_t data_distance = 0;
    bool exhaustive = false;
    std::size_t scanned = 0;
    std::size_t passed = 0;
    int min_merged_distance = -1;   // min certified/observed merged distance
    std::vector<FtScanEntry> entries;
    bool all_pass() const { return passed == scanned; }
};

inline ConnectionCode connection_from_bits(const CcCode& cc, unsigned a_bits, unsigned b_bits) {
    RingMatrix hap = RingMatrix::zero(cc.p, cc.na, cc.na);
    RingMatrix hbp = RingMatrix::zero(cc.p, cc.nb, cc.nb);
    unsigned i = 0;
    for (std::size_t r = 0; r < cc.na; ++r)
        for (std::size_t c = 0; c < cc.na; ++c, ++i)
            if ((a_bits >> i) & 1u) hap.at(r, c) = RingElem::one(cc.p);
    i = 0;
    for (std::size_t r = 0; r < cc.nb; ++r)
        for (std::size_t c = 0; c < cc.nb; ++c, ++i)
            if ((b_bits >> i) & 1u) hbp.at(r, c) = RingElem::one(cc.p);
    return ConnectionCode::from_seeds(hap, hbp);
}

// Distance scan over every 0/1 connection of a k=8 family code (2^(4+4)
// choices), checking that no merged code drops below the data distance.
inline FtScanReport ft_scan(const CcCode& cc, std::size_t data_distance,
                            const FtScanOptions& opt) {
    if (cc.na != 2 || cc.nb != 2)
        throw std::invalid_argument("ft_scan: exhaustive 256-connection scan needs n_a = n_b = 2");
    FtScanReport rep;
    rep.data_distance = data_distance;
    rep.exhaustive = opt.exhaustive;
    rep.entries.resize(256);
    std::vector<int> upper(256, -1);

    auto run_one = [&](std::size_t idx) {
        unsigned a_bits = unsigned(idx) >> 4, b_bits = unsigned(idx) & 15u;
        ConnectionCode conn = connection_from_bits(cc, a_bits, b_bits);
        MergedCode m = merge_complex(cc.code, conn, MergeBasis::Z);
        FtScanEntry e;
        e.index = idx;
        e.merges = count_merges(cc.code, conn, MergeBasis::Z);
        e.pass = true;
        if (opt.exhaustive) {
            LogicalSearchResult z = exhaustive_logical_search(m.bhx, m.bhz, data_distance - 1);
            LogicalSearchResult x = exhaustive_logical_search(m.bhz, m.bhx, data_distance - 1);
            if (z.found || x.found) {
                e.pass = false;
                e.found_weight = int(z.found ? z.weight : x.weight);
                upper[idx] = e.found_weight;
            } else {
                // some cluster representative survives as a weight-p witness:
                // a non-stabilizer kernel element pins the merged distance
                RowBasis span_z(m.bhz);
                for (std::size_t cl = 0; cl < m.n_phys / cc.p && upper[idx] < 0; ++cl) {
                    BitVec w(m.n_phys);
                    for (uint32_t q = 0; q < cc.p; ++q) w.set(cl * cc.p + q, true);
                    if (!span_z.contains(w)) upper[idx] = int(cc.p);
                }
            }
        } else {
            LogicalSearchResult z = randomized_logical_search(m.bhx, m.bhz, opt.trials,
                                                              opt.seed * 512 + idx * 2 + 0, 1);
            LogicalSearchResult x = randomized_logical_search(m.bhz, m.bhx, opt.trials,
                                                              opt.seed * 512 + idx * 2 + 1, 1);
            if (z.found && z.weight < data_distance) { e.pass = false; e.found_weight = int(z.weight); }
            if (x.found && x.weight < data_distance) { e.pass = false; e.found_weight = int(x.weight); }
            if (z.found) upper[idx] = int(z.weight);
            if (x.found && (upper[idx] < 0 || int(x.weight) < upper[idx])) upper[idx] = int(x.weight);
        }
        rep.entries[idx] = e;
    };
    parallel_for(256, opt.jobs, run_one);

    rep.scanned = rep.entries.size();
    for (const auto& e : rep.entries) {
        if (e.pass) ++rep.passed;
        if (upper[e.index] >= 0 &&
            (rep.min_merged_distance < 0 || upper[e.index] < rep.min_merged_distance))
            rep.min_merged_distance = upper[e.index];
    }
    return rep;
}

struct OverheadReport {
    std::size_t space = 0;          // 2N auxiliary qubits
    std::size_t space_data = 0;     // N data auxiliaries
    std::size_t space_check = 0;    // N check auxiliaries
    double time_per_merge = 0;      // d / M; equals 2d/k at maximal parallelism
    double spacetime = 0;
    bool extrapolated = false;      // M below the maximal-parallel round
};

inline OverheadReport overhead_report(const CcCode& cc, std::size_t merges, std::size_t distance) {
    if (merges < 1 || merges > cc.expected_k() / 2)
        throw std::invalid_argument("overhead_report: need 1 <= M <= k/2");
    OverheadReport r;
    r.space_data = cc.code.n_phys;
    r.space_check = cc.code.n_phys;
    r.space = 2 * cc.code.n_phys;
    r.time_per_merge = double(distance) / double(merges);
    r.spacetime = double(r.space) * r.time_per_merge;
    r.extrapolated = merges != cc.expected_k() / 2;
    return r;
}

struct BoostReport {
    uint64_t total_configs = 0;
    uint64_t boostable = 0;
    uint64_t usable_connections = 0;   // distinct single/pair target patterns
};

// Census of non-overlapping single/pair Z-measurement layers over the eight
// logical qubits. A configuration is boostable when some 0/1 connection
// realizes a non-empty subset of it as exactly its merge rows, with nothing
// measured outside the configuration.
inline BoostReport boost_census(const CcCode& cc) {
    if (cc.expected_k() != 8)
        throw std::invalid_argument("boost_census: requires a k = 8 code");
    BoostReport rep;

    // target patterns of the 255 non-trivial connections, deduplicated;
    // patterns containing a row of more than two logicals cannot sit inside a
    // single/pair configuration
    std::set<std::set<std::set<std::size_t>>> patterns;
    for (unsigned a_bits = 0; a_bits < 16; ++a_bits)
        for (unsigned b_bits = 0; b_bits < 16; ++b_bits) {
            if (a_bits == 0 && b_bits == 0) continue;
            ConnectionCode conn = connection_from_bits(cc, a_bits, b_bits);
            std::vector<MergeTarget> tg = merge_targets(cc, conn, MergeBasis::Z);
            if (tg.empty()) continue;
            std::set<std::set<std::size_t>> pat;
            bool usable = true;
            for (const auto& t : tg) {
                if (t.logicals.size() > 2) { usable = false; break; }
                pat.insert(t.logicals);
            }
            if (usable) patterns.insert(std::move(pat));
        }
    rep.usable_connections = patterns.size();

    // enumerate configurations: disjoint subsets of {1..8}, each a single or a
    // pair, non-empty overall
    std::vector<std::set<std::set<std::size_t>>> configs;
    std::vector<std::set<std::size_t>> cur;
    std::function<void(std::size_t, uint32_t)> gen = [&](std::size_t next, uint32_t used) {
        if (!cur.empty()) configs.emplace_back(cur.begin(), cur.end());
        for (std::size_t i = next; i <= 8; ++i) {
            if ((used >> i) & 1u) continue;
            cur.push_back({i});
            gen(i + 1, used | (1u << i));
            cur.pop_back();
            for (std::size_t j = i + 1; j <= 8; ++j) {
                if ((used >> j) & 1u) continue;
                cur.push_back({i, j});
                gen(i + 1, used | (1u << i) | (1u << j));
                cur.pop_back();
            }
        }
    };
    gen(1, 0);
    rep.total_configs = configs.size();

    for (const auto& f : configs) {
        for (const auto& pat : patterns) {
            bool sub = true;
            for (const auto& meas : pat)
                if (!f.count(meas)) { sub = false; break; }
            if (sub) { ++rep.boostable; break; }
        }
    }
    return rep;
}

}  // namespace ccq
