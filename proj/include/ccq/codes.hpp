#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ccq/bitmatrix.hpp"
#include "ccq/ring.hpp"

namespace ccq {

// CSS code given by ring-level check matrices plus cached binary lifts.
struct CssCode {
    RingMatrix hx, hz;
    BitMatrix bhx, bhz;
    std::size_t n_phys = 0;
    std::size_t k_log = 0;

    std::size_t rank_x() const { return rank_x_; }
    std::size_t rank_z() const { return rank_z_; }

    static CssCode from_checks(RingMatrix hx, RingMatrix hz) {
        CssCode c;
        c.hx = std::move(hx);
        c.hz = std::move(hz);
        RingMatrix prod = c.hx * c.hz.conj_transpose();
        for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t cc = 0; cc < prod.cols(); ++cc)
                if (!prod.at(r, cc).is_zero())
                    throw std::invalid_argument("CssCode: H_X * H_Z^* != 0");
        c.bhx = c.hx.binary_lift();
        c.bhz = c.hz.binary_lift();
        c.n_phys = c.bhx.cols();
        c.rank_x_ = c.bhx.rank();
        c.rank_z_ = c.bhz.rank();
        c.k_log = c.n_phys - c.rank_x_ - c.rank_z_;
        return c;
    }

private:
    std::size_t rank_x_ = 0, rank_z_ = 0;
};

// Total complex of two length-1 complexes over R:
//   H_X = (H_a (x) I | I (x) H_b),  H_Z = (I (x) H_b^* | H_a^* (x) I).
inline CssCode lifted_product(const RingMatrix& ha, const RingMatrix& hb) {
    if (ha.l() != hb.l()) throw std::invalid_argument("lifted_product: mixed moduli");
    uint32_t l = ha.l();
    RingMatrix ia0 = RingMatrix::identity(l, ha.rows());
    RingMatrix ia1 = RingMatrix::identity(l, ha.cols());
    RingMatrix ib0 = RingMatrix::identity(l, hb.rows());
    RingMatrix ib1 = RingMatrix::identity(l, hb.cols());
    RingMatrix hx = RingMatrix::hstack(ha.kron(ib0), ia0.kron(hb));
    RingMatrix hz = RingMatrix::hstack(ia1.kron(hb.conj_transpose()), ha.conj_transpose().kron(ib1));
    return CssCode::from_checks(std::move(hx), std::move(hz));
}

inline RingMatrix ring_matrix_from_bits(const BitMatrix& m) {
    RingMatrix r(1, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) r.at(i, j) = RingElem::one(1);
    return r;
}

// Standard hypergraph product of two binary seeds: qubit blocks n_a*n_b and
// m_a*m_b, realized as the l=1 lifted product of (h_a, h_b^T).
inline CssCode hypergraph_product(const BitMatrix& ha, const BitMatrix& hb) {
    return lifted_product(ring_matrix_from_bits(ha), ring_matrix_from_bits(hb.transpose()));
}

struct SeedValidationReport {
    bool square = false;
    bool entries_ok = false;
    bool uniform_row_weight = false;
    bool uniform_col_weight = false;
    bool kernel_contains_chi = false;   // chi rows annihilate the seed
    bool kernel_is_chi_span = false;    // lifted kernel is exactly the chi span
    bool odd_prime_modulus = false;
    std::optional<std::string> cyclic_placement_warning;
    std::optional<std::string> kernel_excess_warning;

    // Some production 3x3 seeds carry extra kernel beyond the chi span while
    // the resulting code still has k = 2 n_a n_b (asserted in cc_code), so
    // exact kernel equality is a warning, not a gate.
    bool hard_ok() const {
        return square && entries_ok && uniform_row_weight && uniform_col_weight &&
               kernel_contains_chi && odd_prime_modulus;
    }
    std::string summary() const {
        auto yn = [](bool b) { return b ? "ok" : "FAIL"; };
        std::string s;
        s += std::string("square=") + yn(square);
        s += std::string(" entries=") + yn(entries_ok);
        s += std::string(" row-weight=") + yn(uniform_row_weight);
        s += std::string(" col-weight=") + yn(uniform_col_weight);
        s += std::string(" chi-kernel=") + yn(kernel_contains_chi);
        s += std::string(" modulus=") + yn(odd_prime_modulus);
        if (kernel_excess_warning) s += " warning: " + *kernel_excess_warning;
        if (cyclic_placement_warning) s += " warning: " + *cyclic_placement_warning;
        return s;
    }
};

inline bool is_odd_prime(uint64_t n) {
    if (n < 3 || n % 2 == 0) return false;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline SeedValidationReport validate_cc_seed(const RingMatrix& h) {
    SeedValidationReport rep;
    rep.square = h.rows() == h.cols();
    rep.odd_prime_modulus = is_odd_prime(h.l());

    rep.entries_ok = true;
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c) {
            EntryKind k = h.at(r, c).kind();
            if (k != EntryKind::zero && k != EntryKind::binomial) rep.entries_ok = false;
        }

    auto row_nz = [&](std::size_t r) {
        std::size_t n = 0;
        for (std::size_t c = 0; c < h.cols(); ++c) if (!h.at(r, c).is_zero()) ++n;
        return n;
    };
    auto col_nz = [&](std::size_t c) {
        std::size_t n = 0;
        for (std::size_t r = 0; r < h.rows(); ++r) if (!h.at(r, c).is_zero()) ++n;
        return n;
    };
    rep.uniform_row_weight = true;
    rep.uniform_col_weight = true;
    std::size_t w0 = h.rows() ? row_nz(0) : 0;
    for (std::size_t r = 0; r < h.rows(); ++r)
        if (row_nz(r) != w0 || row_nz(r) == 0) rep.uniform_row_weight = false;
    std::size_t c0 = h.cols() ? col_nz(0) : 0;
    for (std::size_t c = 0; c < h.cols(); ++c)
        if (col_nz(c) != c0 || col_nz(c) == 0) rep.uniform_col_weight = false;

    // chi rows must annihilate the seed; exact equality of the lifted kernel
    // with the chi span holds for most seeds and is reported either way
    if (rep.square && rep.entries_ok) {
        BitMatrix b = h.binary_lift();
        BitMatrix ker = b.transpose().kernel_basis();   // left kernel of B(h) as row vectors
        BitMatrix chi_rows = RingMatrix::diag(RingElem::all_ones(h.l()), h.rows()).binary_lift();
        rep.kernel_contains_chi = chi_rows.multiply(b).is_zero();
        rep.kernel_is_chi_span = ker.rank() == h.rows() && row_spans_equal(ker, chi_rows);
        if (rep.kernel_contains_chi && !rep.kernel_is_chi_span)
            rep.kernel_excess_warning =
                "lifted kernel strictly contains the chi span (dim " +
                std::to_string(ker.rank()) + " > " + std::to_string(h.rows()) + ")";
    }

    // soft: non-zero supports should be a cyclic shift pattern row to row
    if (rep.square && h.rows() > 1) {
        bool cyclic = false;
        for (std::size_t s = 0; s < h.cols() && !cyclic; ++s) {
            bool ok = true;
            for (std::size_t r = 0; r + 1 < h.rows() && ok; ++r)
                for (std::size_t c = 0; c < h.cols() && ok; ++c)
                    if (h.at(r, c).is_zero() != h.at(r + 1, (c + s) % h.cols()).is_zero()) ok = false;
            cyclic = ok;
        }
        if (!cyclic)
            rep.cyclic_placement_warning = "support pattern is not a row-to-row cyclic shift";
    }
    return rep;
}

// Clustered-cyclic code: square binomial seeds over F2[x]/(x^p+1), odd prime p.
struct CcCode {
    RingMatrix ha, hb;
    uint32_t p = 0;
    std::size_t na = 0, nb = 0;
    std::size_t wa = 0, wb = 0;       // uniform seed row weights (non-zero entries)
    CssCode code;

    std::size_t clusters() const { return 2 * na * nb; }
    std::size_t expected_k() const { return 2 * na * nb; }
    std::size_t check_weight() const { return 2 * (wa + wb); }
};

inline CcCode cc_code(const RingMatrix& ha, const RingMatrix& hb) {
    if (ha.l() != hb.l()) throw std::invalid_argument("cc_code: mixed moduli");
    SeedValidationReport ra = validate_cc_seed(ha);
    SeedValidationReport rb = validate_cc_seed(hb);
    if (!ra.hard_ok()) throw std::invalid_argument("cc_code: seed H_a invalid: " + ra.summary());
    if (!rb.hard_ok()) throw std::invalid_argument("cc_code: seed H_b invalid: " + rb.summary());

    CcCode cc;
    cc.ha = ha;
    cc.hb = hb;
    cc.p = ha.l();
    cc.na = ha.rows();
    cc.nb = hb.rows();
    for (std::size_t c = 0; c < ha.cols(); ++c) if (!ha.at(0, c).is_zero()) ++cc.wa;
    for (std::size_t c = 0; c < hb.cols(); ++c) if (!hb.at(0, c).is_zero()) ++cc.wb;
    cc.code = lifted_product(ha, hb);

    if (cc.code.n_phys != 2 * cc.p * cc.na * cc.nb)
        throw std::logic_error("cc_code: N != 2 p n_a n_b");
    if (cc.code.k_log != cc.expected_k())
        throw std::logic_error("cc_code: k (binary rank) != 2 n_a n_b");
    return cc;
}

struct CodeParams {
    std::size_t n = 0, k = 0, w_max = 0;
};

inline CodeParams css_params(const CssCode& code) {
    CodeParams p;
    p.n = code.n_phys;
    p.k = code.k_log;
    for (std::size_t r = 0; r < code.bhx.rows(); ++r) p.w_max = std::max(p.w_max, code.bhx.row_weight(r));
    for (std::size_t r = 0; r < code.bhz.rows(); ++r) p.w_max = std::max(p.w_max, code.bhz.row_weight(r));
    return p;
}

}  // namespace ccq
