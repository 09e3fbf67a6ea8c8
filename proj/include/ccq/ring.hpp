#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccq/bitmatrix.hpp"

namespace ccq {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

enum class EntryKind { zero, monomial, binomial, other };

// Element of F2[x]/(x^l + 1). coeff(k) is the coefficient of x^k.
class RingElem {
public:
    RingElem() = default;
    explicit RingElem(uint32_t l) : l_(l), bits_((l + 63) / 64, 0) {}

    static RingElem zero(uint32_t l) { return RingElem(l); }
    static RingElem one(uint32_t l) { return monomial(l, 0); }
    static RingElem monomial(uint32_t l, uint64_t k) {
        RingElem e(l);
        e.flip(k % l);
        return e;
    }
    // chi = 1 + x + ... + x^{l-1}; annihilates every binomial, lift has rank 1.
    static RingElem all_ones(uint32_t l) {
        RingElem e(l);
        for (uint32_t k = 0; k < l; ++k) e.flip(k);
        return e;
    }

    uint32_t l() const { return l_; }
    bool coeff(uint32_t k) const { return (bits_[k >> 6] >> (k & 63)) & 1u; }
    void flip(uint32_t k) { bits_[k >> 6] ^= uint64_t(1) << (k & 63); }

    bool is_zero() const {
        for (uint64_t w : bits_) if (w) return false;
        return true;
    }
    std::size_t weight() const {
        std::size_t c = 0;
        for (uint64_t w : bits_) c += std::popcount(w);
        return c;
    }
    EntryKind kind() const {
        switch (weight()) {
            case 0: return EntryKind::zero;
            case 1: return EntryKind::monomial;
            case 2: return EntryKind::binomial;
            default: return EntryKind::other;
        }
    }

    RingElem operator+(const RingElem& o) const {
        check_same_l_(o);
        RingElem e = *this;
        for (std::size_t i = 0; i < bits_.size(); ++i) e.bits_[i] ^= o.bits_[i];
        return e;
    }
    RingElem operator*(const RingElem& o) const {   // cyclic convolution mod 2
        check_same_l_(o);
        RingElem e(l_);
        for (uint32_t i = 0; i < l_; ++i)
            if (coeff(i))
                for (uint32_t j = 0; j < l_; ++j)
                    if (o.coeff(j)) e.flip((i + j) % l_);
        return e;
    }
    bool operator==(const RingElem& o) const { return l_ == o.l_ && bits_ == o.bits_; }

    // Canonical involution: x^k -> x^{(l-k) mod l}.
    RingElem involution() const {
        RingElem e(l_);
        for (uint32_t k = 0; k < l_; ++k)
            if (coeff(k)) e.flip((l_ - k) % l_);
        return e;
    }

    // Circulant lift, orientation pinned so that B(x)[i][i+1 mod l] = 1.
    void lift_into(BitMatrix& m, std::size_t r0, std::size_t c0) const {
        for (uint32_t k = 0; k < l_; ++k)
            if (coeff(k))
                for (uint32_t i = 0; i < l_; ++i)
                    m.set(r0 + i, c0 + (i + k) % l_, !m.get(r0 + i, c0 + (i + k) % l_));
    }

    // Ascending exponents joined by '+'; "0", "1", "x" special-cased.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (uint32_t k = 0; k < l_; ++k) {
            if (!coeff(k)) continue;
            if (!s.empty()) s += "+";
            if (k == 0) s += "1";
            else if (k == 1) s += "x";
            else s += "x^" + std::to_string(k);
        }
        return s;
    }

private:
    void check_same_l_(const RingElem& o) const {
        if (l_ != o.l_) throw std::invalid_argument("RingElem: mixed moduli");
    }
    uint32_t l_ = 0;
    std::vector<uint64_t> bits_;
};

// Grammar: poly := term ("+" term)* ; term := "0" | "1" | "x" | "x^" uint.
// Exponents reduce mod l. Whitespace around terms is ignored.
inline RingElem parse_poly(const std::string& text, uint32_t l) {
    if (l < 1) throw std::invalid_argument("parse_poly: modulus must be >= 1");
    RingElem e(l);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
    bool expect_term = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) {
            if (expect_term) throw ParseError("expected term", i);
            break;
        }
        if (!expect_term) {
            if (text[i] != '+') throw ParseError("expected '+'", i);
            ++i;
            expect_term = true;
            continue;
        }
        char c = text[i];
        if (c == '0') { ++i; }
        else if (c == '1') { ++i; e.flip(0); }
        else if (c == 'x') {
            ++i;
            uint64_t exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i >= text.size() || text[i] < '0' || text[i] > '9')
                    throw ParseError("expected exponent", i);
                exp = 0;
                std::size_t start = i;
                while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                    uint64_t d = uint64_t(text[i] - '0');
                    if (exp > (UINT64_MAX - d) / 10) throw ParseError("exponent overflow", start);
                    exp = exp * 10 + d;
                    ++i;
                }
            }
            e.flip(uint32_t(exp % l));
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        expect_term = false;
    }
    return e;
}

// Matrix over F2[x]/(x^l + 1); all entries share the modulus.
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(uint32_t l, std::size_t rows, std::size_t cols)
        : l_(l), rows_(rows), cols_(cols), e_(rows * cols, RingElem(l)) {}

    static RingMatrix identity(uint32_t l, std::size_t n) {
        RingMatrix m(l, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RingElem::one(l);
        return m;
    }
    static RingMatrix zero(uint32_t l, std::size_t rows, std::size_t cols) {
        return RingMatrix(l, rows, cols);
    }
    static RingMatrix diag(const RingElem& d, std::size_t n) {
        RingMatrix m(d.l(), n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = d;
        return m;
    }

    uint32_t l() const { return l_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    RingElem& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const RingElem& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool operator==(const RingMatrix& o) const {
        return l_ == o.l_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    RingMatrix operator+(const RingMatrix& o) const {
        check_shape_(o.rows_, o.cols_, o.l_);
        RingMatrix m = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = m.e_[i] + o.e_[i];
        return m;
    }
    RingMatrix operator*(const RingMatrix& o) const {
        if (l_ != o.l_) throw std::invalid_argument("RingMatrix: mixed moduli");
        if (cols_ != o.rows_) throw std::invalid_argument("RingMatrix: shape mismatch");
        RingMatrix m(l_, rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < o.cols_; ++c)
                for (std::size_t k = 0; k < cols_; ++k)
                    m.at(r, c) = m.at(r, c) + at(r, k) * o.at(k, c);
        return m;
    }

    // Transpose with entry-wise involution; lifts to the binary transpose.
    RingMatrix conj_transpose() const {
        RingMatrix m(l_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                m.at(c, r) = at(r, c).involution();
        return m;
    }

    RingMatrix kron(const RingMatrix& o) const {
        if (l_ != o.l_) throw std::invalid_argument("RingMatrix: mixed moduli");
        RingMatrix m(l_, rows_ * o.rows_, cols_ * o.cols_);
        for (std::size_t ra = 0; ra < rows_; ++ra)
            for (std::size_t ca = 0; ca < cols_; ++ca) {
                if (at(ra, ca).is_zero()) continue;
                for (std::size_t rb = 0; rb < o.rows_; ++rb)
                    for (std::size_t cb = 0; cb < o.cols_; ++cb)
                        m.at(ra * o.rows_ + rb, ca * o.cols_ + cb) =
                            m.at(ra * o.rows_ + rb, ca * o.cols_ + cb) + at(ra, ca) * o.at(rb, cb);
            }
        return m;
    }

    static RingMatrix hstack(const RingMatrix& a, const RingMatrix& b) {
        if (a.l_ != b.l_ || a.rows_ != b.rows_) throw std::invalid_argument("RingMatrix::hstack");
        RingMatrix m(a.l_, a.rows_, a.cols_ + b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
            for (std::size_t c = 0; c < b.cols_; ++c) m.at(r, a.cols_ + c) = b.at(r, c);
        }
        return m;
    }

    BitMatrix binary_lift() const {
        BitMatrix m(rows_ * l_, cols_ * l_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                at(r, c).lift_into(m, r * l_, c * l_);
        return m;
    }

private:
    void check_shape_(std::size_t r, std::size_t c, uint32_t l) const {
        if (l_ != l) throw std::invalid_argument("RingMatrix: mixed moduli");
        if (rows_ != r || cols_ != c) throw std::invalid_argument("RingMatrix: shape mismatch");
    }
    uint32_t l_ = 0;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<RingElem> e_;
};

inline RingMatrix parse_ring_matrix(const std::vector<std::vector<std::string>>& entries, uint32_t l) {
    if (entries.empty()) throw std::invalid_argument("parse_ring_matrix: empty");
    RingMatrix m(l, entries.size(), entries[0].size());
    for (std::size_t r = 0; r < entries.size(); ++r) {
        if (entries[r].size() != m.cols()) throw std::invalid_argument("parse_ring_matrix: ragged rows");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = parse_poly(entries[r][c], l);
    }
    return m;
}

}  // namespace ccq
