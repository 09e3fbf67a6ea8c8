#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccq {

// Dense bit vector over F2, word-packed. Bits beyond size() are kept zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        if (v) w_[i >> 6] |= uint64_t(1) << (i & 63);
        else   w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    std::size_t weight() const {
        std::size_t c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool is_zero() const {
        for (uint64_t w : w_) if (w) return false;
        return true;
    }
    void xor_in(const BitVec& o) {
        assert(o.n_ == n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    }
    bool dot(const BitVec& o) const {   // parity of <this, o>
        assert(o.n_ == n_);
        uint64_t acc = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
        return std::popcount(acc) & 1u;
    }
    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

    std::vector<uint64_t>& words() { return w_; }
    const std::vector<uint64_t>& words() const { return w_; }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i) if (get(i)) s[i] = '1';
        return s;
    }
    static BitVec from_string(const std::string& s) {
        BitVec v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] == '1') v.set(i, true);
        return v;
    }

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Dense row-major bit matrix over F2. Padding bits in each row stay zero,
// so word-level XOR and popcount are always safe.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }
    static BitMatrix zero(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        uint64_t& word = w_[r * wpr_ + (c >> 6)];
        if (v) word |= uint64_t(1) << (c & 63);
        else   word &= ~(uint64_t(1) << (c & 63));
    }

    const uint64_t* row_ptr(std::size_t r) const { return w_.data() + r * wpr_; }
    uint64_t* row_ptr(std::size_t r) { return w_.data() + r * wpr_; }
    std::size_t words_per_row() const { return wpr_; }

    void xor_rows(std::size_t dst, std::size_t src) {
        uint64_t* d = row_ptr(dst);
        const uint64_t* s = row_ptr(src);
        for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        uint64_t* pa = row_ptr(a);
        uint64_t* pb = row_ptr(b);
        for (std::size_t i = 0; i < wpr_; ++i) std::swap(pa[i], pb[i]);
    }
    void xor_row_from(std::size_t dst, const BitVec& v) {
        assert(v.size() == cols_);
        uint64_t* d = row_ptr(dst);
        for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= v.words()[i];
    }

    BitVec row(std::size_t r) const {
        BitVec v(cols_);
        std::memcpy(v.words().data(), row_ptr(r), wpr_ * sizeof(uint64_t));
        return v;
    }
    void set_row(std::size_t r, const BitVec& v) {
        assert(v.size() == cols_);
        std::memcpy(row_ptr(r), v.words().data(), wpr_ * sizeof(uint64_t));
    }
    std::size_t row_weight(std::size_t r) const {
        const uint64_t* p = row_ptr(r);
        std::size_t c = 0;
        for (std::size_t i = 0; i < wpr_; ++i) c += std::popcount(p[i]);
        return c;
    }
    bool row_is_zero(std::size_t r) const {
        const uint64_t* p = row_ptr(r);
        for (std::size_t i = 0; i < wpr_; ++i) if (p[i]) return false;
        return true;
    }
    bool is_zero() const {
        for (uint64_t w : w_) if (w) return false;
        return true;
    }

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
    }

    BitMatrix operator+(const BitMatrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        BitMatrix m = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) m.w_[i] ^= o.w_[i];
        return m;
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    BitMatrix multiply(const BitMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("BitMatrix::multiply: shape mismatch");
        BitMatrix m(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            uint64_t* dst = m.row_ptr(r);
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) {
                    const uint64_t* src = o.row_ptr(c);
                    for (std::size_t i = 0; i < o.wpr_; ++i) dst[i] ^= src[i];
                }
        }
        return m;
    }
    BitMatrix operator*(const BitMatrix& o) const { return multiply(o); }

    // v * M for a row vector v.
    BitVec apply_left(const BitVec& v) const {
        assert(v.size() == rows_);
        BitVec out(cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            if (v.get(r)) out.xor_in(row(r));
        return out;
    }
    // M * v^T, returned as a vector of length rows().
    BitVec apply_right(const BitVec& v) const {
        assert(v.size() == cols_);
        BitVec out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            const uint64_t* p = row_ptr(r);
            uint64_t acc = 0;
            for (std::size_t i = 0; i < wpr_; ++i) acc ^= p[i] & v.words()[i];
            if (std::popcount(acc) & 1u) out.set(r, true);
        }
        return out;
    }

    static BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
        BitMatrix m(a.rows_, a.cols_ + b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t c = 0; c < a.cols_; ++c) if (a.get(r, c)) m.set(r, c, true);
            for (std::size_t c = 0; c < b.cols_; ++c) if (b.get(r, c)) m.set(r, a.cols_ + c, true);
        }
        return m;
    }
    static BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
        if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: col mismatch");
        BitMatrix m(a.rows_ + b.rows_, a.cols_);
        std::memcpy(m.w_.data(), a.w_.data(), a.w_.size() * sizeof(uint64_t));
        std::memcpy(m.w_.data() + a.w_.size(), b.w_.data(), b.w_.size() * sizeof(uint64_t));
        return m;
    }
    // [[a, b], [c, d]]; absent blocks are zero fill.
    static BitMatrix block2x2(const BitMatrix& a, const BitMatrix& b,
                              const BitMatrix& c, const BitMatrix& d) {
        return vstack(hstack(a, b), hstack(c, d));
    }

    // Columns permuted so that column j of the result is column perm_inv... we
    // use the convention: support s maps to s' with s'[perm[c]] = s[c].
    BitMatrix permute_columns(const std::vector<std::size_t>& perm) const {
        assert(perm.size() == cols_);
        BitMatrix m(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) m.set(r, perm[c], true);
        return m;
    }

    std::size_t rank() const {
        BitMatrix m = *this;
        return m.eliminate_();
    }

    // Reduced row-echelon form; pivot columns appended to *pivots when given.
    BitMatrix rref(std::vector<std::size_t>* pivots = nullptr) const {
        BitMatrix m = *this;
        std::vector<std::size_t> piv;
        m.eliminate_(&piv);
        BitMatrix out(piv.size(), cols_);
        for (std::size_t i = 0; i < piv.size(); ++i)
            std::memcpy(out.row_ptr(i), m.row_ptr(i), wpr_ * sizeof(uint64_t));
        if (pivots) *pivots = piv;
        return out;
    }

    // Rows form a basis of the right kernel: this * r^T = 0 for each row r.
    BitMatrix kernel_basis() const {
        std::vector<std::size_t> piv;
        BitMatrix r = rref(&piv);
        std::vector<char> is_piv(cols_, 0);
        for (std::size_t p : piv) is_piv[p] = 1;
        std::size_t dim = cols_ - piv.size();
        BitMatrix k(dim, cols_);
        std::size_t out = 0;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_piv[f]) continue;
            k.set(out, f, true);
            for (std::size_t i = 0; i < piv.size(); ++i)
                if (r.get(i, f)) k.set(out, piv[i], true);
            ++out;
        }
        return k;
    }

private:
    std::size_t eliminate_(std::vector<std::size_t>* pivots = nullptr) {
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = rows_;
            for (std::size_t i = r; i < rows_; ++i)
                if (get(i, c)) { piv = i; break; }
            if (piv == rows_) continue;
            swap_rows(r, piv);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != r && get(i, c)) xor_rows(i, r);
            if (pivots) pivots->push_back(c);
            ++r;
        }
        return r;
    }

    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> w_;
};

// RREF basis of a row space, kept for repeated membership and reduction tests.
class RowBasis {
public:
    RowBasis() = default;
    explicit RowBasis(const BitMatrix& m) : cols_(m.cols()) { r_ = m.rref(&piv_); }

    std::size_t rank() const { return piv_.size(); }
    std::size_t cols() const { return cols_; }
    const BitMatrix& matrix() const { return r_; }

    // Reduces v against the basis in place; returns true when v ends up zero.
    bool reduce(BitVec& v) const {
        assert(v.size() == cols_);
        for (std::size_t i = 0; i < piv_.size(); ++i)
            if (v.get(piv_[i])) v.xor_in(r_.row(i));
        return v.is_zero();
    }
    bool contains(const BitVec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("RowBasis::contains: length mismatch");
        BitVec t = v;
        return reduce(t);
    }

private:
    std::size_t cols_ = 0;
    BitMatrix r_;
    std::vector<std::size_t> piv_;
};

inline bool row_space_contains(const BitMatrix& space, const BitVec& v) {
    return RowBasis(space).contains(v);
}

inline bool row_spans_equal(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) return false;
    std::size_t ra = a.rank(), rb = b.rank();
    return ra == rb && BitMatrix::vstack(a, b).rank() == ra;
}

// G with right-kernel(G) = rowspan(subspace_basis). Rows of G span the
// orthogonal complement, which is exactly the right kernel of the input.
inline BitMatrix cokernel_matrix(const BitMatrix& subspace_basis) {
    return subspace_basis.kernel_basis();
}

}  // namespace ccq
