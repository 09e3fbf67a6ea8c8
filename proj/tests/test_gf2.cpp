#include <catch2/catch_amalgamated.hpp>

#include "ccq/bitmatrix.hpp"
#include "ccq/ring.hpp"
#include "ccq/rng.hpp"
#include "ccq/seed_io.hpp"

using namespace ccq;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.bit()) m.set(r, c, true);
    return m;
}

// The worked 2x2 lift over l=3, as printed.
BitMatrix printed_lift_example() {
    const char* rows[6] = {
        "100110", "010011", "001101",
        "001011", "100101", "010110",
    };
    BitMatrix m(6, 6);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c)
            if (rows[r][c] == '1') m.set(r, c, true);
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(BitMatrix::identity(5).rank() == 5);
    CHECK(BitMatrix::zero(3, 7).rank() == 0);
    // lifted 2x2 worked example reduces to rank 5
    CHECK(printed_lift_example().rank() == 5);
}

TEST_CASE("kernel basis") {
    CHECK(BitMatrix::identity(4).kernel_basis().rows() == 0);

    BitMatrix z = BitMatrix::zero(2, 3);
    BitMatrix k = z.kernel_basis();
    CHECK(k.rows() == 3);
    CHECK(k.rank() == 3);

    // kernel of the lifted [[24,8,3]] seed H_a spans the lift of diag_2(chi)
    const SeedDocument& d = builtin_seed("cc_24_8_3");
    BitMatrix bha = d.ha_matrix().binary_lift();
    BitMatrix ker = bha.kernel_basis();
    CHECK(ker.rows() == 2);
    BitMatrix chi_rows = RingMatrix::diag(RingElem::all_ones(3), 2).binary_lift();
    CHECK(row_spans_equal(ker, chi_rows));
}

TEST_CASE("kernel rows annihilate and are independent") {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        BitMatrix m = random_matrix(1 + rng.below(20), 1 + rng.below(20), rng);
        BitMatrix k = m.kernel_basis();
        CHECK(k.rank() == k.rows());
        for (std::size_t r = 0; r < k.rows(); ++r)
            CHECK(m.apply_right(k.row(r)).is_zero());
    }
}

TEST_CASE("row space membership") {
    CHECK(row_space_contains(BitMatrix::identity(3), BitVec::from_string("101")));
    CHECK_FALSE(row_space_contains(BitMatrix::zero(2, 3), BitVec::from_string("100")));
    CHECK_THROWS(row_space_contains(BitMatrix::identity(3), BitVec(4)));

    // the first clustered Z logical of [[12,4,3]] is not a stabilizer
    const SeedDocument& d24 = builtin_seed("cc_24_8_3");
    RingMatrix ha(3, 2, 2), hb(3, 1, 1);
    ha.at(0, 0) = parse_poly("1+x", 3);
    ha.at(0, 1) = parse_poly("1+x^2", 3);
    ha.at(1, 0) = parse_poly("1+x^2", 3);
    ha.at(1, 1) = parse_poly("1+x", 3);
    hb.at(0, 0) = parse_poly("1+x", 3);
    (void)d24;
    CssCode c = lifted_product(ha, hb);
    BitVec zbar(12);
    for (int q = 0; q < 3; ++q) zbar.set(q, true);
    CHECK(c.bhx.apply_right(zbar).is_zero());
    CHECK_FALSE(row_space_contains(c.bhz, zbar));
}

TEST_CASE("cokernel matrix") {
    // full space: no constraints
    CHECK(cokernel_matrix(BitMatrix::identity(4)).rows() == 0);
    // zero subspace (empty basis): G = identity
    BitMatrix g0 = cokernel_matrix(BitMatrix::zero(0, 5));
    CHECK(g0.rows() == 5);
    CHECK(row_spans_equal(g0, BitMatrix::identity(5)));

    BitMatrix s(2, 3);
    s.set(0, 0, true); s.set(0, 1, true);
    s.set(1, 1, true); s.set(1, 2, true);
    BitMatrix g = cokernel_matrix(s);
    REQUIRE(g.rows() == 1);
    CHECK(g.row(0) == BitVec::from_string("111"));
    // exhaustive over F2^3: ker G == rowspan(s)
    RowBasis span(s);
    for (unsigned v = 0; v < 8; ++v) {
        BitVec x(3);
        for (int b = 0; b < 3; ++b) if ((v >> b) & 1) x.set(b, true);
        bool in_ker = g.apply_right(x).is_zero();
        CHECK(in_ker == span.contains(x));
    }
}

TEST_CASE("cokernel of kernel, exhaustive small") {
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        std::size_t cols = 2 + rng.below(10);      // <= 12 columns
        BitMatrix m = random_matrix(1 + rng.below(8), cols, rng);
        BitMatrix k = m.kernel_basis();
        BitMatrix g = cokernel_matrix(k);
        RowBasis span(k);
        for (uint64_t v = 0; v < (uint64_t(1) << cols); ++v) {
            BitVec x(cols);
            for (std::size_t b = 0; b < cols; ++b) if ((v >> b) & 1) x.set(b, true);
            CHECK(g.apply_right(x).is_zero() == span.contains(x));
        }
    }
}

TEST_CASE("multiply, transpose, stacking") {
    Rng rng(3);
    BitMatrix a = random_matrix(20, 20, rng);
    BitMatrix b = random_matrix(20, 20, rng);
    CHECK(a.multiply(BitMatrix::identity(20)) == a);
    CHECK(a.multiply(b).transpose() == b.transpose().multiply(a.transpose()));

    // block2x2 of the [[24,8,3]] check blocks is 24x48
    CcCode cc = builtin_code("cc_24_8_3");
    BitMatrix z12 = BitMatrix::zero(12, 24);
    BitMatrix blk = BitMatrix::block2x2(cc.code.bhx, cc.code.bhx, z12, cc.code.bhx);
    CHECK(blk.rows() == 24);
    CHECK(blk.cols() == 48);
}

TEST_CASE("rank-nullity on random matrices") {
    Rng rng(5);
    for (int t = 0; t < 1000; ++t) {
        std::size_t rows = 1 + rng.below(64), cols = 1 + rng.below(64);
        BitMatrix m = random_matrix(rows, cols, rng);
        CHECK(m.rank() + m.kernel_basis().rows() == cols);
    }
}
