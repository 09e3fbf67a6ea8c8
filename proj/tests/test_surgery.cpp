#include <catch2/catch_amalgamated.hpp>

#include "ccq/rng.hpp"
#include "ccq/seed_io.hpp"
#include "ccq/surgery.hpp"

using namespace ccq;

namespace {

ConnectionCode identity_conn(const CcCode& cc) {
    return ConnectionCode::from_seeds(RingMatrix::identity(cc.p, cc.na),
                                      RingMatrix::identity(cc.p, cc.nb));
}

BitMatrix random_bits(std::size_t rows, std::size_t cols, Rng& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.bit()) m.set(r, c, true);
    return m;
}

// data HGP code plus a same-shape HGP connection, both from random seeds
struct HgpPair {
    CssCode data;
    ConnectionCode conn;
};
HgpPair random_hgp_pair(Rng& rng, std::size_t ma, std::size_t na, std::size_t mb, std::size_t nb) {
    HgpPair p;
    for (;;) {
        BitMatrix a = random_bits(ma, na, rng), b = random_bits(mb, nb, rng);
        p.data = hypergraph_product(a, b);
        if (p.data.k_log > 0) break;
    }
    BitMatrix ap = random_bits(ma, na, rng), bp = random_bits(mb, nb, rng);
    p.conn = ConnectionCode::from_seeds(ring_matrix_from_bits(ap),
                                        ring_matrix_from_bits(bp.transpose()));
    return p;
}

}  // namespace

TEST_CASE("merge_complex block shapes and CSS condition") {
    CcCode cc = builtin_code("cc_24_8_3");
    MergedCode m = merge_complex(cc.code, identity_conn(cc));
    CHECK(m.n_phys == 48);
    CHECK(m.bhx.rows() == 24);
    CHECK(m.bhx.cols() == 48);
    CHECK(m.bhz.rows() == 24);
    CHECK(m.bhx.multiply(m.bhz.transpose()).is_zero());

    // zero connection: two disjoint copies, no merges
    ConnectionCode z = ConnectionCode::zero_like(cc);
    MergedCode mz = merge_complex(cc.code, z);
    CHECK(mz.bhx.multiply(mz.bhz.transpose()).is_zero());
    CHECK(count_merges(cc.code, z) == 0);
}

TEST_CASE("merge_complex on random HGP data with random HGP connections") {
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        HgpPair p = random_hgp_pair(rng, 2, 3, 2, 3);
        MergedCode m = merge_complex(p.data, p.conn);
        CHECK(m.bhx.multiply(m.bhz.transpose()).is_zero());
        MergedCode mx = merge_complex(p.data, p.conn, MergeBasis::X);
        CHECK(mx.bhx.multiply(mx.bhz.transpose()).is_zero());
    }
}

TEST_CASE("count_merges on the worked 24-qubit examples") {
    CcCode cc = builtin_code("cc_24_8_3");
    CHECK(count_merges(cc.code, identity_conn(cc)) == 4);

    // H_a' = [[1,0],[1,0]], H_b' = 0: two merges
    RingMatrix hap = RingMatrix::zero(3, 2, 2);
    hap.at(0, 0) = RingElem::one(3);
    hap.at(1, 0) = RingElem::one(3);
    ConnectionCode c3 = ConnectionCode::from_seeds(hap, RingMatrix::zero(3, 2, 2));
    CHECK(count_merges(cc.code, c3) == 2);
}

TEST_CASE("image and rank formulas agree on all 256 connections") {
    CcCode cc = builtin_code("cc_24_8_3");
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = 0; b < 16; ++b) {
            ConnectionCode conn = connection_from_bits(cc, a, b);
            CHECK_NOTHROW(count_merges(cc.code, conn));            // internal agreement assert
            CHECK_NOTHROW(count_merges(cc.code, conn, MergeBasis::X));
        }
}

TEST_CASE("LP-level chi kernel also holds for seeds with kernel excess") {
    // left kernel of B(H_Z) is exactly the chi-cluster row span, even for the
    // 54-qubit code whose seed-level kernel is larger
    for (const char* label : {"cc_24_8_3", "cc_54_18_3"}) {
        CcCode cc = builtin_code(label);
        BitMatrix lk = cc.code.bhz.transpose().kernel_basis();
        BitMatrix chi_rows =
            RingMatrix::diag(RingElem::all_ones(cc.p), cc.na * cc.nb).binary_lift();
        CHECK(row_spans_equal(lk, chi_rows));
    }
}

TEST_CASE("merge_targets of the worked examples") {
    CcCode cc = builtin_code("cc_24_8_3");

    // identity connection: row i merges the i-th left and i-th right logicals
    std::vector<MergeTarget> t1 = merge_targets(cc, identity_conn(cc));
    REQUIRE(t1.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(t1[i].row == i);
        CHECK(t1[i].logicals == std::set<std::size_t>{i + 1, i + 5});
    }

    // H_a' = 0, H_b' = I: four single left-sector measurements
    ConnectionCode c2 = ConnectionCode::from_seeds(RingMatrix::zero(3, 2, 2),
                                                   RingMatrix::identity(3, 2));
    std::vector<MergeTarget> t2 = merge_targets(cc, c2);
    REQUIRE(t2.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(t2[i].logicals == std::set<std::size_t>{i + 1});

    // H_a' = [[1,0],[1,0]], H_b' = 0: right-sector pairs {1,3} and {2,4}
    RingMatrix hap = RingMatrix::zero(3, 2, 2);
    hap.at(0, 0) = RingElem::one(3);
    hap.at(1, 0) = RingElem::one(3);
    ConnectionCode c3 = ConnectionCode::from_seeds(hap, RingMatrix::zero(3, 2, 2));
    std::vector<MergeTarget> t3 = merge_targets(cc, c3);
    REQUIRE(t3.size() == 2);
    CHECK(t3[0].logicals == std::set<std::size_t>{5, 7});
    CHECK(t3[1].logicals == std::set<std::size_t>{6, 8});

    CHECK(merge_targets(cc, ConnectionCode::zero_like(cc)).empty());
}

TEST_CASE("merged_counts of the worked examples") {
    CcCode cc = builtin_code("cc_24_8_3");

    MergeReport r1 = merged_counts(cc, identity_conn(cc));
    CHECK(r1.merges == 4);
    CHECK(r1.k_tilde == 4);
    CHECK(r1.r_tilde == 4);
    CHECK(r1.maximally_parallel);

    RingMatrix hap = RingMatrix::zero(3, 2, 2);
    hap.at(0, 0) = RingElem::one(3);
    hap.at(1, 0) = RingElem::one(3);
    MergeReport r3 = merged_counts(cc, ConnectionCode::from_seeds(hap, RingMatrix::zero(3, 2, 2)));
    CHECK(r3.merges == 2);
    CHECK(r3.k_tilde == 6);
    CHECK(r3.r_tilde == 6);
    CHECK_FALSE(r3.maximally_parallel);

    MergeReport rz = merged_counts(cc, ConnectionCode::zero_like(cc));
    CHECK(rz.merges == 0);
    CHECK(rz.k_tilde == 8);
    CHECK(rz.r_tilde == 8);
}

TEST_CASE("maximally parallel iff M = n_a n_b, across the 256 connections") {
    CcCode cc = builtin_code("cc_24_8_3");
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = 0; b < 16; ++b) {
            ConnectionCode conn = connection_from_bits(cc, a, b);
            MergeReport r = merged_counts(cc, conn);
            CHECK(r.maximally_parallel == (r.merges == 4));
            CHECK(r.k_tilde == 8 - r.merges);
        }
}

TEST_CASE("is_compatible") {
    // cross-sector pairs always are
    for (std::size_t a = 1; a <= 4; ++a)
        for (std::size_t b = 5; b <= 8; ++b) CHECK(is_compatible(a, b, 2, 2));
    CHECK(is_compatible(1, 2, 2, 2));        // same grid row
    CHECK(is_compatible(1, 3, 2, 2));        // same grid column
    CHECK_FALSE(is_compatible(1, 4, 2, 2));  // diagonal
    CHECK_FALSE(is_compatible(2, 3, 2, 2));
    CHECK_FALSE(is_compatible(5, 8, 2, 2));
    CHECK_FALSE(is_compatible(3, 3, 2, 2));
}

TEST_CASE("pair_connection on the 24-qubit code") {
    CcCode cc = builtin_code("cc_24_8_3");

    PairConnection p15 = pair_connection(cc, 1, 5);
    CHECK(p15.pair == std::set<std::size_t>{1, 5});

    // right-sector pair aligned in the same grid column: the tabulated route
    PairConnection p57 = pair_connection(cc, 5, 7);
    CHECK(p57.conn.hb_p.at(0, 0).is_zero());
    bool matches_tabulated = p57.conn.ha_p.at(0, 0) == RingElem::one(3) &&
                           p57.conn.ha_p.at(1, 0) == RingElem::one(3);
    CHECK(matches_tabulated);

    CHECK_THROWS_AS(pair_connection(cc, 1, 4), IncompatiblePair);
    CHECK_THROWS_AS(pair_connection(cc, 6, 7), IncompatiblePair);

    // every compatible pair verifies its own realization
    for (std::size_t a = 1; a <= 8; ++a)
        for (std::size_t b = 1; b <= 8; ++b) {
            if (a == b) continue;
            if (!is_compatible(a, b, 2, 2)) continue;
            PairConnection pc = pair_connection(cc, a, b);
            CHECK(pc.pair == std::set<std::size_t>{a, b});
        }
}

TEST_CASE("pair_connection on a 18-logical code") {
    CcCode cc = builtin_code("cc_54_18_3");
    for (std::size_t a = 1; a <= 18; ++a)
        for (std::size_t b = a + 1; b <= 18; ++b) {
            if (!is_compatible(a, b, 3, 3)) continue;
            PairConnection pc = pair_connection(cc, a, b);
            CHECK(pc.pair == std::set<std::size_t>{a, b});
        }
}

TEST_CASE("surgery_trace stages are abelian with the right stage-2 gauge block") {
    CcCode cc = builtin_code("cc_24_8_3");
    SurgeryTrace tr = surgery_trace(cc.code, identity_conn(cc), 3);
    REQUIRE(tr.stages.size() == 3);
    CHECK(tr.d_rounds == 3);
    CHECK(tr.split_basis == 'X');

    // stage 2: right kernel of the auxiliary X block G equals im B(H_Z^*)
    const BitMatrix& x2 = tr.stages[1].stab_x;
    std::size_t n = cc.code.n_phys;
    BitMatrix g(x2.rows() - cc.code.bhx.rows(), n);
    for (std::size_t r = cc.code.bhx.rows(); r < x2.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            g.set(r - cc.code.bhx.rows(), c, x2.get(r, n + c));
    // subspace equality by mutual membership
    CHECK(row_spans_equal(g.kernel_basis(), cc.code.bhz));

    SurgeryTrace tz = surgery_trace(cc.code, ConnectionCode::zero_like(cc));
    CHECK(tz.stages.size() == 3);

    Rng rng(19);
    for (int t = 0; t < 5; ++t) {
        HgpPair p = random_hgp_pair(rng, 2, 3, 2, 3);
        CHECK_NOTHROW(surgery_trace(p.data, p.conn));
    }
}

TEST_CASE("block kernel dimension identity on random pairs") {
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        std::size_t m = 1 + rng.below(12), n = 1 + rng.below(12);
        BitMatrix a = random_bits(m, n, rng), b = random_bits(m, n, rng);
        std::size_t via_lemma = block_kernel_dim(a, b);
        BitMatrix blk = BitMatrix::block2x2(a, b, BitMatrix::zero(m, n), a);
        std::size_t direct = blk.kernel_basis().rows();
        CHECK(via_lemma == direct);
    }
}

TEST_CASE("HGP distance preservation, small property run") {
    // exhaustive merged Z-distance never drops below the data Z-distance
    Rng rng(29);
    int done = 0;
    while (done < 12) {
        HgpPair p = random_hgp_pair(rng, 2, 3, 2, 3);   // 13-qubit blocks
        LogicalSearchResult dz = exhaustive_logical_search(p.data.bhx, p.data.bhz, p.data.n_phys);
        REQUIRE(dz.found);
        if (dz.weight < 2) continue;
        MergedCode m = merge_complex(p.data, p.conn);
        LogicalSearchResult viol = exhaustive_logical_search(m.bhx, m.bhz, dz.weight - 1);
        CHECK_FALSE(viol.found);
        ++done;
    }
}

TEST_CASE("ft_scan exhaustive on the 24-qubit code") {
    CcCode cc = builtin_code("cc_24_8_3");
    FtScanOptions opt;
    opt.exhaustive = true;
    opt.jobs = 2;
    FtScanReport rep = ft_scan(cc, 3, opt);
    CHECK(rep.scanned == 256);
    CHECK(rep.all_pass());
    CHECK(rep.min_merged_distance == 3);
}

TEST_CASE("ft_scan rejects non-k8 codes; bad connections rejected before scan") {
    CcCode cc18 = builtin_code("cc_54_18_3");
    FtScanOptions opt;
    CHECK_THROWS(ft_scan(cc18, 3, opt));

    // a corrupted connection (shape mismatch) is rejected before any scan
    CcCode cc = builtin_code("cc_24_8_3");
    ConnectionCode bad = ConnectionCode::from_seeds(RingMatrix::identity(3, 3),
                                                    RingMatrix::identity(3, 3));
    CHECK_THROWS(merge_complex(cc.code, bad));
}

TEST_CASE("overhead_report") {
    CcCode cc136 = builtin_code("cc_136_8_14");
    OverheadReport r = overhead_report(cc136, 4, 14);
    CHECK(r.space == 272);
    CHECK(r.space_data == 136);
    CHECK(r.space_check == 136);
    CHECK(r.time_per_merge == 3.5);
    CHECK(r.spacetime == 952.0);
    CHECK_FALSE(r.extrapolated);

    // M = k/2 reproduces the 2d/k closed form
    CcCode cc24 = builtin_code("cc_24_8_3");
    OverheadReport r24 = overhead_report(cc24, 4, 3);
    CHECK(r24.time_per_merge == 2.0 * 3 / 8);
    CHECK(r24.spacetime == 48 * 0.75);

    OverheadReport sub = overhead_report(cc24, 2, 3);
    CHECK(sub.extrapolated);
    CHECK(sub.time_per_merge == 1.5);

    CHECK_THROWS(overhead_report(cc24, 0, 3));
    CHECK_THROWS(overhead_report(cc24, 5, 3));
}

TEST_CASE("boost census") {
    CcCode cc = builtin_code("cc_24_8_3");
    BoostReport rep = boost_census(cc);
    CHECK(rep.total_configs == 7192);
    CHECK(rep.boostable == 2404);   // reference census: 867; see the report note

    // the four cross-sector pairs of the largest-boost example are realizable
    RingMatrix hap = RingMatrix::zero(3, 2, 2);
    hap.at(0, 1) = RingElem::one(3);
    hap.at(1, 0) = RingElem::one(3);
    ConnectionCode conn = ConnectionCode::from_seeds(hap, RingMatrix::identity(3, 2));
    std::vector<MergeTarget> tg = merge_targets(cc, conn);
    std::set<std::set<std::size_t>> got;
    for (const auto& t : tg) got.insert(t.logicals);
    std::set<std::set<std::size_t>> want = {{1, 7}, {2, 8}, {3, 5}, {4, 6}};
    CHECK(got == want);

    CHECK_THROWS(boost_census(builtin_code("cc_54_18_3")));
}
