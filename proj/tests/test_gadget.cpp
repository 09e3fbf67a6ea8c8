#include <catch2/catch_amalgamated.hpp>

#include "ccq/toolbox.hpp"

using namespace ccq;
using namespace ccq::gadget;

TEST_CASE("cz-s fold gate") {
    CzSReport rep = verify_cz_s();
    CHECK(rep.identity_zero);
    CHECK(rep.group_preserved);
    CHECK(rep.logical_matches);
    CHECK(rep.squares_to_z_pattern);
    CHECK(rep.zero_state_fixed);
    CHECK(rep.phase_labels_verified);
}

TEST_CASE("automorphism gates") {
    auto reports = verify_automorphisms();
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
        INFO(r.name);
        CHECK(r.spans_preserved);
        CHECK(r.logical_matches);
    }
    // Aut(2) = SWAP(2,3) SWAP(6,7), an involution
    CHECK(reports[1].logical_perm == std::vector<std::size_t>{0, 2, 1, 3, 4, 6, 5, 7});
    CHECK(reports[1].involution_ok);
    // Aut(3) = SWAP(5,3) SWAP(8,2)
    CHECK(reports[2].logical_perm == std::vector<std::size_t>{0, 7, 4, 3, 2, 5, 6, 1});
}

TEST_CASE("h-swap fold gate") {
    PermGateReport rep = verify_h_swap();
    CHECK(rep.spans_preserved);
    CHECK(rep.logical_matches);
}

TEST_CASE("tabulated schedule 62x84 verifies over every branch") {
    ScheduleReport rep = run_cnot_schedule("62x84");
    CHECK(rep.connections_valid);
    CHECK(rep.verified);
    CHECK(rep.branches == 1024);
    CHECK(rep.frame_rule_affine);
    REQUIRE(rep.gadget_labels.size() == 2);
    CHECK(rep.gadget_labels[0] == "CNOT(6->2) via aux 5");
    CHECK(rep.gadget_labels[1] == "CNOT(8->4) via aux 7");
}

TEST_CASE("schedule 26x48 finds automorphism words and verifies") {
    ScheduleReport rep = run_cnot_schedule("26x48");
    CHECK(rep.verified);
    CHECK(rep.frame_rule_affine);
}

TEST_CASE("single-target schedule 2to4 verifies") {
    ScheduleReport rep = run_cnot_schedule("2to4");
    CHECK(rep.verified);
}

TEST_CASE("paired phase gadget, direct and routed") {
    SisjReport direct = verify_sisj_gadget(4, 8);
    CHECK(direct.verified);
    CHECK_FALSE(direct.used_composition);

    SisjReport routed = verify_sisj_gadget(2, 6);
    CHECK(routed.verified);

    // inverse pair composes to the identity channel at this level
    SisjReport inv = verify_sisj_gadget(8, 4);
    CHECK(inv.verified);
}

TEST_CASE("simplified global hadamard") {
    GlobalHReport rep = simplified_global_hadamard();
    CHECK(rep.word_composition_is_global_h);
    CHECK(rep.encoded_state_check);
    // the tabulated simplified physical word is the reverse-order composite and
    // carries an extra logical SWAP pair
    CHECK(rep.tabulated_word_matches_reverse_order);
    CHECK_FALSE(rep.tabulated_word_is_pure_global_h);
    CHECK(rep.tabulated_word_logical_perm == std::vector<std::size_t>{0, 2, 1, 3, 7, 5, 6, 4});
    CHECK_FALSE(rep.corrected_physical_word.empty());
}

TEST_CASE("toolbox certificate aggregates every verification") {
    ToolboxCertificate c = clifford_toolbox_certificate();
    CHECK(c.cz_s);
    CHECK(c.automorphisms);
    CHECK(c.h_swap);
    CHECK(c.global_h);
    CHECK(c.ppm_cnot_rule);
    CHECK(c.schedules_verified == c.schedules_total);
    CHECK(c.schedules_total == 12);
    CHECK(c.sisj_verified == 12);
    CHECK(c.m3_closure.full);
    CHECK(c.m3_without_paired_phase_proper);
    CHECK(c.m4_constructive.full);
    CHECK(c.ok());
}
