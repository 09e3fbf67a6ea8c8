#pragma once

#include <string>
#include <vector>

#include "ccq/codes.hpp"

namespace ccq {

enum class Sector { left, right };

struct ClusterRef {
    Sector sector;
    std::size_t position;   // 1..n_a*n_b within the sector
};

// Clustered logical basis: one representative per cluster, X and Z reps of
// logical i share the same weight-p cluster support.
struct LogicalBasis {
    std::size_t n = 0;          // physical qubits
    uint32_t p = 0;             // cluster size
    std::vector<BitVec> x_reps;
    std::vector<BitVec> z_reps;
    std::vector<ClusterRef> cluster_of;

    std::size_t count() const { return x_reps.size(); }
    // qubit range of logical i's cluster
    std::size_t cluster_start(std::size_t i) const { return i * p; }
};

inline LogicalBasis clustered_basis(const CcCode& cc) {
    LogicalBasis b;
    b.n = cc.code.n_phys;
    b.p = cc.p;
    std::size_t half = cc.na * cc.nb;
    for (std::size_t i = 0; i < 2 * half; ++i) {
        BitVec v(b.n);
        for (uint32_t q = 0; q < cc.p; ++q) v.set(i * cc.p + q, true);
        b.x_reps.push_back(v);
        b.z_reps.push_back(v);
        b.cluster_of.push_back({i < half ? Sector::left : Sector::right,
                                (i % half) + 1});
    }
    return b;
}

struct ClusteredReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string v) {
        ok = false;
        violations.push_back(std::move(v));
    }
};

// Checks the clustered-basis conditions plus logical membership:
//  1. each representative covers exactly one cluster of p consecutive qubits,
//  2. the X/Z anticommutation matrix is the identity and overlaps are
//     all-or-nothing at cluster granularity,
//  3. same-type representatives are disjoint,
//  4. reps commute with the opposite-type checks and are not stabilizers.
inline ClusteredReport verify_clustered(const LogicalBasis& b, const CcCode& cc) {
    ClusteredReport rep;
    std::size_t k = b.count();
    auto check_cluster = [&](const BitVec& v, std::size_t idx, const char* type) {
        if (v.weight() != b.p) {
            rep.fail(std::string(type) + " rep " + std::to_string(idx + 1) + ": weight != p");
            return;
        }
        std::size_t first = 0;
        while (first < v.size() && !v.get(first)) ++first;
        if (first % b.p != 0) {
            rep.fail(std::string(type) + " rep " + std::to_string(idx + 1) + ": not cluster aligned");
            return;
        }
        for (uint32_t q = 0; q < b.p; ++q)
            if (!v.get(first + q)) {
                rep.fail(std::string(type) + " rep " + std::to_string(idx + 1) + ": support not one full cluster");
                return;
            }
    };
    for (std::size_t i = 0; i < k; ++i) {
        check_cluster(b.x_reps[i], i, "X");
        check_cluster(b.z_reps[i], i, "Z");
    }

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            bool anti = b.x_reps[i].dot(b.z_reps[j]);
            if (anti != (i == j))
                rep.fail("anticommutation (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") != delta");
            // overlap must be a whole cluster or empty
            BitVec ov = b.x_reps[i];
            std::size_t w = 0;
            for (std::size_t q = 0; q < ov.size(); ++q)
                if (ov.get(q) && b.z_reps[j].get(q)) ++w;
            if (w != 0 && w != b.p)
                rep.fail("overlap (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") is partial");
        }

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool disjoint = true;
            for (std::size_t q = 0; q < b.n && disjoint; ++q)
                if (b.x_reps[i].get(q) && b.x_reps[j].get(q)) disjoint = false;
            if (!disjoint)
                rep.fail("same-type reps " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         " overlap");
        }

    RowBasis span_x(cc.code.bhx), span_z(cc.code.bhz);
    for (std::size_t i = 0; i < k; ++i) {
        if (!cc.code.bhz.apply_right(b.x_reps[i]).is_zero())
            rep.fail("X rep " + std::to_string(i + 1) + " anticommutes with a Z check");
        if (!cc.code.bhx.apply_right(b.z_reps[i]).is_zero())
            rep.fail("Z rep " + std::to_string(i + 1) + " anticommutes with an X check");
        if (span_x.contains(b.x_reps[i]))
            rep.fail("X rep " + std::to_string(i + 1) + " is a stabilizer");
        if (span_z.contains(b.z_reps[i]))
            rep.fail("Z rep " + std::to_string(i + 1) + " is a stabilizer");
    }

    if (k != cc.expected_k()) rep.fail("basis size != 2 n_a n_b");
    if (b.n != b.p * cc.clusters()) rep.fail("clusters do not cover all qubits");
    return rep;
}

}  // namespace ccq
