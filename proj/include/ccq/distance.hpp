#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "ccq/bitmatrix.hpp"
#include "ccq/codes.hpp"
#include "ccq/parallel.hpp"
#include "ccq/rng.hpp"

namespace ccq {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LogicalSearchResult {
    bool found = false;
    std::size_t weight = 0;
    BitVec witness;
    uint64_t hits_at_min = 0;   // number of times a min-weight logical was encountered
};

namespace detail {

inline double combinations(std::size_t n, std::size_t k) {
    double c = 1;
    for (std::size_t i = 0; i < k; ++i) c = c * double(n - i) / double(i + 1);
    return c;
}

}  // namespace detail

// Exhaustive search for a logical of one type: minimum-weight v with
// kernel_of * v^T = 0 and v outside rowspan(coset_space). Enumerates supports
// by ascending weight; a hit at weight w after exhausting w' < w certifies w.
inline LogicalSearchResult exhaustive_logical_search(const BitMatrix& kernel_of,
                                                     const BitMatrix& coset_space,
                                                     std::size_t max_weight,
                                                     double budget = 1e10) {
    const std::size_t n = kernel_of.cols();
    double total = 0;
    for (std::size_t w = 1; w <= max_weight; ++w) total += detail::combinations(n, w);
    if (total > budget)
        throw BudgetExceeded("exhaustive search budget exceeded: ~" + std::to_string(total) +
                             " supports");

    RowBasis coset(coset_space);
    const std::size_t rows = kernel_of.rows();
    const std::size_t sw = (rows + 63) / 64;
    // column syndromes
    std::vector<std::vector<uint64_t>> col(n, std::vector<uint64_t>(sw, 0));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (kernel_of.get(r, c)) col[c][r >> 6] ^= uint64_t(1) << (r & 63);

    std::vector<uint64_t> acc(sw, 0);
    std::vector<std::size_t> idx;
    LogicalSearchResult res;

    auto is_zero = [&] {
        for (uint64_t w : acc) if (w) return false;
        return true;
    };
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
        if (depth == 0) {
            if (!is_zero()) return false;
            BitVec v(n);
            for (std::size_t c : idx) v.set(c, true);
            if (coset.contains(v)) return false;   // stabilizer, keep looking
            res.found = true;
            res.weight = idx.size();
            res.witness = v;
            return true;
        }
        for (std::size_t c = start; c + depth <= n; ++c) {
            for (std::size_t i = 0; i < sw; ++i) acc[i] ^= col[c][i];
            idx.push_back(c);
            if (rec(depth - 1, c + 1)) return true;
            idx.pop_back();
            for (std::size_t i = 0; i < sw; ++i) acc[i] ^= col[c][i];
        }
        return false;
    };

    for (std::size_t w = 1; w <= max_weight; ++w)
        if (rec(w, 0)) return res;
    return res;
}

// Information-set style randomized search: per trial, randomly permute the
// columns of a kernel basis, row-reduce, and record low-weight rows that are
// logical. Deterministic given (seed, trial index), so parallel == serial.
inline LogicalSearchResult randomized_logical_search(const BitMatrix& kernel_of,
                                                     const BitMatrix& coset_space,
                                                     uint64_t trials, uint64_t seed,
                                                     unsigned jobs = 1,
                                                     std::optional<std::size_t> upper_witness = {}) {
    const std::size_t n = kernel_of.cols();
    BitMatrix gen = kernel_of.kernel_basis();
    RowBasis coset(coset_space);

    std::atomic<std::size_t> cur_min{upper_witness ? *upper_witness : n + 1};
    std::mutex mu;
    std::map<std::size_t, uint64_t> hits;
    BitVec best_witness;

    auto trial = [&](std::size_t t) {
        Rng rng(seed, t);
        std::vector<std::size_t> perm = rng.permutation(n);
        BitMatrix work = gen.permute_columns(perm);
        std::vector<std::size_t> piv;
        BitMatrix r = work.rref(&piv);
        std::vector<std::size_t> inv(n);
        for (std::size_t c = 0; c < n; ++c) inv[perm[c]] = c;
        std::size_t snap = cur_min.load(std::memory_order_relaxed);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            std::size_t w = r.row_weight(i);
            if (w == 0 || w > snap) continue;
            BitVec v = r.row(i);
            BitVec orig(n);
            for (std::size_t c = 0; c < n; ++c)
                if (v.get(c)) orig.set(inv[c], true);
            if (coset.contains(orig)) continue;   // stabilizer row
            std::lock_guard<std::mutex> lk(mu);
            hits[w] += 1;
            std::size_t m = cur_min.load(std::memory_order_relaxed);
            while (w < m && !cur_min.compare_exchange_weak(m, w)) {}
            if (w <= cur_min.load(std::memory_order_relaxed)) best_witness = orig;
        }
    };
    parallel_for(trials, jobs, trial);

    LogicalSearchResult res;
    std::size_t m = cur_min.load();
    if (m <= n) {
        res.found = true;
        res.weight = m;
        res.hits_at_min = hits.count(m) ? hits[m] : 0;
        res.witness = best_witness;
    }
    return res;
}

// Distance report for one CSS code. d_* are upper bounds; `exhaustive`
// certifies equality. Confidence follows the e^{-n_bar} bound of randomized
// information-set search.
struct DistanceEstimate {
    bool has_logicals = true;
    int d_x = -1, d_z = -1;
    double n_bar_x = 0, n_bar_z = 0;
    double fail_bound_x = 1, fail_bound_z = 1;
    uint64_t trials = 0;
    uint64_t rng_seed = 0;
    bool exhaustive = false;

    int d() const {
        if (d_x < 0) return d_z;
        if (d_z < 0) return d_x;
        return d_x < d_z ? d_x : d_z;
    }
};

inline DistanceEstimate exhaustive_distance(const CssCode& code, std::size_t weight_cap,
                                            double budget = 1e10) {
    DistanceEstimate est;
    est.exhaustive = true;
    if (code.k_log == 0) {
        est.has_logicals = false;
        return est;
    }
    // d_z: min-weight element of ker B(H_X) outside rowspan B(H_Z)
    LogicalSearchResult z = exhaustive_logical_search(code.bhx, code.bhz, weight_cap, budget);
    LogicalSearchResult x = exhaustive_logical_search(code.bhz, code.bhx, weight_cap, budget);
    est.d_z = z.found ? int(z.weight) : -1;
    est.d_x = x.found ? int(x.weight) : -1;
    return est;
}

inline DistanceEstimate randomized_distance(const CssCode& code, uint64_t trials, uint64_t seed,
                                            unsigned jobs = 1,
                                            std::optional<std::size_t> upper_witness = {}) {
    if (trials < 1) throw std::invalid_argument("randomized_distance: trials >= 1 required");
    DistanceEstimate est;
    est.trials = trials;
    est.rng_seed = seed;
    if (code.k_log == 0) {
        est.has_logicals = false;
        return est;
    }
    LogicalSearchResult z = randomized_logical_search(code.bhx, code.bhz, trials, seed * 2 + 0,
                                                      jobs, upper_witness);
    LogicalSearchResult x = randomized_logical_search(code.bhz, code.bhx, trials, seed * 2 + 1,
                                                      jobs, upper_witness);
    est.d_z = z.found ? int(z.weight) : -1;
    est.d_x = x.found ? int(x.weight) : -1;
    est.n_bar_z = double(z.hits_at_min);
    est.n_bar_x = double(x.hits_at_min);
    est.fail_bound_z = std::exp(-est.n_bar_z);
    est.fail_bound_x = std::exp(-est.n_bar_x);
    return est;
}

// CC codes carry a weight-p witness (the clustered representatives), so the
// randomized estimate is capped at p from the start.
inline DistanceEstimate randomized_distance_cc(const CcCode& cc, uint64_t trials, uint64_t seed,
                                               unsigned jobs = 1) {
    return randomized_distance(cc.code, trials, seed, jobs, cc.p);
}

}  // namespace ccq
