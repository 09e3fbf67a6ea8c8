#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace ccq {

// Counter-based deterministic RNG (splitmix64 core). Streams are keyed by
// (seed, stream, counter) so parallel trial loops reproduce serial runs.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream = 0) {
        state_ = mix_(seed ^ 0x9e3779b97f4a7c15ull) ^ mix_(stream * 0xbf58476d1ce4e5b9ull + 0x94d049bb133111ebull);
        if (state_ == 0) state_ = 0x2545f4914f6cdd1dull;
    }

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix_(state_);
    }

    // Uniform in [0, n).
    uint64_t below(uint64_t n) {
        // 128-bit multiply rejection-free mapping is fine at these scales
        return (uint64_t)(((__uint128_t)next() * n) >> 64);
    }

    bool bit() { return next() >> 63; }

    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        for (std::size_t i = n; i > 1; --i) {
            std::size_t j = below(i);
            std::swap(p[i - 1], p[j]);
        }
        return p;
    }

private:
    static uint64_t mix_(uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t state_;
};

}  // namespace ccq
