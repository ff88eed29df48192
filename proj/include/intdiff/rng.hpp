#pragma once

#include <cstdint>

namespace intdiff {

// Deterministic splitmix64 generator. Not std::mt19937 + distributions:
// distribution output is implementation-defined, and reports produced
// under a fixed --seed must be byte-identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n >= 1
    std::uint64_t below(std::uint64_t n) {
        // multiply-shift; bias is < 2^-64 * n, irrelevant at our sizes
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // uniform in [lo, hi] inclusive
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

}  // namespace intdiff
