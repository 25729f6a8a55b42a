#pragma once

#include "qmod/rational.hpp"

#include <cstdint>

namespace qmod {

// Deterministic splitmix64 generator. Used for all seeded property probes so
// reports are byte-identical for a given seed on every platform (no reliance
// on std::uniform_int_distribution, whose output is implementation-defined).
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Inclusive range; slight modulo bias is irrelevant for test probes.
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(int num, int den) { return uniform(1, den) <= num; }

    // Nonzero rational with small numerator/denominator.
    Rational small_rational(int max_abs_num = 4, int max_den = 3) {
        int num = uniform(1, max_abs_num) * (chance(1, 2) ? 1 : -1);
        int den = uniform(1, max_den);
        return Rational(num, den);
    }

private:
    std::uint64_t state_;
};

} // namespace qmod
