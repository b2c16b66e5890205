#pragma once

#include <cstdint>

namespace dynred {

// Deterministic 64-bit generator (splitmix64). Every piece of workbench
// randomness flows through this type, so a fixed seed gives bit-identical
// instances independent of platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, n). n must be nonzero.
    std::uint64_t uniform(std::uint64_t n) {
        // rejection sampling over the largest multiple of n
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform double in [0, 1), 53 bits of precision.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    // Independent sub-stream, e.g. one per instance in a sweep.
    Rng fork() { return Rng(next_u64() ^ 0xd1b54a32d192ed03ULL); }

private:
    std::uint64_t state_;
};

} // namespace dynred
