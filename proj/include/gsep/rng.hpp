#pragma once

#include <cstdint>

namespace gsep {

// SplitMix64: the fixed 64-bit generator used for every seeded corpus so that
// identical seeds reproduce identical graphs on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound must be positive. Uses rejection to stay
    // unbiased and platform-stable.
    std::uint64_t next_below(std::uint64_t bound);

    // Uniform double in [0, 1) with 53 bits of precision.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool next_bool() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

}  // namespace gsep
