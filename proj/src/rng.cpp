#include "gsep/rng.hpp"

namespace gsep {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

}  // namespace gsep
