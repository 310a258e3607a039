#pragma once

#include <cstdint>

#include "ghwforge/errors.hpp"

namespace ghwforge {

// SplitMix64 (Steele/Lea/Vigna). State advances by the golden gamma
// 0x9E3779B97F4A7C15; the output is the finalized state:
//   z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27; z *= 0x94D049BB133111EB;
//   z ^= z >> 31;
// Chosen because the recurrence is tiny enough to restate in a README and
// reproduces bit-for-bit across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound), unbiased via rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw BadDimsError("below(0) is undefined");
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace ghwforge
