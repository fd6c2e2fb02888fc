#pragma once

#include <cstdint>

namespace rrhash {

/// SplitMix64 (Steele, Lea, Flood 2014). Every keyed or seeded step in the
/// library draws from this generator so results are bit-identical across
/// platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound) by rejection; bound must be > 0.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Stateless 64-bit mix of a key and a value (one SplitMix64 step).
inline std::uint64_t mix64(std::uint64_t key, std::uint64_t value) noexcept {
    return SplitMix64(key ^ (value * 0xD1B54A32D192ED03ULL)).next();
}

}  // namespace rrhash
