#pragma once

#include <cstdint>
#include <random>

namespace rotorlab {

// All randomized baselines draw from this engine with Lemire bounded
// sampling; std::uniform_int_distribution is implementation-defined, so
// using it would make seeded fixtures non-portable across standard
// libraries.
inline std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

// Uniform draw from {0,...,bound-1} (Lemire multiply-shift rejection).
inline std::uint32_t bounded_draw(std::mt19937_64& gen, std::uint32_t bound) {
    std::uint64_t x = static_cast<std::uint32_t>(gen());
    std::uint64_t m = x * bound;
    auto low = static_cast<std::uint32_t>(m);
    if (low < bound) {
        const std::uint32_t threshold = (0u - bound) % bound;
        while (low < threshold) {
            x = static_cast<std::uint32_t>(gen());
            m = x * bound;
            low = static_cast<std::uint32_t>(m);
        }
    }
    return static_cast<std::uint32_t>(m >> 32);
}

}  // namespace rotorlab
