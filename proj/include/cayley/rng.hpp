#pragma once

// Seedable, reproducible randomness for experiments.
//
// All experiment code derives per-trial seeds with derive_seed(master, i)
// so results do not depend on scheduling or trial order. The stream
// generator is std::mt19937_64 seeded with a splitmix64-mixed value.

#include <cstdint>
#include <random>
#include <vector>

namespace cayley {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 1));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(splitmix64(seed));
}

inline std::vector<std::uint8_t> random_bits(std::mt19937_64& rng,
                                             std::size_t n) {
    std::vector<std::uint8_t> bits(n);
    std::uint64_t word = 0;
    int left = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (left == 0) {
            word = rng();
            left = 64;
        }
        bits[i] = static_cast<std::uint8_t>(word & 1);
        word >>= 1;
        --left;
    }
    return bits;
}

}  // namespace cayley
