// Seed derivation for reproducible Monte Carlo runs. Every sample/restart k
// draws from its own engine seeded by child_seed(master, k), so results do
// not depend on scheduling.
#pragma once

#include <cstdint>
#include <random>

namespace isoeof {

/// SplitMix64 finalizer (public-domain mixing constants).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

inline std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace isoeof
