#pragma once

#include <cstdint>
#include <random>

namespace crp {

/// Random source used across the library. State is owned by the caller and
/// passed by reference into anything that draws.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Per-instance seed derived from a master seed, so batch results do not
/// depend on worker scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

inline Rng make_rng(std::uint64_t seed) {
    return Rng(seed);
}

/// Uniform integer in [0, n).
inline int uniform_below(Rng& rng, int n) {
    return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng));
}

}  // namespace crp
