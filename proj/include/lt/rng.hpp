#pragma once

#include <cmath>
#include <cstdint>

namespace lt::rng {

// Counter-based generator: every draw is a pure function of
// (seed, stream, counter), so evaluation order and threading cannot change
// the sample sequence. The word function chains splitmix64 finalizers.

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t word(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return splitmix64(seed ^ splitmix64(stream ^ splitmix64(counter)));
}

/// Uniform double in [0, 1).
inline double u01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return static_cast<double>(word(seed, stream, counter) >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller on two counter words.
inline double gaussian(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    double u1 = u01(seed, stream, 2 * counter);
    double u2 = u01(seed, stream, 2 * counter + 1);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692528676655900577 * u2);
}

}  // namespace lt::rng
